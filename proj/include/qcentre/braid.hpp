#pragma once

// Lusztig's braid automorphisms T_i and PBW root vectors.

#include <map>
#include <vector>

#include "qcentre/uqalg.hpp"

namespace qcentre {

/// E_i^m / [m]_i! as an element of U.
inline AlgebraElement divided_power_E(const QuantumGroup& qg, int i, int m)
{
    return qg.E_word(Word(static_cast<std::size_t>(m), static_cast<char>(i))) *
           q_factorial(m, qg.datum().d(i), qg.unit()).inverse();
}

inline AlgebraElement divided_power_F(const QuantumGroup& qg, int i, int m)
{
    return qg.F_word(Word(static_cast<std::size_t>(m), static_cast<char>(i))) *
           q_factorial(m, qg.datum().d(i), qg.unit()).inverse();
}

/// T_i(E_i) = -K_i^{-1} F_i, T_i(F_i) = -E_i K_i, T_i(K_mu) = K_{s_i mu},
/// T_i(E_j) = sum_{r+s=a} (-1)^r q_i^{-r} E_i^{(r)} E_j E_i^{(s)},
/// T_i(F_j) = sum_{r+s=a} (-1)^r q_i^{r} F_i^{(s)} F_j F_i^{(r)},  a = -a_ij.
/// This is the inverse of the automorphism with E_i -> -F_i K_i,
/// F_i -> -K_i^{-1} E_i.
class BraidAction {
public:
    explicit BraidAction(const QuantumGroup& qg) : qg_(qg)
    {
        const CartanDatum& d = qg.datum();
        const int n = d.rank();
        te_.resize(static_cast<std::size_t>(n));
        tf_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const Weight& ai = d.simple_root(i);
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    te_[i].push_back(-qg.multiply(qg.K(-ai), qg.F(i)));
                    tf_[i].push_back(-qg.multiply(qg.E(i), qg.K(ai)));
                    continue;
                }
                const int a = -d.a(i, j);
                AlgebraElement e, f;
                for (int r = 0; r <= a; ++r) {
                    QScalar sign(r % 2 ? -1 : 1);
                    QScalar ce = sign * QScalar::vpow(-r * d.qi_v(i));
                    QScalar cf = sign * QScalar::vpow(r * d.qi_v(i));
                    e += qg.multiply({divided_power_E(qg, i, r), qg.E(j), divided_power_E(qg, i, a - r)}) * ce;
                    f += qg.multiply({divided_power_F(qg, i, a - r), qg.F(j), divided_power_F(qg, i, r)}) * cf;
                }
                te_[i].push_back(e);
                tf_[i].push_back(f);
            }
        }
    }

    const AlgebraElement& on_E(int i, int j) const { return te_[idx(i)][idx(j)]; }
    const AlgebraElement& on_F(int i, int j) const { return tf_[idx(i)][idx(j)]; }

    AlgebraElement apply(int i, const Monomial& m) const
    {
        const CartanDatum& d = qg_.datum();
        AlgebraElement r = qg_.one();
        for (char c : m.f) r = qg_.multiply(r, on_F(i, c));
        if (!m.k.is_zero()) r = qg_.multiply(r, qg_.K(d.simple_reflection(i, m.k)));
        for (char c : m.e) r = qg_.multiply(r, on_E(i, c));
        return r;
    }

    AlgebraElement apply(int i, const AlgebraElement& x) const
    {
        AlgebraElement out;
        for (const auto& [m, c] : x.terms()) out += apply(i, m) * c;
        return out;
    }

private:
    const QuantumGroup& qg_;
    std::vector<std::vector<AlgebraElement>> te_;
    std::vector<std::vector<AlgebraElement>> tf_;

    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
};

inline AlgebraElement lusztig_T(const QuantumGroup& qg, int i, const AlgebraElement& x)
{
    return BraidAction(qg).apply(i, x);
}

/// Part of x with empty F-block and trivial K (the U^+ component).
inline AlgebraElement positive_part(const AlgebraElement& x)
{
    AlgebraElement out;
    for (const auto& [m, c] : x.terms())
        if (m.f.empty() && m.k.is_zero()) out.add(m, c);
    return out;
}

/// Part of x with empty E-block and trivial K (the U^- component).
inline AlgebraElement negative_part(const AlgebraElement& x)
{
    AlgebraElement out;
    for (const auto& [m, c] : x.terms())
        if (m.e.empty() && m.k.is_zero()) out.add(m, c);
    return out;
}

struct RootVectorTable {
    ReducedWord word;
    std::vector<Weight> roots;        // beta_1 .. beta_N
    std::vector<long> qbeta;          // q_beta = q^{qbeta[r]}
    std::vector<AlgebraElement> evecs;
    std::vector<AlgebraElement> fvecs;

    int size() const { return static_cast<int>(roots.size()); }
};

/// E_{beta_r} = T_{i_1} ... T_{i_{r-1}} (E_{i_r}), likewise for F.  Every
/// partial composition lies in U^+ (resp. U^-), so after each step the
/// expansion is projected onto that component, which discards the terms
/// that cancel by the triangular decomposition.
inline RootVectorTable root_vectors(const QuantumGroup& qg, const ReducedWord& word)
{
    const CartanDatum& d = qg.datum();
    RootVectorTable t;
    t.word = word;
    t.roots = d.positive_roots(word);
    BraidAction br(qg);
    for (std::size_t r = 0; r < word.letters.size(); ++r) {
        AlgebraElement e = qg.E(word.letters[r]);
        AlgebraElement f = qg.F(word.letters[r]);
        for (std::size_t k = r; k-- > 0;) {
            e = positive_part(br.apply(word.letters[k], e));
            f = negative_part(br.apply(word.letters[k], f));
        }
        t.evecs.push_back(std::move(e));
        t.fvecs.push_back(std::move(f));
        t.qbeta.push_back(d.root_d(t.roots[r]));
    }
    return t;
}

inline RootVectorTable root_vectors(const QuantumGroup& qg)
{
    return root_vectors(qg, qg.datum().default_reduced_word());
}

} // namespace qcentre
