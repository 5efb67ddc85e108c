#pragma once

// Finite-dimensional weight modules and the action of U on them.

#include <map>
#include <optional>
#include <vector>

#include "qcentre/linalg.hpp"
#include "qcentre/uqalg.hpp"

namespace qcentre {

/// Type-1 weight module: K_mu acts on basis vector b by q^{(wt b, mu)}.
struct WeightModule {
    std::vector<Weight> weights;  // weight of each basis vector
    std::vector<Matrix> e;        // action of E_i
    std::vector<Matrix> f;        // action of F_i
    std::optional<Weight> highest_weight;
    std::string label;

    int dim() const { return static_cast<int>(weights.size()); }
    int rank() const { return static_cast<int>(e.size()); }
};

/// Matrix of K_mu on M.
inline Matrix k_matrix(const QuantumGroup& qg, const WeightModule& m, const Weight& mu)
{
    std::vector<QScalar> d;
    d.reserve(m.weights.size());
    for (const auto& w : m.weights) d.push_back(qg.q_inner(w, mu));
    return Matrix::diagonal(d);
}

/// Diagonal matrix of K_{2 rho}.
inline Matrix k2rho_matrix(const QuantumGroup& qg, const WeightModule& m)
{
    return k_matrix(qg, m, 2 * qg.datum().rho());
}

/// Projection onto the weight space of weight mu.
inline Matrix weight_projection(const WeightModule& m, const Weight& mu)
{
    Matrix p(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        if (m.weights[static_cast<std::size_t>(i)] == mu) p.set(i, i, QScalar(1));
    return p;
}

/// Representation map U -> End(M) with memoised word matrices.
class Evaluator {
public:
    Evaluator(const QuantumGroup& qg, const WeightModule& m) : qg_(qg), m_(m)
    {
        if (m.rank() != qg.rank()) throw PreconditionError("module rank differs from the algebra rank");
    }

    const WeightModule& module() const { return m_; }

    const Matrix& f_word(const Word& w) { return word(w, fcache_, m_.f); }
    const Matrix& e_word(const Word& w) { return word(w, ecache_, m_.e); }

    Matrix k(const Weight& mu) const { return k_matrix(qg_, m_, mu); }

    Matrix operator()(const Monomial& mono)
    {
        Matrix r = f_word(mono.f);
        if (!mono.k.is_zero()) r = r * k(mono.k);
        return r * e_word(mono.e);
    }

    Matrix operator()(const AlgebraElement& x)
    {
        // group terms sharing the F word and K weight, then sum their E parts
        Matrix out(m_.dim(), m_.dim());
        std::map<std::pair<Word, Weight>, Matrix> groups;
        for (const auto& [mono, c] : x.terms()) {
            auto key = std::make_pair(mono.f, mono.k);
            auto it = groups.find(key);
            if (it == groups.end()) it = groups.emplace(key, Matrix(m_.dim(), m_.dim())).first;
            Matrix ew = e_word(mono.e);
            it->second += ew * c;
        }
        for (const auto& [key, em] : groups) {
            if (em.is_zero()) continue;
            Matrix left = f_word(key.first);
            if (!key.second.is_zero()) left = left * k(key.second);
            out += left * em;
        }
        return out;
    }

    /// Action of a pure tensor a (x) b on this module tensored with another.
    static Matrix tensor_action(Evaluator& left, Evaluator& right, const TensorElement& t)
    {
        const int n = left.m_.dim() * right.m_.dim();
        Matrix out(n, n);
        for (const auto& [k, c] : t.terms()) {
            Matrix a = left(k.first);
            if (a.is_zero()) continue;
            Matrix b = right(k.second);
            if (b.is_zero()) continue;
            out += Matrix::kron(a, b) * c;
        }
        return out;
    }

private:
    const QuantumGroup& qg_;
    const WeightModule& m_;
    std::map<Word, Matrix> fcache_;
    std::map<Word, Matrix> ecache_;

    const Matrix& word(const Word& w, std::map<Word, Matrix>& cache, const std::vector<Matrix>& gens)
    {
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        Matrix r;
        if (w.empty()) {
            r = Matrix::identity(m_.dim());
        } else {
            const std::size_t i = static_cast<std::size_t>(w.back());
            if (i >= gens.size()) throw PreconditionError("generator index out of range for module");
            r = word(w.substr(0, w.size() - 1), cache, gens);
            if (!r.is_zero()) r = r * gens[i];
        }
        return cache.emplace(w, std::move(r)).first->second;
    }
};

inline Matrix evaluate(const QuantumGroup& qg, const AlgebraElement& x, const WeightModule& m)
{
    Evaluator ev(qg, m);
    return ev(x);
}

/// True iff a - b acts as zero on every module of the battery.  Sound for
/// refutation; equality is only as strong as the battery separates points.
inline bool equality_probe(const QuantumGroup& qg, const AlgebraElement& a, const AlgebraElement& b,
                           const std::vector<WeightModule>& battery)
{
    if (battery.empty()) throw PreconditionError("empty battery");
    AlgebraElement d = a - b;
    for (const auto& m : battery)
        if (!evaluate(qg, d, m).is_zero()) return false;
    return true;
}

/// The defining relations, each returned as (name, lhs - rhs) on M.
inline std::vector<std::pair<std::string, Matrix>> relation_residues(const QuantumGroup& qg, const WeightModule& m)
{
    const CartanDatum& d = qg.datum();
    const int n = d.rank();
    const int dim = m.dim();
    std::vector<std::pair<std::string, Matrix>> out;
    auto fund = [&](int i) { return d.fundamental(i); };
    Matrix id = Matrix::identity(dim);
    // K_0 = 1, K_l K_m = K_{l+m}
    out.emplace_back("K0", k_matrix(qg, m, d.zero()) - id);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.emplace_back("KK", k_matrix(qg, m, fund(i)) * k_matrix(qg, m, fund(j)) -
                                       k_matrix(qg, m, fund(i) + fund(j)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix kl = k_matrix(qg, m, fund(i));
            Matrix kli = k_matrix(qg, m, -fund(i));
            QScalar c = qg.q_inner(fund(i), d.simple_root(j));
            out.emplace_back("KEK", kl * m.e[j] * kli - m.e[j] * c);
            out.emplace_back("KFK", kl * m.f[j] * kli - m.f[j] * c.inverse());
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix lhs = m.e[i] * m.f[j] - m.f[j] * m.e[i];
            if (i == j) {
                Matrix rhs = (k_matrix(qg, m, d.simple_root(i)) - k_matrix(qg, m, -d.simple_root(i))) * qg.inv_qdiff(i);
                lhs -= rhs;
            }
            out.emplace_back("EF", lhs);
        }
    // quantum Serre relations
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const long a = -d.a(i, j);
            Matrix se(dim, dim), sf(dim, dim);
            for (long k = 0; k <= a + 1; ++k) {
                QScalar c = q_binom(a + 1, k, d.d(i), d.unit());
                if (k % 2) c = -c;
                Matrix ek = id, ej = id, fk = id, fj = id;
                for (long t = 0; t < a + 1 - k; ++t) {
                    ek = ek * m.e[i];
                    fk = fk * m.f[i];
                }
                for (long t = 0; t < k; ++t) {
                    ej = ej * m.e[i];
                    fj = fj * m.f[i];
                }
                se += ek * m.e[j] * ej * c;
                sf += fk * m.f[j] * fj * c;
            }
            out.emplace_back("SerreE", se);
            out.emplace_back("SerreF", sf);
        }
    return out;
}

/// Tensor product M1 (x) M2 with E_i -> K_i(x)E_i + E_i(x)1, F_i -> F_i(x)K_i^-1 + 1(x)F_i.
inline WeightModule tensor(const QuantumGroup& qg, const WeightModule& a, const WeightModule& b)
{
    if (a.rank() != qg.rank() || b.rank() != qg.rank()) throw PreconditionError("tensor factors have different data");
    WeightModule t;
    for (const auto& wa : a.weights)
        for (const auto& wb : b.weights) t.weights.push_back(wa + wb);
    Matrix ia = Matrix::identity(a.dim()), ib = Matrix::identity(b.dim());
    for (int i = 0; i < qg.rank(); ++i) {
        const Weight& ai = qg.datum().simple_root(i);
        t.e.push_back(Matrix::kron(k_matrix(qg, a, ai), b.e[i]) + Matrix::kron(a.e[i], ib));
        t.f.push_back(Matrix::kron(a.f[i], k_matrix(qg, b, -ai)) + Matrix::kron(ia, b.f[i]));
    }
    t.label = a.label + "(x)" + b.label;
    return t;
}

} // namespace qcentre
