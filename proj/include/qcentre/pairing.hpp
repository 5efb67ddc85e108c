#pragma once

// The pairing U^{<=0} x U^{>=0} -> F, the extended form on U, Gram matrices
// of PBW monomials and the trace identity for the dual central elements.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "qcentre/braid.hpp"
#include "qcentre/harishchandra.hpp"
#include "qcentre/linalg.hpp"
#include "qcentre/repbuilder.hpp"
#include "qcentre/uqalg.hpp"

namespace qcentre {

/// (F_i, E_j) = delta_ij / (q_i - q_i^-1), (K_l, K_m) = q^{-(l, m)},
/// (x, y_1 y_2) = (Delta x, y_2 (x) y_1), (x_1 x_2, y) = (x_1 (x) x_2, Delta y).
/// fe_sign = -1 gives (F_i, E_i) = -1 / (q_i - q_i^-1) instead, the normalisation
/// under which the extended form is ad-invariant.
class RossoForm {
public:
    explicit RossoForm(const QuantumGroup& qg, int fe_sign = 1) : qg_(qg), sign_(fe_sign)
    {
        if (fe_sign != 1 && fe_sign != -1) throw PreconditionError("fe_sign must be 1 or -1");
    }

    /// (F_f, E_e) by peeling the last E letter.
    QScalar words(const Word& f, const Word& e) const
    {
        if (f.size() != e.size()) return QScalar();
        if (f.empty()) return QScalar(1);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find({f, e});
            if (it != cache_.end()) return it->second;
        }
        const char j = e.back();
        const Word rest = e.substr(0, e.size() - 1);
        const Weight& aj = qg_.datum().simple_root(j);
        QScalar s;
        Weight after = qg_.datum().zero();
        for (std::size_t p = f.size(); p-- > 0;) {
            if (f[p] == j) {
                QScalar sub = words(f.substr(0, p) + f.substr(p + 1), rest);
                if (!sub.is_zero()) s += qg_.q_inner(aj, after) * qg_.inv_qdiff(j) * sign_ * sub;
            }
            after += qg_.datum().simple_root(f[p]);
        }
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(std::make_pair(f, e), s);
        return s;
    }

    /// (F_f, E_e) by peeling the last F letter instead; equal to words().
    QScalar words_by_left(const Word& f, const Word& e) const
    {
        if (f.size() != e.size()) return QScalar();
        if (f.empty()) return QScalar(1);
        const char j = f.back();
        const Word rest = f.substr(0, f.size() - 1);
        const Weight& aj = qg_.datum().simple_root(j);
        QScalar s;
        Weight after = qg_.datum().zero();
        for (std::size_t p = e.size(); p-- > 0;) {
            if (e[p] == j) {
                QScalar sub = words_by_left(rest, e.substr(0, p) + e.substr(p + 1));
                if (!sub.is_zero()) s += qg_.q_inner(aj, after) * qg_.inv_qdiff(j) * sign_ * sub;
            }
            after += qg_.datum().simple_root(e[p]);
        }
        return s;
    }

    /// (F_f K_l, K_h E_e).
    QScalar monomials(const Monomial& x, const Monomial& y) const
    {
        if (!x.e.empty() || !y.f.empty()) throw PreconditionError("pairing needs F,K words against K,E words");
        QScalar w = words(x.f, y.e);
        if (w.is_zero()) return w;
        const CartanDatum& d = qg_.datum();
        return w * QScalar::vpow(d.inner_v(y.k, qg_.content(y.e)) - d.inner_v(x.k, y.k));
    }

    QScalar operator()(const AlgebraElement& x, const AlgebraElement& y) const
    {
        check_lower(x);
        check_upper(y);
        QScalar s;
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms()) {
                QScalar v = monomials(mx, my);
                if (!v.is_zero()) s += cx * cy * v;
            }
        return s;
    }

    static void check_lower(const AlgebraElement& x)
    {
        for (const auto& [m, c] : x.terms())
            if (!m.e.empty()) throw PreconditionError("first argument contains E generators");
    }
    static void check_upper(const AlgebraElement& y)
    {
        for (const auto& [m, c] : y.terms())
            if (!m.f.empty()) throw PreconditionError("second argument contains F generators");
    }

private:
    const QuantumGroup& qg_;
    QScalar sign_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<Word, Word>, QScalar> cache_;
};

inline QScalar rosso_form(const QuantumGroup& qg, const AlgebraElement& x, const AlgebraElement& y)
{
    return RossoForm(qg)(x, y);
}

/// All words over the simple indices with letter content nu (in root coordinates).
inline std::vector<Word> words_of_content(const CartanDatum& d, const Weight& nu)
{
    auto rc = d.root_coords(nu);
    if (!rc) throw PreconditionError("weight is not in the root lattice");
    for (int c : *rc)
        if (c < 0) throw PreconditionError("weight is not in Q+");
    std::vector<Word> out;
    std::vector<int> left = *rc;
    Word cur;
    std::function<void()> rec = [&]() {
        bool done = true;
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (left[i] == 0) continue;
            done = false;
            --left[i];
            cur.push_back(static_cast<char>(i));
            rec();
            cur.pop_back();
            ++left[i];
        }
        if (done) out.push_back(cur);
    };
    rec();
    return out;
}

/// True iff (x, y) = 0 for all F-words x of content nu and E-words y of content mu.
inline bool graded_orthogonality_check(const QuantumGroup& qg, const Weight& nu, const Weight& mu)
{
    if (nu == mu) throw PreconditionError("graded orthogonality needs distinct weights");
    RossoForm form(qg);
    auto xs = words_of_content(qg.datum(), nu);
    auto ys = words_of_content(qg.datum(), mu);
    for (const auto& f : xs)
        for (const auto& e : ys)
            if (!form.words(f, e).is_zero()) return false;
    return true;
}

/// Multi-indices r with sum_j r_j beta_j = nu.
inline std::vector<std::vector<int>> kostant_partitions(const CartanDatum& d, const RootVectorTable& tbl, const Weight& nu)
{
    auto target = d.root_coords(nu);
    if (!target) throw PreconditionError("weight is not in the root lattice");
    std::vector<std::vector<int>> beta;
    for (const auto& b : tbl.roots) beta.push_back(*d.root_coords(b));
    std::vector<std::vector<int>> out;
    std::vector<int> r(beta.size(), 0);
    std::vector<int> left = *target;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == beta.size()) {
            for (int c : left)
                if (c != 0) return;
            out.push_back(r);
            return;
        }
        int kmax = -1;
        for (std::size_t i = 0; i < left.size(); ++i)
            if (beta[j][i] > 0) {
                int q = left[i] / beta[j][i];
                kmax = kmax < 0 ? q : std::min(kmax, q);
            }
        for (int k = 0; k <= kmax; ++k) {
            for (std::size_t i = 0; i < left.size(); ++i) left[i] -= k * beta[j][i];
            r[j] = k;
            rec(j + 1);
            for (std::size_t i = 0; i < left.size(); ++i) left[i] += k * beta[j][i];
        }
        r[j] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// F_{beta_N}^{r_N} ... F_{beta_1}^{r_1}, or the same product of E's.
inline AlgebraElement pbw_monomial(const QuantumGroup& qg, const RootVectorTable& tbl, const std::vector<int>& r, bool upper)
{
    AlgebraElement x = qg.one();
    for (int j = tbl.size(); j-- > 0;) {
        const AlgebraElement& g = upper ? tbl.evecs[static_cast<std::size_t>(j)] : tbl.fvecs[static_cast<std::size_t>(j)];
        for (int k = 0; k < r[static_cast<std::size_t>(j)]; ++k) x = qg.multiply(x, g);
    }
    return x;
}

struct GramResult {
    std::vector<std::vector<int>> partitions;
    DenseMatrix gram;
    int rank = 0;

    bool full_rank() const { return rank == static_cast<int>(partitions.size()); }
};

/// Gram matrix ((F_r, E_t)) over PBW monomials of weight nu.
inline GramResult gram_rank(const QuantumGroup& qg, const Weight& nu, const RootVectorTable& tbl)
{
    GramResult g;
    g.partitions = kostant_partitions(qg.datum(), tbl, nu);
    const std::size_t n = g.partitions.size();
    std::vector<AlgebraElement> fs, es;
    for (const auto& r : g.partitions) {
        fs.push_back(pbw_monomial(qg, tbl, r, false));
        es.push_back(pbw_monomial(qg, tbl, r, true));
    }
    RossoForm form(qg);
    g.gram.assign(n, std::vector<QScalar>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.gram[a][b] = form(fs[a], es[b]);
    g.rank = nu.is_zero() ? 0 : rank(g.gram);
    return g;
}

/// <F_f K_k E_e, F_f' K_k' E_e'> = (f', e)(f, e') q^{(2 rho, nu)} q^{-(lambda, eta)/2},
/// nu = content f, lambda = k - nu, eta = k' - content f'.
inline QScalar big_form(const QuantumGroup& qg, const AlgebraElement& u, const AlgebraElement& v, int fe_sign = 1)
{
    const CartanDatum& d = qg.datum();
    const Weight two_rho = 2 * d.rho();
    RossoForm form(qg, fe_sign);
    QScalar s;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            QScalar p = form.words(b.f, a.e);
            if (p.is_zero()) continue;
            p *= form.words(a.f, b.e);
            if (p.is_zero()) continue;
            const Weight nu = qg.content(a.f);
            const Weight lambda = a.k - nu;
            const Weight eta = b.k - qg.content(b.f);
            s += ca * cb * p * QScalar::vpow(d.inner_v(two_rho, nu) - d.inner_v(lambda, eta) / 2);
        }
    return s;
}

/// The U^0 element whose Harish-Chandra image is sum_eta m_lambda(eta) K_{-2 eta}.
inline U0Element z_trace_candidate(const CartanDatum& d, const Weight& lambda)
{
    U0Element target;
    for (const auto& [eta, m] : freudenthal(d, lambda)) target.add(-2 * eta, QScalar(m));
    return gamma_twist(d, d.rho(), target);
}

/// <K_mu, candidate> equals Tr_{V(lambda)} K_{mu - 2 rho}.
inline bool verify_z_trace(const QuantumGroup& qg, const WeightModule& v, const Weight& mu)
{
    const CartanDatum& d = qg.datum();
    if (!v.highest_weight) throw PreconditionError("module has no highest weight");
    QScalar lhs = big_form(qg, qg.K(mu), z_trace_candidate(d, *v.highest_weight).to_algebra(qg));
    QScalar rhs = k_matrix(qg, v, mu - 2 * d.rho()).trace();
    return lhs == rhs;
}

inline bool verify_z_trace(const QuantumGroup& qg, const Weight& lambda, const Weight& mu)
{
    return verify_z_trace(qg, simple_module(qg, lambda), mu);
}

} // namespace qcentre
