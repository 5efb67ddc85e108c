#pragma once

// Truncated quasi-R-matrix, L-operators and the central elements obtained as
// q-traces of powers of Gamma_V = L_V^T L_V.

#include <functional>
#include <map>
#include <vector>

#include "qcentre/braid.hpp"
#include "qcentre/module.hpp"
#include "qcentre/repbuilder.hpp"

namespace qcentre {

/// Element of End(V) (x) U: sparse (row, col) -> AlgebraElement.
class TensorOperator {
public:
    TensorOperator() = default;
    explicit TensorOperator(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<std::pair<int, int>, AlgebraElement>& entries() const { return entries_; }

    const AlgebraElement& at(int r, int c) const
    {
        static const AlgebraElement zero;
        auto it = entries_.find({r, c});
        return it == entries_.end() ? zero : it->second;
    }
    void add(int r, int c, const AlgebraElement& x)
    {
        if (x.is_zero()) return;
        auto& slot = entries_[{r, c}];
        slot += x;
        if (slot.is_zero()) entries_.erase({r, c});
    }

    /// Row index -> list of (col, entry) for fast composition.
    std::map<int, std::vector<std::pair<int, const AlgebraElement*>>> rows() const
    {
        std::map<int, std::vector<std::pair<int, const AlgebraElement*>>> out;
        for (const auto& [rc, x] : entries_) out[rc.first].emplace_back(rc.second, &x);
        return out;
    }

    std::size_t term_count() const
    {
        std::size_t n = 0;
        for (const auto& [rc, x] : entries_) n += x.size();
        return n;
    }

    friend bool operator==(const TensorOperator&, const TensorOperator&) = default;

private:
    int dim_ = 0;
    std::map<std::pair<int, int>, AlgebraElement> entries_;
};

/// (A B)_{ac} = sum_b A_{ab} B_{bc}, products taken in U.
inline TensorOperator compose(const QuantumGroup& qg, const TensorOperator& a, const TensorOperator& b)
{
    if (a.dim() != b.dim()) throw PreconditionError("operator dimensions differ");
    TensorOperator out(a.dim());
    auto brows = b.rows();
    for (const auto& [ab, x] : a.entries()) {
        auto it = brows.find(ab.second);
        if (it == brows.end()) continue;
        for (const auto& [c, y] : it->second) out.add(ab.first, c, qg.multiply(x, *y));
    }
    return out;
}

/// Evaluates the U-leg on a second module: a matrix on V (x) M, index a * dim M + x.
inline Matrix evaluate_second_leg(const TensorOperator& t, Evaluator& ev)
{
    const int dm = ev.module().dim();
    Matrix out(t.dim() * dm, t.dim() * dm);
    for (const auto& [rc, x] : t.entries()) {
        Matrix m = ev(x);
        for (int i = 0; i < dm; ++i)
            for (const auto& [j, v] : m.row(i)) out.add(rc.first * dm + i, rc.second * dm + j, v);
    }
    return out;
}

/// One summand D_r * zeta(X_r) (x) Y_r of the truncated quasi-R-matrix.
struct QuasiRTerm {
    std::vector<int> r;      // exponents, indexed like the root table
    Weight weight;           // sum r_j beta_j
    QScalar coeff;           // D_r
    Matrix first;            // zeta(F_r) for R, zeta(E_r) for R^T
    AlgebraElement second;   // E_r for R, F_r for R^T
};

/// q_b^{r(r+1)/2} (1 - q_b^{-2})^r / [r]_{q_b}!.
inline QScalar quasi_r_factor(long qb, int r, long unit)
{
    QScalar one(1);
    QScalar c = QScalar::vpow(qb * unit * r * (r + 1) / 2);
    QScalar base = one - QScalar::vpow(-2 * qb * unit);
    for (int k = 0; k < r; ++k) c *= base;
    return c / q_factorial(r, qb, unit);
}

namespace detail {

// Enumerate exponent vectors (r_N, ..., r_1) lexicographically, pruning
// partial products that vanish on the module.
inline std::vector<QuasiRTerm> quasi_r_terms(const QuantumGroup& qg, const WeightModule& v, const RootVectorTable& tbl,
                                             bool transpose)
{
    const int nr = tbl.size();
    const long unit = qg.unit();
    Evaluator ev(qg, v);
    std::vector<Matrix> gen;
    std::vector<int> nil;
    for (int j = 0; j < nr; ++j) {
        gen.push_back(ev(transpose ? tbl.evecs[static_cast<std::size_t>(j)] : tbl.fvecs[static_cast<std::size_t>(j)]));
        Matrix p = Matrix::identity(v.dim());
        int k = 0;
        while (!p.is_zero()) {
            p = p * gen.back();
            ++k;
        }
        nil.push_back(k);
    }
    // powers of the formal leg, built lazily
    std::vector<std::vector<AlgebraElement>> pow(static_cast<std::size_t>(nr));
    auto formal_pow = [&](int j, int k) -> const AlgebraElement& {
        auto& pj = pow[static_cast<std::size_t>(j)];
        if (pj.empty()) pj.push_back(qg.one());
        while (static_cast<int>(pj.size()) <= k) {
            const AlgebraElement& root = transpose ? tbl.fvecs[static_cast<std::size_t>(j)] : tbl.evecs[static_cast<std::size_t>(j)];
            pj.push_back(qg.multiply(pj.back(), root));
        }
        return pj[static_cast<std::size_t>(k)];
    };
    std::vector<QuasiRTerm> out;
    std::vector<int> r(static_cast<std::size_t>(nr), 0);
    std::function<void(int, const Matrix&, const QScalar&, const AlgebraElement&)> rec =
        [&](int j, const Matrix& acc, const QScalar& coeff, const AlgebraElement& formal) {
            if (j < 0) {
                Weight w = qg.datum().zero();
                for (int k = 0; k < nr; ++k) w += r[static_cast<std::size_t>(k)] * tbl.roots[static_cast<std::size_t>(k)];
                out.push_back(QuasiRTerm{r, w, coeff, acc, formal});
                return;
            }
            Matrix m = acc;
            for (int k = 0; k < nil[static_cast<std::size_t>(j)]; ++k) {
                if (k > 0) {
                    m = m * gen[static_cast<std::size_t>(j)];
                    if (m.is_zero()) break;
                }
                r[static_cast<std::size_t>(j)] = k;
                QScalar c = coeff * quasi_r_factor(tbl.qbeta[static_cast<std::size_t>(j)], k, unit);
                AlgebraElement fx = k == 0 ? formal : qg.multiply(formal, formal_pow(j, k));
                rec(j - 1, m, c, fx);
            }
            r[static_cast<std::size_t>(j)] = 0;
        };
    rec(nr - 1, Matrix::identity(v.dim()), QScalar(1), qg.one());
    return out;
}

inline TensorOperator assemble(const std::vector<QuasiRTerm>& terms, int dim)
{
    TensorOperator t(dim);
    for (const auto& term : terms)
        for (int a = 0; a < dim; ++a)
            for (const auto& [b, v] : term.first.row(a)) t.add(a, b, term.second * (term.coeff * v));
    return t;
}

} // namespace detail

/// Summands of (zeta (x) id)(R): zeta(F_r) (x) E_r.
inline std::vector<QuasiRTerm> quasi_r_terms(const QuantumGroup& qg, const WeightModule& v, const RootVectorTable& tbl)
{
    return detail::quasi_r_terms(qg, v, tbl, false);
}

/// Summands of (zeta (x) id)(R^T): zeta(E_r) (x) F_r.
inline std::vector<QuasiRTerm> quasi_r_transpose_terms(const QuantumGroup& qg, const WeightModule& v,
                                                       const RootVectorTable& tbl)
{
    return detail::quasi_r_terms(qg, v, tbl, true);
}

inline TensorOperator quasiR(const QuantumGroup& qg, const WeightModule& v, const RootVectorTable& tbl)
{
    return detail::assemble(quasi_r_terms(qg, v, tbl), v.dim());
}

inline TensorOperator quasiR_transpose(const QuantumGroup& qg, const WeightModule& v, const RootVectorTable& tbl)
{
    return detail::assemble(quasi_r_transpose_terms(qg, v, tbl), v.dim());
}

/// K_V = sum_eta P_eta (x) K_eta; sign -1 gives the inverse.
inline TensorOperator kv_operator(const QuantumGroup& qg, const WeightModule& v, int sign = 1)
{
    TensorOperator t(v.dim());
    for (int a = 0; a < v.dim(); ++a) t.add(a, a, qg.K(sign * v.weights[static_cast<std::size_t>(a)]));
    return t;
}

struct LOperators {
    TensorOperator l;   // K_V R_V
    TensorOperator lt;  // K_V R_V^T
};

inline LOperators l_operators(const QuantumGroup& qg, const WeightModule& v, const RootVectorTable& tbl)
{
    TensorOperator kv = kv_operator(qg, v);
    return {compose(qg, kv, quasiR(qg, v, tbl)), compose(qg, kv, quasiR_transpose(qg, v, tbl))};
}

inline TensorOperator gamma(const QuantumGroup& qg, const WeightModule& v, const RootVectorTable& tbl)
{
    LOperators lo = l_operators(qg, v, tbl);
    return compose(qg, lo.lt, lo.l);
}

/// Tr_1((zeta(K_{2 rho}) (x) 1) X) for X in End(V) (x) U.
inline AlgebraElement q_trace(const QuantumGroup& qg, const WeightModule& v, const TensorOperator& x)
{
    const Weight two_rho = 2 * qg.datum().rho();
    AlgebraElement out;
    for (int a = 0; a < v.dim(); ++a) {
        const AlgebraElement& d = x.at(a, a);
        if (!d.is_zero()) out += d * qg.q_inner(two_rho, v.weights[static_cast<std::size_t>(a)]);
    }
    return out;
}

/// C_lambda^(m) = Tr_1((zeta_lambda(K_{2 rho}) (x) 1) Gamma^m), from a prebuilt V(lambda).
inline AlgebraElement central_element(const QuantumGroup& qg, const WeightModule& v, const RootVectorTable& tbl, int m)
{
    if (m < 1) throw PreconditionError("power must be positive");
    LOperators lo = l_operators(qg, v, tbl);
    TensorOperator g = compose(qg, lo.lt, lo.l);
    TensorOperator acc = g;
    for (int k = 1; k < m - 1; ++k) acc = compose(qg, acc, g);
    const Weight two_rho = 2 * qg.datum().rho();
    // only the diagonal of the last product is needed
    const TensorOperator& left = m == 1 ? lo.lt : acc;
    const TensorOperator& right = m == 1 ? lo.l : g;
    auto rrows = right.rows();
    AlgebraElement out;
    for (const auto& [ab, x] : left.entries()) {
        auto it = rrows.find(ab.second);
        if (it == rrows.end()) continue;
        for (const auto& [c, y] : it->second) {
            if (c != ab.first) continue;
            QScalar w = qg.q_inner(two_rho, v.weights[static_cast<std::size_t>(ab.first)]);
            for (const auto& [mx, cx] : x.terms())
                for (const auto& [my, cy] : y->terms()) qg.accumulate_product(out, mx, my, w * cx * cy);
        }
    }
    return out;
}

inline AlgebraElement central_element(const QuantumGroup& qg, const Weight& lambda, int m)
{
    return central_element(qg, simple_module(qg, lambda), root_vectors(qg), m);
}

/// The part of C_lambda^(1) built from the degree-zero parts of L_V and
/// L_V^T.  Every other summand has a non-empty E- or F-block, so this is
/// exactly the U^0-component of C_lambda^(1).
inline AlgebraElement central_element_cartan_part(const QuantumGroup& qg, const WeightModule& v)
{
    const Weight two_rho = 2 * qg.datum().rho();
    AlgebraElement out;
    for (const auto& w : v.weights) out += qg.multiply(qg.K(w), qg.K(w)) * qg.q_inner(two_rho, w);
    return out;
}

/// sum_mu q^{(2rho,mu)} sum_{sum t = sum r} Tr(zeta(E_t K_t^{-1} F_r) P_mu) D_r D_t K_{sum t} F_t K_{2mu - 2 sum r} E_r,
/// with the K_{sum t} exchange performed inside the algebra.
inline AlgebraElement closed_formula(const QuantumGroup& qg, const WeightModule& v, const RootVectorTable& tbl)
{
    const CartanDatum& d = qg.datum();
    const Weight two_rho = 2 * d.rho();
    auto rterms = quasi_r_terms(qg, v, tbl);
    auto tterms = quasi_r_transpose_terms(qg, v, tbl);
    std::map<Weight, std::vector<const QuasiRTerm*>> tby;
    for (const auto& t : tterms) tby[t.weight].push_back(&t);
    std::set<Weight> weights(v.weights.begin(), v.weights.end());
    AlgebraElement out;
    for (const auto& r : rterms) {
        auto it = tby.find(r.weight);
        if (it == tby.end()) continue;
        for (const QuasiRTerm* t : it->second) {
            Matrix x = t->first * k_matrix(qg, v, -t->weight) * r.first;
            std::map<Weight, QScalar> tr;
            for (int a = 0; a < v.dim(); ++a) {
                QScalar xa = x.get(a, a);
                if (!xa.is_zero()) tr[v.weights[static_cast<std::size_t>(a)]] += xa;
            }
            for (const auto& [mu, trace] : tr) {
                if (trace.is_zero()) continue;
                QScalar c = qg.q_inner(two_rho, mu) * trace * r.coeff * t->coeff;
                AlgebraElement body = qg.multiply(qg.multiply(t->second, qg.K(2 * mu - 2 * r.weight)), r.second);
                out += qg.multiply(qg.K(t->weight), body) * c;
            }
        }
    }
    return out;
}

/// Matrix of sum_r D_r zeta(F_r) (x) zeta'(E_r) on V (x) W.
inline Matrix quasi_r_on_pair(const QuantumGroup& qg, const WeightModule& v, const WeightModule& w, const RootVectorTable& tbl)
{
    Evaluator ew(qg, w);
    Matrix out(v.dim() * w.dim(), v.dim() * w.dim());
    for (const auto& t : quasi_r_terms(qg, v, tbl)) {
        Matrix b = ew(t.second);
        if (b.is_zero()) continue;
        out += Matrix::kron(t.first, b) * t.coeff;
    }
    return out;
}

/// R Delta(x) - Psi(Delta'(x)) R on V (x) W.
inline Matrix intertwining_residue(const QuantumGroup& qg, const WeightModule& v, const WeightModule& w,
                                   const RootVectorTable& tbl, const AlgebraElement& x)
{
    Matrix r = quasi_r_on_pair(qg, v, w, tbl);
    Evaluator ev(qg, v), ew(qg, w);
    Matrix dx = Evaluator::tensor_action(ev, ew, qg.comultiply(x));
    Matrix pdx = Evaluator::tensor_action(ev, ew, qg.psi(qg.flip(qg.comultiply(x))));
    return r * dx - pdx * r;
}

} // namespace qcentre
