#pragma once

// The Cartan subalgebra U^0, the projection pi, the Harish-Chandra map and
// the decomposition of Weyl invariants into fundamental characters.

#include <map>
#include <string>
#include <vector>

#include "qcentre/module.hpp"
#include "qcentre/repbuilder.hpp"
#include "qcentre/uqalg.hpp"

namespace qcentre {

/// sum_mu c_mu K_mu in the group algebra of P.
class U0Element {
public:
    using Terms = std::map<Weight, QScalar>;

    U0Element() = default;
    U0Element(const Weight& mu, const QScalar& c) { add(mu, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    QScalar coeff(const Weight& mu) const
    {
        auto it = terms_.find(mu);
        return it == terms_.end() ? QScalar() : it->second;
    }

    void add(const Weight& mu, const QScalar& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(mu, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    U0Element& operator+=(const U0Element& o)
    {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    U0Element& operator-=(const U0Element& o)
    {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    U0Element& operator*=(const QScalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend U0Element operator+(U0Element a, const U0Element& b) { return a += b; }
    friend U0Element operator-(U0Element a, const U0Element& b) { return a -= b; }
    friend U0Element operator*(U0Element a, const QScalar& s) { return a *= s; }
    friend U0Element operator*(const U0Element& a, const U0Element& b)
    {
        U0Element out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
        return out;
    }
    friend bool operator==(const U0Element&, const U0Element&) = default;

    AlgebraElement to_algebra(const QuantumGroup& qg) const
    {
        AlgebraElement out;
        for (const auto& [w, c] : terms_) out += qg.K(w) * c;
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")K" + w.to_string();
        }
        return s;
    }

private:
    Terms terms_;
};

inline U0Element u0_one(const CartanDatum& d) { return U0Element(d.zero(), QScalar(1)); }

/// The U^0 component of a degree-zero element in F K E form.
inline U0Element project_pi(const QuantumGroup& qg, const AlgebraElement& x)
{
    auto g = qg.grading(x);
    if (!g || !g->is_zero()) throw PreconditionError("project_pi needs an element of degree zero");
    U0Element out;
    for (const auto& [m, c] : x.terms())
        if (m.is_cartan()) out.add(m.k, c);
    return out;
}

/// K_mu -> q^{(lambda, mu)} K_mu.
inline U0Element gamma_twist(const CartanDatum& d, const Weight& lambda, const U0Element& h)
{
    U0Element out;
    for (const auto& [mu, c] : h.terms()) out.add(mu, c * QScalar::vpow(d.inner_v(lambda, mu)));
    return out;
}

inline U0Element hc_image(const QuantumGroup& qg, const AlgebraElement& c)
{
    const CartanDatum& d = qg.datum();
    return gamma_twist(d, -d.rho(), project_pi(qg, c));
}

inline bool is_W_invariant(const CartanDatum& d, const U0Element& h)
{
    for (int i = 0; i < d.rank(); ++i)
        for (const auto& [mu, c] : h.terms())
            if (!(h.coeff(d.simple_reflection(i, mu)) == c)) return false;
    return true;
}

inline bool is_even(const U0Element& h)
{
    for (const auto& [mu, c] : h.terms())
        for (int i = 0; i < mu.rank(); ++i)
            if (mu[i] % 2 != 0) return false;
    return true;
}

/// sum over the Weyl orbit of lambda of K_{2 mu}.
inline U0Element av(const CartanDatum& d, const Weight& lambda)
{
    U0Element out;
    for (const auto& mu : d.weyl_orbit(lambda)) out.add(2 * mu, QScalar(1));
    return out;
}

/// sum_mu dim M_mu K_{2 mu}.
inline U0Element ch(const WeightModule& m)
{
    U0Element out;
    for (const auto& w : m.weights) out.add(2 * w, QScalar(1));
    return out;
}

/// Character of V(lambda) from classical multiplicities, without building the module.
inline U0Element character(const CartanDatum& d, const Weight& lambda)
{
    U0Element out;
    for (const auto& [mu, k] : freudenthal(d, lambda)) out.add(2 * mu, QScalar(k));
    return out;
}

/// sum c_mu q^{(nu, mu)}.
inline QScalar chi_eval(const CartanDatum& d, const Weight& nu, const U0Element& h)
{
    QScalar s;
    for (const auto& [mu, c] : h.terms()) s += c * QScalar::vpow(d.inner_v(nu, mu));
    return s;
}

/// Polynomial in the fundamental characters x_i = ch V(varpi_i).
struct FundamentalPolynomial {
    std::map<std::vector<int>, QScalar> terms;  // exponent vector -> coefficient

    void add(const std::vector<int>& k, const QScalar& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(k, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
    friend bool operator==(const FundamentalPolynomial&, const FundamentalPolynomial&) = default;

    std::string to_string() const
    {
        if (terms.empty()) return "0";
        std::string s;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.to_string() + ")";
            for (std::size_t i = 0; i < it->first.size(); ++i)
                if (it->first[i]) s += "*x" + std::to_string(i + 1) + "^" + std::to_string(it->first[i]);
        }
        return s;
    }
};

/// Products of fundamental characters, memoised by exponent vector.
class FundamentalCharacters {
public:
    explicit FundamentalCharacters(const CartanDatum& d) : d_(d)
    {
        for (int i = 0; i < d.rank(); ++i) fund_.push_back(character(d, d.fundamental(i)));
    }

    const CartanDatum& datum() const { return d_; }

    const U0Element& monomial(const std::vector<int>& k)
    {
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        U0Element v;
        int last = -1;
        for (int i = 0; i < static_cast<int>(k.size()); ++i)
            if (k[static_cast<std::size_t>(i)] > 0) last = i;
        if (last < 0) {
            v = u0_one(d_);
        } else {
            std::vector<int> lower = k;
            --lower[static_cast<std::size_t>(last)];
            v = monomial(lower) * fund_[static_cast<std::size_t>(last)];
        }
        return cache_.emplace(k, std::move(v)).first->second;
    }

    U0Element expand(const FundamentalPolynomial& p)
    {
        U0Element out;
        for (const auto& [k, c] : p.terms) out += monomial(k) * c;
        return out;
    }

private:
    CartanDatum d_;
    std::vector<U0Element> fund_;
    std::map<std::vector<int>, U0Element> cache_;
};

inline U0Element expand(const CartanDatum& d, const FundamentalPolynomial& p)
{
    FundamentalCharacters fc(d);
    return fc.expand(p);
}

namespace detail {

// Largest dominant half-exponent by ((mu, rho), lex); dominance-maximal in the support.
inline std::optional<Weight> leading_dominant(const CartanDatum& d, const U0Element& h)
{
    std::optional<Weight> best;
    Rational best_h;
    for (const auto& [two_mu, c] : h.terms()) {
        Weight mu(d.rank());
        for (int i = 0; i < d.rank(); ++i) mu[i] = two_mu[i] / 2;
        if (!mu.is_dominant()) continue;
        Rational ht = d.inner(mu, d.rho());
        if (!best || ht > best_h || (ht == best_h && *best < mu)) {
            best = mu;
            best_h = ht;
        }
    }
    return best;
}

} // namespace detail

/// The unique f with f(ch V(varpi_1), ..., ch V(varpi_n)) = h.
inline FundamentalPolynomial decompose_in_fundamentals(FundamentalCharacters& fc, const U0Element& h)
{
    const CartanDatum& d = fc.datum();
    if (!is_even(h)) throw DomainError("element is not even");
    if (!is_W_invariant(d, h)) throw DomainError("element is not Weyl invariant");
    FundamentalPolynomial out;
    U0Element rest = h;
    while (!rest.is_zero()) {
        auto lead = detail::leading_dominant(d, rest);
        if (!lead) throw DomainError("no dominant exponent left in an invariant element");
        std::vector<int> k(static_cast<std::size_t>(d.rank()));
        for (int i = 0; i < d.rank(); ++i) k[static_cast<std::size_t>(i)] = (*lead)[i];
        QScalar c = rest.coeff(2 * *lead);
        const U0Element& mono = fc.monomial(k);
        if (!(mono.coeff(2 * *lead) == QScalar(1))) throw DomainError("leading coefficient of a fundamental monomial is not 1");
        rest -= mono * c;
        out.add(k, c);
    }
    return out;
}

inline FundamentalPolynomial decompose_in_fundamentals(const CartanDatum& d, const U0Element& h)
{
    FundamentalCharacters fc(d);
    return decompose_in_fundamentals(fc, h);
}

/// prod ch V(varpi_i)^{k_i} has K_{2 lambda(k)} with coefficient 1 and every
/// other dominant exponent strictly below lambda(k) in the dominance order.
inline bool triangularity_certificate(FundamentalCharacters& fc, const std::vector<int>& k)
{
    const CartanDatum& d = fc.datum();
    Weight top = Weight::from(k);
    const U0Element& m = fc.monomial(k);
    if (!(m.coeff(2 * top) == QScalar(1))) return false;
    for (const auto& [two_mu, c] : m.terms()) {
        Weight mu(d.rank());
        for (int i = 0; i < d.rank(); ++i) mu[i] = two_mu[i] / 2;
        if (!mu.is_dominant() || mu == top) continue;
        if (!d.dominance_leq(mu, top)) return false;
    }
    return true;
}

} // namespace qcentre
