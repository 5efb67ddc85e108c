#pragma once

// Exact arithmetic in Q(v), v a fixed root of q.  Every scalar is a reduced
// fraction of Laurent polynomials in v with rational coefficients.

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qcentre/errors.hpp"

namespace qcentre {

using Rational = mpq_class;
using Integer = mpz_class;

/// Laurent polynomial in v with rational coefficients, stored densely from
/// the lowest nonzero exponent upwards.  The zero polynomial has no
/// coefficients; otherwise the first and last stored coefficients are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(long exp, const Rational& c = 1)
    {
        LaurentPoly p;
        if (c != 0) {
            p.low_ = exp;
            p.c_.push_back(c);
        }
        return p;
    }
    static LaurentPoly constant(const Rational& c) { return monomial(0, c); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }
    bool is_monomial() const { return c_.size() == 1; }

    /// Lowest and highest exponent with a nonzero coefficient (nonzero polys only).
    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
    std::size_t span() const { return c_.size(); }

    Rational coeff(long e) const
    {
        if (c_.empty() || e < low_ || e > high()) return 0;
        return c_[static_cast<std::size_t>(e - low_)];
    }
    const Rational& leading() const { return c_.back(); }
    const Rational& trailing() const { return c_.front(); }

    /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
    std::vector<std::pair<long, Rational>> terms() const
    {
        std::vector<std::pair<long, Rational>> out;
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) out.emplace_back(low_ + static_cast<long>(k), c_[k]);
        return out;
    }

    LaurentPoly shifted(long s) const
    {
        LaurentPoly p = *this;
        if (!p.is_zero()) p.low_ += s;
        return p;
    }

    LaurentPoly operator-() const
    {
        LaurentPoly p = *this;
        for (auto& x : p.c_) x = -x;
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, 1); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, -1); }

    LaurentPoly& operator*=(const Rational& s)
    {
        if (s == 0) {
            c_.clear();
            low_ = 0;
        } else {
            for (auto& x : c_) x *= s;
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly p;
        if (a.is_zero() || b.is_zero()) return p;
        p.low_ = a.low_ + b.low_;
        p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) p.c_[i + j] += a.c_[i] * b.c_[j];
        }
        p.trim();
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.c_.size() == b.c_.size() && (a.c_.empty() || a.low_ == b.low_) && a.c_ == b.c_;
    }

    /// Value at v = 1.
    Rational at_one() const
    {
        Rational s = 0;
        for (const auto& x : c_) s += x;
        return s;
    }

    /// Quotient and remainder of ordinary polynomial division, treating both
    /// operands as polynomials after shifting them to lowest exponent zero.
    /// The quotient is returned with the Laurent shift low(a) - low(b).
    static std::pair<LaurentPoly, LaurentPoly> divrem(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (b.is_zero()) throw DomainError("division by the zero polynomial");
        if (a.is_zero()) return {LaurentPoly{}, LaurentPoly{}};
        std::vector<Rational> r = a.c_;
        const std::size_t db = b.c_.size() - 1;
        if (r.size() - 1 < db) {
            return {LaurentPoly{}, a};
        }
        std::vector<Rational> q(r.size() - db, Rational(0));
        const Rational& lb = b.c_.back();
        for (std::size_t k = r.size(); k-- > db;) {
            if (r[k] == 0) continue;
            Rational f = r[k] / lb;
            q[k - db] = f;
            for (std::size_t j = 0; j <= db; ++j)
                if (b.c_[j] != 0) r[k - db + j] -= f * b.c_[j];
        }
        LaurentPoly quo;
        quo.low_ = a.low_ - b.low_;
        quo.c_ = std::move(q);
        quo.trim();
        LaurentPoly rem;
        rem.low_ = a.low_;
        rem.c_ = std::move(r);
        rem.trim();
        return {quo, rem};
    }

    /// Exact division up to a unit monomial; throws if b does not divide a.
    static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b)
    {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw DomainError("inexact Laurent polynomial division");
        return q;
    }

    /// Monic gcd with lowest exponent zero.  Monomial factors are ignored
    /// since v is a unit.
    static LaurentPoly gcd(LaurentPoly a, LaurentPoly b)
    {
        if (a.is_zero() && b.is_zero()) return LaurentPoly{};
        a = a.is_zero() ? a : a.shifted(-a.low_);
        b = b.is_zero() ? b : b.shifted(-b.low_);
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        if (a.span() < b.span()) std::swap(a, b);
        while (!b.is_zero()) {
            if (b.span() == 1) return constant(1);
            auto r = divrem(a, b).second;
            if (!r.is_zero()) r = r.shifted(-r.low_).monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    LaurentPoly monic() const
    {
        if (is_zero()) return *this;
        Rational inv = 1 / c_.back();
        return *this * inv;
    }

    /// Total order used for canonical output only.
    friend std::strong_ordering compare(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
        if (a.c_.empty()) return std::strong_ordering::equal;
        if (a.low_ != b.low_) return a.low_ <=> b.low_;
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            int c = cmp(a.c_[k], b.c_[k]);
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    std::string to_string(const std::string& var = "v") const
    {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& x = c_[k];
            if (x == 0) continue;
            long e = low_ + static_cast<long>(k);
            Rational ax = abs(x);
            if (x < 0)
                os << (first ? "-" : " - ");
            else if (!first)
                os << " + ";
            if (e == 0 || ax != 1) os << ax.get_str();
            if (e != 0) {
                if (ax != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    long low_ = 0;
    std::vector<Rational> c_;

    void trim()
    {
        std::size_t hi = c_.size();
        while (hi > 0 && c_[hi - 1] == 0) --hi;
        std::size_t lo = 0;
        while (lo < hi && c_[lo] == 0) ++lo;
        if (lo == hi) {
            c_.clear();
            low_ = 0;
            return;
        }
        c_.resize(hi);
        if (lo > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lo));
            low_ += static_cast<long>(lo);
        }
    }

    LaurentPoly& accumulate(const LaurentPoly& o, int sign)
    {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            if (sign < 0)
                for (auto& x : c_) x = -x;
            return *this;
        }
        long lo = std::min(low_, o.low_);
        long hi = std::max(high(), o.high());
        if (lo < low_) c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
        low_ = lo;
        c_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            auto idx = static_cast<std::size_t>(o.low_ - lo) + k;
            if (sign > 0)
                c_[idx] += o.c_[k];
            else
                c_[idx] -= o.c_[k];
        }
        trim();
        return *this;
    }
};

/// Element of Q(v) as a reduced fraction num/den.  The denominator is monic
/// with lowest exponent zero, so equal field elements compare equal
/// structurally.  A polynomial value stores no denominator at all.
class QScalar {
public:
    QScalar() = default;
    QScalar(long c) : num_(LaurentPoly::constant(c)) {}             // NOLINT
    QScalar(const Rational& c) : num_(LaurentPoly::constant(c)) {}  // NOLINT
    QScalar(LaurentPoly p) : num_(std::move(p)) {}                  // NOLINT

    static QScalar vpow(long e) { return QScalar(LaurentPoly::monomial(e)); }

    static QScalar fraction(LaurentPoly num, LaurentPoly den)
    {
        if (den.is_zero()) throw DomainError("zero denominator");
        QScalar s;
        s.assign(std::move(num), std::move(den));
        return s;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return !has_den_ && num_.is_one(); }
    bool is_polynomial() const { return !has_den_; }

    const LaurentPoly& num() const { return num_; }
    LaurentPoly den() const { return has_den_ ? den_ : LaurentPoly::constant(1); }

    QScalar operator-() const
    {
        QScalar s = *this;
        s.num_ = -s.num_;
        return s;
    }

    QScalar& operator+=(const QScalar& o) { return add(o, false); }
    QScalar& operator-=(const QScalar& o) { return add(o, true); }

    QScalar& operator*=(const QScalar& o)
    {
        if (is_zero()) return *this;
        if (o.is_zero()) return *this = QScalar{};
        if (!has_den_ && !o.has_den_) {
            num_ = num_ * o.num_;
            return *this;
        }
        if (o.num_.is_monomial() && !o.has_den_) {
            num_ = num_.shifted(o.num_.low()) * o.num_.trailing();
            return *this;
        }
        if (num_.is_monomial() && !has_den_) {
            Rational c = num_.trailing();
            long s = num_.low();
            *this = o;
            num_ = num_.shifted(s) * c;
            return *this;
        }
        // cross-cancel before multiplying; both inputs are already reduced
        LaurentPoly n1 = num_, d1 = den(), n2 = o.num_, d2 = o.den();
        LaurentPoly g1 = LaurentPoly::gcd(n1, d2);
        LaurentPoly g2 = LaurentPoly::gcd(n2, d1);
        if (!g1.is_one()) {
            n1 = LaurentPoly::exact_div(n1, g1);
            d2 = LaurentPoly::exact_div(d2, g1);
        }
        if (!g2.is_one()) {
            n2 = LaurentPoly::exact_div(n2, g2);
            d1 = LaurentPoly::exact_div(d1, g2);
        }
        assign_reduced(n1 * n2, d1 * d2);
        return *this;
    }

    QScalar& operator/=(const QScalar& o) { return *this *= o.inverse(); }

    QScalar inverse() const
    {
        if (is_zero()) throw DomainError("inverse of zero");
        QScalar s;
        s.assign_reduced(den(), num_);
        return s;
    }

    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

    friend bool operator==(const QScalar& a, const QScalar& b)
    {
        return a.has_den_ == b.has_den_ && a.num_ == b.num_ && (!a.has_den_ || a.den_ == b.den_);
    }

    std::string to_string() const
    {
        if (!has_den_) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const QScalar& s) { return os << s.to_string(); }

private:
    LaurentPoly num_;
    LaurentPoly den_;  // meaningful only when has_den_
    bool has_den_ = false;

    QScalar& add(const QScalar& o, bool subtract)
    {
        if (o.is_zero()) return *this;
        if (!has_den_ && !o.has_den_) {
            if (subtract)
                num_ -= o.num_;
            else
                num_ += o.num_;
            return *this;
        }
        if (is_zero()) {
            *this = subtract ? -o : o;
            return *this;
        }
        LaurentPoly on = subtract ? -o.num_ : o.num_;
        if (has_den_ && o.has_den_ && den_ == o.den_) {
            assign(num_ + on, den_);
            return *this;
        }
        LaurentPoly d1 = den(), d2 = o.den();
        LaurentPoly g = LaurentPoly::gcd(d1, d2);
        LaurentPoly c1 = g.is_one() ? d1 : LaurentPoly::exact_div(d1, g);
        LaurentPoly c2 = g.is_one() ? d2 : LaurentPoly::exact_div(d2, g);
        assign(num_ * c2 + on * c1, d1 * c2);
        return *this;
    }

    // Reduce num/den by their gcd, then normalise the denominator.
    void assign(LaurentPoly num, LaurentPoly den)
    {
        if (num.is_zero()) {
            *this = QScalar{};
            return;
        }
        if (!den.is_monomial()) {
            LaurentPoly g = LaurentPoly::gcd(num, den);
            if (!g.is_one()) {
                num = LaurentPoly::exact_div(num, g);
                den = LaurentPoly::exact_div(den, g);
            }
        }
        assign_reduced(std::move(num), std::move(den));
    }

    // num and den are coprime up to units; move units of den into num.
    void assign_reduced(LaurentPoly num, LaurentPoly den)
    {
        if (num.is_zero()) {
            *this = QScalar{};
            return;
        }
        long s = den.low();
        Rational lc = den.leading();
        num = num.shifted(-s) * Rational(1 / lc);
        if (den.is_monomial()) {
            num_ = std::move(num);
            den_ = LaurentPoly{};
            has_den_ = false;
            return;
        }
        den = den.shifted(-s) * Rational(1 / lc);
        num_ = std::move(num);
        den_ = std::move(den);
        has_den_ = true;
    }
};

/// q^e = v^(unit * e), where unit is the number of v-steps per power of q.
inline QScalar q_power(const Rational& e, long unit)
{
    Rational x = e * unit;
    if (x.get_den() != 1) throw PreconditionError("q-power exponent not representable in the current unit");
    return QScalar::vpow(x.get_num().get_si());
}

/// [m]_{q^d} = (q^{dm} - q^{-dm}) / (q^d - q^{-d}), as its Laurent expansion.
inline QScalar q_int(long m, long d, long unit)
{
    if (m < 0 || d < 1) throw PreconditionError("q_int requires m >= 0, d >= 1");
    LaurentPoly p;
    const long step = d * unit;
    for (long k = 0; k < m; ++k) p += LaurentPoly::monomial(step * (m - 1 - 2 * k));
    return QScalar(p);
}

/// Signed q-integer: [-m] = -[m].
inline QScalar q_int_signed(long m, long d, long unit)
{
    return m >= 0 ? q_int(m, d, unit) : -q_int(-m, d, unit);
}

inline QScalar q_factorial(long m, long d, long unit)
{
    if (m < 0) throw PreconditionError("q_factorial requires m >= 0");
    QScalar f(1);
    for (long k = 2; k <= m; ++k) f *= q_int(k, d, unit);
    return f;
}

inline QScalar q_binom(long m, long k, long d, long unit)
{
    if (k < 0 || k > m) throw PreconditionError("q_binom requires 0 <= k <= m");
    return q_factorial(m, d, unit) / (q_factorial(m - k, d, unit) * q_factorial(k, d, unit));
}

/// Value at q = 1.
inline Rational classical_limit(const QScalar& s)
{
    Rational d = s.den().at_one();
    if (d == 0) throw DomainError("classical limit does not exist: pole at q = 1");
    return s.num().at_one() / d;
}

} // namespace qcentre
