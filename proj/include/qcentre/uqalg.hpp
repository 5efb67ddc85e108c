#pragma once

// Words in E_i, F_i, K_mu kept in F...F K E...E order, with the E/F
// commutation relation applied on every product.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcentre/errors.hpp"
#include "qcentre/qfield.hpp"
#include "qcentre/rootdata.hpp"

namespace qcentre {

/// A word in one kind of generator; each char is a 0-based simple index.
using Word = std::string;

/// F_{f_1} ... F_{f_a} K_k E_{e_1} ... E_{e_b}.
struct Monomial {
    Word f;
    Weight k;
    Word e;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.f <=> b.f; c != 0) return c;
        if (auto c = a.k <=> b.k; c != 0) return c;
        return a.e <=> b.e;
    }

    bool is_cartan() const { return f.empty() && e.empty(); }

    /// Tokens such as "F2", "K:(-1,2)", "E1" (1-based indices).
    std::vector<std::string> tokens() const
    {
        std::vector<std::string> out;
        for (char c : f) out.push_back("F" + std::to_string(c + 1));
        if (!k.is_zero()) out.push_back("K:" + k.to_string());
        for (char c : e) out.push_back("E" + std::to_string(c + 1));
        return out;
    }
    std::string to_string() const
    {
        std::string s;
        for (const auto& t : tokens()) s += (s.empty() ? "" : " ") + t;
        return s.empty() ? "1" : s;
    }
};

inline Word letter(int i) { return Word(1, static_cast<char>(i)); }

/// Finite linear combination of monomials; zero coefficients are never stored.
class AlgebraElement {
public:
    using Terms = std::map<Monomial, QScalar>;

    AlgebraElement() = default;
    AlgebraElement(const Monomial& m, const QScalar& c)
    {
        if (!c.is_zero()) terms_.emplace(m, c);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    QScalar coeff(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? QScalar{} : it->second;
    }

    void add(const Monomial& m, const QScalar& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(Monomial&& m, const QScalar& c)
    {
        if (c.is_zero()) return;
        auto it = terms_.lower_bound(m);
        if (it != terms_.end() && it->first == m) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.emplace_hint(it, std::move(m), c);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o)
    {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o)
    {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    AlgebraElement& operator*=(const QScalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        if (s.is_one()) return *this;
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    AlgebraElement operator-() const
    {
        AlgebraElement r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const QScalar& s) { return a *= s; }
    friend AlgebraElement operator*(const QScalar& s, AlgebraElement a) { return a *= s; }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")*" + m.to_string());
        return s;
    }

private:
    Terms terms_;
};

/// Element of U (x) U as combinations of pairs of monomials.
class TensorElement {
public:
    using Key = std::pair<Monomial, Monomial>;
    using Terms = std::map<Key, QScalar>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Monomial& a, const Monomial& b, const QScalar& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(Key{a, b}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    TensorElement& operator+=(const TensorElement& o)
    {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o)
    {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    Terms terms_;
};

/// U_q(g) for a fixed Cartan datum: products, Hopf structure and adjoint action.
/// Products of E-words with F-words are memoised; the cache is thread-safe.
class QuantumGroup {
public:
    explicit QuantumGroup(CartanDatum datum) : d_(std::move(datum))
    {
        for (int i = 0; i < d_.rank(); ++i) {
            QScalar qi = QScalar::vpow(d_.qi_v(i));
            inv_qdiff_.push_back((qi - qi.inverse()).inverse());
        }
    }
    QuantumGroup(const QuantumGroup& o) : d_(o.d_), inv_qdiff_(o.inv_qdiff_) {}

    const CartanDatum& datum() const { return d_; }
    int rank() const { return d_.rank(); }
    long unit() const { return d_.unit(); }

    /// q^{(lambda, mu)}.
    QScalar q_inner(const Weight& l, const Weight& m) const { return QScalar::vpow(d_.inner_v(l, m)); }
    /// q_i = q^{d_i}.
    QScalar q_i(int i) const { return QScalar::vpow(d_.qi_v(i)); }
    /// 1 / (q_i - q_i^{-1}).
    const QScalar& inv_qdiff(int i) const { return inv_qdiff_[static_cast<std::size_t>(i)]; }

    Monomial unit_monomial() const { return Monomial{{}, d_.zero(), {}}; }
    AlgebraElement one() const { return scalar(QScalar(1)); }
    AlgebraElement scalar(const QScalar& c) const { return AlgebraElement(unit_monomial(), c); }
    AlgebraElement E(int i) const { return AlgebraElement(Monomial{{}, d_.zero(), letter(check(i))}, QScalar(1)); }
    AlgebraElement F(int i) const { return AlgebraElement(Monomial{letter(check(i)), d_.zero(), {}}, QScalar(1)); }
    AlgebraElement K(const Weight& mu) const
    {
        if (mu.rank() != rank()) throw PreconditionError("weight rank differs from the algebra rank");
        return AlgebraElement(Monomial{{}, mu, {}}, QScalar(1));
    }
    AlgebraElement E_word(const Word& w) const { return AlgebraElement(Monomial{{}, d_.zero(), w}, QScalar(1)); }
    AlgebraElement F_word(const Word& w) const { return AlgebraElement(Monomial{w, d_.zero(), {}}, QScalar(1)); }

    /// Sum of the simple roots labelling the letters of w.
    Weight content(const Word& w) const
    {
        Weight s = d_.zero();
        for (char c : w) s += d_.simple_root(c);
        return s;
    }

    /// E-word times F-word rewritten in F K E order.
    const AlgebraElement& straighten(const Word& e, const Word& f) const
    {
        auto key = std::make_pair(e, f);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        AlgebraElement r = compute_straighten(e, f);
        std::lock_guard<std::mutex> lock(mu_);
        return cache_.emplace(std::move(key), std::move(r)).first->second;
    }

    AlgebraElement multiply(const Monomial& a, const Monomial& b) const
    {
        AlgebraElement out;
        accumulate_product(out, a, b, QScalar(1));
        return out;
    }

    /// out += c * a * b.
    void accumulate_product(AlgebraElement& out, const Monomial& a, const Monomial& b, const QScalar& c) const
    {
        if (a.e.empty() || b.f.empty()) {
            // no E/F exchange: only commute K_a past b.f and a.e past K_b
            long ex = -d_.inner_v(a.k, content(b.f)) - d_.inner_v(b.k, content(a.e));
            out.add(Monomial{a.f + b.f, a.k + b.k, a.e + b.e}, c * QScalar::vpow(ex));
            return;
        }
        const AlgebraElement& s = straighten(a.e, b.f);
        for (const auto& [m, sc] : s.terms()) {
            long ex = -d_.inner_v(a.k, content(m.f)) - d_.inner_v(b.k, content(m.e));
            out.add(Monomial{a.f + m.f, a.k + m.k + b.k, m.e + b.e}, c * sc * QScalar::vpow(ex));
        }
    }

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const
    {
        AlgebraElement out;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) accumulate_product(out, ma, mb, ca * cb);
        return out;
    }
    AlgebraElement multiply(std::initializer_list<AlgebraElement> xs) const
    {
        AlgebraElement r = one();
        for (const auto& x : xs) r = multiply(r, x);
        return r;
    }

    AlgebraElement power(const AlgebraElement& x, int k) const
    {
        if (k < 0) throw PreconditionError("negative power");
        AlgebraElement r = one();
        for (int i = 0; i < k; ++i) r = multiply(r, x);
        return r;
    }

    AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) const
    {
        return multiply(a, b) - multiply(b, a);
    }

    /// Q-degree: sum of E letters minus sum of F letters, if all terms agree.
    std::optional<Weight> grading(const AlgebraElement& x) const
    {
        std::optional<Weight> g;
        for (const auto& [m, c] : x.terms()) {
            Weight w = content(m.e) - content(m.f);
            if (g && !(*g == w)) return std::nullopt;
            g = w;
        }
        return g ? g : std::optional<Weight>(d_.zero());
    }

    // ---- U (x) U ----

    TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b) const
    {
        TensorElement t;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) t.add(ma, mb, ca * cb);
        return t;
    }

    TensorElement multiply(const TensorElement& a, const TensorElement& b) const
    {
        TensorElement out;
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) {
                AlgebraElement left = multiply(ka.first, kb.first);
                AlgebraElement right = multiply(ka.second, kb.second);
                QScalar c = ca * cb;
                for (const auto& [ml, cl] : left.terms())
                    for (const auto& [mr, cr] : right.terms()) out.add(ml, mr, c * cl * cr);
            }
        return out;
    }

    TensorElement comultiply(const Monomial& m) const
    {
        TensorElement r = tensor(K(m.k), K(m.k));
        for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) r = multiply(delta_F(*it), r);
        for (char c : m.e) r = multiply(r, delta_E(c));
        return r;
    }

    TensorElement comultiply(const AlgebraElement& x) const
    {
        TensorElement out;
        for (const auto& [m, c] : x.terms()) {
            TensorElement dm = comultiply(m);
            for (const auto& [k, v] : dm.terms()) out.add(k.first, k.second, c * v);
        }
        return out;
    }

    /// Flip of the tensor legs.
    TensorElement flip(const TensorElement& t) const
    {
        TensorElement out;
        for (const auto& [k, c] : t.terms()) out.add(k.second, k.first, c);
        return out;
    }

    /// The algebra map with E(x)1 -> E(x)K^-1, F(x)1 -> F(x)K, 1(x)E -> K^-1(x)E,
    /// 1(x)F -> K(x)F fixing all K(x)K'.
    TensorElement psi(const TensorElement& t) const
    {
        TensorElement out;
        for (const auto& [k, c] : t.terms()) {
            const auto& [a, b] = k;
            Weight ga = content(a.e) - content(a.f);
            Weight gb = content(b.e) - content(b.f);
            AlgebraElement left = multiply(a, Monomial{{}, -gb, {}});
            AlgebraElement right = multiply(Monomial{{}, -ga, {}}, b);
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms()) out.add(ml, mr, c * cl * cr);
        }
        return out;
    }

    AlgebraElement antipode(const Monomial& m) const
    {
        AlgebraElement r = one();
        for (auto it = m.e.rbegin(); it != m.e.rend(); ++it)
            r = multiply(r, -multiply(K(-d_.simple_root(*it)), E(*it)));
        r = multiply(r, K(-m.k));
        for (auto it = m.f.rbegin(); it != m.f.rend(); ++it)
            r = multiply(r, -multiply(F(*it), K(d_.simple_root(*it))));
        return r;
    }

    AlgebraElement antipode(const AlgebraElement& x) const
    {
        AlgebraElement out;
        for (const auto& [m, c] : x.terms()) out += antipode(m) * c;
        return out;
    }

    QScalar counit(const AlgebraElement& x) const
    {
        QScalar s;
        for (const auto& [m, c] : x.terms())
            if (m.is_cartan()) s += c;
        return s;
    }

    /// Multiplication map U (x) U -> U.
    AlgebraElement contract(const TensorElement& t) const
    {
        AlgebraElement out;
        for (const auto& [k, c] : t.terms()) accumulate_product(out, k.first, k.second, c);
        return out;
    }

    /// ad(x)(y) = sum x_(1) y S(x_(2)).
    AlgebraElement adjoint(const AlgebraElement& x, const AlgebraElement& y) const
    {
        AlgebraElement out;
        TensorElement dx = comultiply(x);
        for (const auto& [k, c] : dx.terms()) {
            AlgebraElement left = multiply(AlgebraElement(k.first, c), y);
            out += multiply(left, antipode(k.second));
        }
        return out;
    }

    /// Parses tokens "E1", "F2", "K:(a,b)" (or "K:a,b") and multiplies them in order.
    AlgebraElement parse_word(const std::vector<std::string>& tokens) const
    {
        AlgebraElement r = one();
        for (const auto& t : tokens) r = multiply(r, parse_token(t));
        return r;
    }

    AlgebraElement parse_token(const std::string& t) const
    {
        if (t.empty()) throw PreconditionError("empty generator token");
        if (t[0] == 'E' || t[0] == 'F') {
            int i = 0;
            try {
                i = std::stoi(t.substr(1)) - 1;
            } catch (const std::exception&) {
                throw PreconditionError("bad generator token: " + t);
            }
            return t[0] == 'E' ? E(i) : F(i);
        }
        if (t.rfind("K:", 0) == 0) {
            std::string body = t.substr(2);
            std::vector<int> cs;
            std::string cur;
            for (char ch : body) {
                if (ch == '(' || ch == ')' || ch == ' ') continue;
                if (ch == ',') {
                    cs.push_back(std::stoi(cur));
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            if (!cur.empty()) cs.push_back(std::stoi(cur));
            if (static_cast<int>(cs.size()) != rank()) throw PreconditionError("K weight has wrong rank: " + t);
            return K(Weight::from(cs));
        }
        throw PreconditionError("bad generator token: " + t);
    }

private:
    CartanDatum d_;
    std::vector<QScalar> inv_qdiff_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<Word, Word>, AlgebraElement> cache_;

    int check(int i) const
    {
        if (i < 0 || i >= rank()) throw PreconditionError("generator index out of range");
        return i;
    }

    TensorElement delta_E(int i) const
    {
        TensorElement t;
        t.add(Monomial{{}, d_.simple_root(i), {}}, Monomial{{}, d_.zero(), letter(i)}, QScalar(1));
        t.add(Monomial{{}, d_.zero(), letter(i)}, unit_monomial(), QScalar(1));
        return t;
    }
    TensorElement delta_F(int i) const
    {
        TensorElement t;
        t.add(Monomial{letter(i), d_.zero(), {}}, Monomial{{}, -d_.simple_root(i), {}}, QScalar(1));
        t.add(unit_monomial(), Monomial{letter(i), d_.zero(), {}}, QScalar(1));
        return t;
    }

    AlgebraElement compute_straighten(const Word& e, const Word& f) const
    {
        if (e.empty() || f.empty()) return AlgebraElement(Monomial{f, d_.zero(), e}, QScalar(1));
        const Word head = e.substr(0, e.size() - 1);
        const int i = e.back();
        const Weight& ai = d_.simple_root(i);
        AlgebraElement out;
        for (const auto& [m, c] : straighten(head, f).terms()) out.add(Monomial{m.f, m.k, m.e + e.back()}, c);
        Weight tail = d_.zero();
        for (int p = static_cast<int>(f.size()) - 1; p >= 0; --p) {
            if (f[static_cast<std::size_t>(p)] == i) {
                Word rest = f.substr(0, static_cast<std::size_t>(p)) + f.substr(static_cast<std::size_t>(p) + 1);
                long g = d_.inner_v(ai, tail);
                QScalar plus = QScalar::vpow(-g) * inv_qdiff(i);
                QScalar minus = -QScalar::vpow(g) * inv_qdiff(i);
                for (const auto& [m, c] : straighten(head, rest).terms()) {
                    long sh = d_.inner_v(ai, content(m.e));
                    // (f K e) K_mu = q^{-(mu, |e|)} f K K_mu e
                    out.add(Monomial{m.f, m.k + ai, m.e}, c * plus * QScalar::vpow(-sh));
                    out.add(Monomial{m.f, m.k - ai, m.e}, c * minus * QScalar::vpow(sh));
                }
            }
            tail += d_.simple_root(f[static_cast<std::size_t>(p)]);
        }
        return out;
    }
};

} // namespace qcentre
