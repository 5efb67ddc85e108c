#pragma once

// Cartan data, the weight lattice in fundamental coordinates, the Weyl group
// action and positive roots from a reduced word for the longest element.

#include <algorithm>
#include <array>
#include <compare>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcentre/errors.hpp"
#include "qcentre/qfield.hpp"

namespace qcentre {

inline constexpr int kMaxRank = 8;

/// Element of the weight lattice P, in fundamental-weight coordinates.
class Weight {
public:
    Weight() = default;
    explicit Weight(int rank) : n_(rank)
    {
        if (rank < 0 || rank > kMaxRank) throw PreconditionError("rank out of range");
    }
    Weight(std::initializer_list<int> coords) : Weight(static_cast<int>(coords.size()))
    {
        std::copy(coords.begin(), coords.end(), c_.begin());
    }
    static Weight from(const std::vector<int>& coords)
    {
        Weight w(static_cast<int>(coords.size()));
        std::copy(coords.begin(), coords.end(), w.c_.begin());
        return w;
    }

    int rank() const { return n_; }
    int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    std::vector<int> coords() const { return {c_.begin(), c_.begin() + n_}; }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.begin() + n_, [](int x) { return x == 0; });
    }
    bool is_dominant() const
    {
        return std::all_of(c_.begin(), c_.begin() + n_, [](int x) { return x >= 0; });
    }

    Weight& operator+=(const Weight& o)
    {
        for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int s, Weight a)
    {
        for (int i = 0; i < a.n_; ++i) a.c_[i] *= s;
        return a;
    }
    Weight operator-() const { return -1 * *this; }

    friend bool operator==(const Weight& a, const Weight& b) = default;
    // Lexicographic on (k_1, ..., k_n).
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b)
    {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        for (int i = 0; i < a.n_; ++i)
            if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
        return std::strong_ordering::equal;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < n_; ++i) os << (i ? "," : "") << c_[i];
        os << ")";
        return os.str();
    }

private:
    std::array<int, kMaxRank> c_{};
    int n_ = 0;
};

/// Strict lexicographic order on fundamental coordinates.
inline bool lex_less(const Weight& mu, const Weight& lambda) { return mu < lambda; }

/// Simple-reflection indices (0-based) of a word in the Weyl group.
struct ReducedWord {
    std::vector<int> letters;
};

class CartanDatum {
public:
    /// Simple Lie algebras in Bourbaki numbering.
    static CartanDatum make(char type, int rank)
    {
        std::vector<std::vector<int>> a(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
        auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v; };
        auto chain = [&]() {
            for (int i = 0; i < rank; ++i) set(i, i, 2);
            for (int i = 0; i + 1 < rank; ++i) {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
        };
        type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
        if (rank < 1 || rank > kMaxRank) throw PreconditionError("unsupported rank");
        switch (type) {
        case 'A':
            chain();
            break;
        case 'B':
            if (rank < 2) throw PreconditionError("type B needs rank >= 2");
            chain();
            set(rank - 1, rank - 2, -2);  // alpha_n short
            break;
        case 'C':
            if (rank < 2) throw PreconditionError("type C needs rank >= 2");
            chain();
            set(rank - 2, rank - 1, -2);  // alpha_n long
            break;
        case 'D':
            if (rank < 4) throw PreconditionError("type D needs rank >= 4");
            chain();
            set(rank - 2, rank - 1, 0);
            set(rank - 1, rank - 2, 0);
            set(rank - 3, rank - 1, -1);
            set(rank - 1, rank - 3, -1);
            break;
        case 'E':
            if (rank < 6 || rank > 8) throw PreconditionError("type E needs rank 6..8");
            for (int i = 0; i < rank; ++i) set(i, i, 2);
            // 1-3-4-5-6(-7-8) with 2 attached to 4
            for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {2, 3}, {3, 4}, {1, 3}}) {
                set(i, j, -1);
                set(j, i, -1);
            }
            for (int i = 4; i + 1 < rank; ++i) {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            break;
        case 'F':
            if (rank != 4) throw PreconditionError("type F needs rank 4");
            chain();
            set(2, 1, -2);
            break;
        case 'G':
            if (rank != 2) throw PreconditionError("type G needs rank 2");
            chain();
            set(0, 1, -3);
            break;
        default:
            throw PreconditionError(std::string("unknown Cartan type ") + type);
        }
        return CartanDatum(type, rank, std::move(a));
    }

    /// Parses labels such as "A2", "G2" or type/rank pairs.
    static CartanDatum parse(const std::string& label)
    {
        if (label.size() < 2) throw PreconditionError("bad Cartan label: " + label);
        return make(label[0], std::stoi(label.substr(1)));
    }

    char type() const { return type_; }
    int rank() const { return n_; }
    std::string label() const { return std::string(1, type_) + std::to_string(n_); }
    int a(int i, int j) const { return a_[idx(i)][idx(j)]; }
    int d(int i) const { return d_[idx(i)]; }

    /// alpha_i in fundamental coordinates (column i of the Cartan matrix).
    const Weight& simple_root(int i) const { return alpha_[idx(i)]; }
    Weight fundamental(int i) const
    {
        Weight w(n_);
        w[i] = 1;
        return w;
    }
    Weight zero() const { return Weight(n_); }

    /// Minimal l with l (lambda, mu) integral on P.
    int ell() const { return ell_; }
    /// v-steps per power of q; v = q^(1/(2 l)) so that q^((lambda,mu)/2) is representable.
    long unit() const { return 2L * ell_; }

    /// (lambda, mu) exactly.
    Rational inner(const Weight& l, const Weight& m) const
    {
        Rational r(gram_dot(l, m), ell_);
        r.canonicalize();
        return r;
    }
    /// Exponent of v in q^{(lambda, mu)}.
    long inner_v(const Weight& l, const Weight& m) const { return 2L * gram_dot(l, m); }
    /// Exponent of v in q_i = q^{d_i}.
    long qi_v(int i) const { return unit() * d(i); }

    Weight simple_reflection(int i, Weight w) const
    {
        int c = w[i];
        if (c != 0) w -= c * simple_root(i);
        return w;
    }

    Weight apply_word(const std::vector<int>& word, Weight w) const
    {
        // s_{i_1} ... s_{i_k} w: rightmost reflection acts first
        for (auto it = word.rbegin(); it != word.rend(); ++it) w = simple_reflection(*it, w);
        return w;
    }

    /// The full orbit W.w, sorted lexicographically.
    std::vector<Weight> weyl_orbit(const Weight& w) const
    {
        std::set<Weight> seen{w};
        std::vector<Weight> frontier{w};
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto& x : frontier)
                for (int i = 0; i < n_; ++i) {
                    Weight y = simple_reflection(i, x);
                    if (seen.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return {seen.begin(), seen.end()};
    }

    Weight dominant_conjugate(Weight w) const
    {
        for (bool moved = true; moved;) {
            moved = false;
            for (int i = 0; i < n_; ++i)
                if (w[i] < 0) {
                    w = simple_reflection(i, w);
                    moved = true;
                }
        }
        return w;
    }

    /// Coordinates in the basis of simple roots, if w lies in Q.
    std::optional<std::vector<int>> root_coords(const Weight& w) const
    {
        std::vector<int> out(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            Rational s = 0;
            for (int j = 0; j < n_; ++j) s += cinv_[idx(i)][idx(j)] * w[j];
            if (s.get_den() != 1) return std::nullopt;
            out[idx(i)] = static_cast<int>(s.get_num().get_si());
        }
        return out;
    }

    Weight from_root_coords(const std::vector<int>& c) const
    {
        Weight w(n_);
        for (int i = 0; i < n_; ++i) w += c[idx(i)] * simple_root(i);
        return w;
    }

    /// Height of w in Q (sum of simple-root coordinates); nullopt outside Q.
    std::optional<int> height(const Weight& w) const
    {
        auto c = root_coords(w);
        if (!c) return std::nullopt;
        return std::accumulate(c->begin(), c->end(), 0);
    }

    bool is_positive_root_combination(const Weight& w) const
    {
        auto c = root_coords(w);
        return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
    }

    /// mu <= lambda in the dominance order.
    bool dominance_leq(const Weight& mu, const Weight& lambda) const
    {
        return is_positive_root_combination(lambda - mu);
    }

    /// Positive roots, sorted by height then lexicographically.
    const std::vector<Weight>& positive_roots() const { return pos_roots_; }
    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }

    Weight rho() const
    {
        Weight r(n_);
        for (int i = 0; i < n_; ++i) r[i] = 1;
        return r;
    }

    /// (beta, beta)/2 for a root beta: q_beta = q^{root_d(beta)}.
    long root_d(const Weight& beta) const
    {
        Rational x = inner(beta, beta) / 2;
        if (x.get_den() != 1) throw PreconditionError("not a root: " + beta.to_string());
        return x.get_num().get_si();
    }

    /// Deterministic reduced word for w_0: repeatedly reflect rho in the
    /// smallest index with positive coordinate until it is antidominant.
    ReducedWord default_reduced_word() const
    {
        ReducedWord w;
        Weight x = rho();
        for (;;) {
            int pick = -1;
            for (int i = 0; i < n_; ++i)
                if (x[i] > 0) {
                    pick = i;
                    break;
                }
            if (pick < 0) break;
            x = simple_reflection(pick, x);
            w.letters.push_back(pick);
        }
        return w;
    }

    /// beta_r = s_{i_1} ... s_{i_{r-1}} (alpha_{i_r}); throws if the word is
    /// not a reduced expression of the longest element.
    std::vector<Weight> positive_roots(const ReducedWord& word) const
    {
        if (static_cast<int>(word.letters.size()) != num_positive_roots())
            throw PreconditionError("word length differs from the number of positive roots");
        std::vector<Weight> out;
        std::set<Weight> seen;
        std::vector<int> prefix;
        for (int i : word.letters) {
            if (i < 0 || i >= n_) throw PreconditionError("reflection index out of range");
            Weight beta = apply_word(prefix, simple_root(i));
            if (!is_positive_root_combination(beta) || !seen.insert(beta).second)
                throw PreconditionError("word is not reduced for the longest element");
            out.push_back(beta);
            prefix.push_back(i);
        }
        return out;
    }

    /// True iff s_{i_1}...s_{i_N} sends every simple root to a negative root.
    bool is_longest(const ReducedWord& word) const
    {
        for (int j = 0; j < n_; ++j)
            if (!is_positive_root_combination(-apply_word(word.letters, simple_root(j)))) return false;
        return true;
    }

    friend bool operator==(const CartanDatum& a, const CartanDatum& b)
    {
        return a.type_ == b.type_ && a.n_ == b.n_;
    }

private:
    char type_;
    int n_;
    std::vector<std::vector<int>> a_;
    std::vector<int> d_;
    std::vector<Weight> alpha_;
    std::vector<std::vector<Rational>> cinv_;  // inverse Cartan matrix
    std::vector<std::vector<long>> gram_;      // ell * (varpi_i, varpi_j)
    int ell_ = 1;
    std::vector<Weight> pos_roots_;

    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

    long gram_dot(const Weight& l, const Weight& m) const
    {
        long s = 0;
        for (int i = 0; i < n_; ++i) {
            if (l[i] == 0) continue;
            for (int j = 0; j < n_; ++j) s += l[i] * gram_[idx(i)][idx(j)] * m[j];
        }
        return s;
    }

    CartanDatum(char type, int n, std::vector<std::vector<int>> a) : type_(type), n_(n), a_(std::move(a))
    {
        // symmetrizers: d_i a_ij = d_j a_ji, min d_i = 1
        d_.assign(idx(n), 0);
        d_[0] = 1;
        std::vector<Rational> dr(idx(n), Rational(0));
        dr[0] = 1;
        for (bool changed = true; changed;) {
            changed = false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (dr[idx(i)] != 0 && dr[idx(j)] == 0 && a_[idx(i)][idx(j)] != 0) {
                        dr[idx(j)] = dr[idx(i)] * a_[idx(i)][idx(j)] / a_[idx(j)][idx(i)];
                        changed = true;
                    }
        }
        Rational mn = *std::min_element(dr.begin(), dr.end());
        for (int i = 0; i < n; ++i) {
            Rational x = dr[idx(i)] / mn;
            if (x.get_den() != 1) throw PreconditionError("non-integral symmetrizer");
            d_[idx(i)] = static_cast<int>(x.get_num().get_si());
        }
        for (int i = 0; i < n; ++i) {
            if (a_[idx(i)][idx(i)] != 2) throw PreconditionError("Cartan diagonal must be 2");
            for (int j = 0; j < n; ++j) {
                if (i != j && (a_[idx(i)][idx(j)] > 0 || a_[idx(i)][idx(j)] < -3))
                    throw PreconditionError("off-diagonal Cartan entry out of range");
                if (d_[idx(i)] * a_[idx(i)][idx(j)] != d_[idx(j)] * a_[idx(j)][idx(i)])
                    throw PreconditionError("Cartan matrix is not symmetrizable");
            }
        }
        for (int i = 0; i < n; ++i) {
            Weight w(n);
            for (int j = 0; j < n; ++j) w[j] = a_[idx(j)][idx(i)];
            alpha_.push_back(w);
        }
        // inverse Cartan matrix by Gauss-Jordan over Q
        std::vector<std::vector<Rational>> m(idx(n), std::vector<Rational>(idx(2 * n), Rational(0)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[idx(i)][idx(j)] = a_[idx(i)][idx(j)];
            m[idx(i)][idx(n + i)] = 1;
        }
        for (int c = 0; c < n; ++c) {
            int p = c;
            while (m[idx(p)][idx(c)] == 0) ++p;
            std::swap(m[idx(p)], m[idx(c)]);
            Rational inv = 1 / m[idx(c)][idx(c)];
            for (auto& x : m[idx(c)]) x *= inv;
            for (int r = 0; r < n; ++r)
                if (r != c && m[idx(r)][idx(c)] != 0) {
                    Rational f = m[idx(r)][idx(c)];
                    for (int k = 0; k < 2 * n; ++k) m[idx(r)][idx(k)] -= f * m[idx(c)][idx(k)];
                }
        }
        cinv_.assign(idx(n), std::vector<Rational>(idx(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cinv_[idx(i)][idx(j)] = m[idx(i)][idx(n + j)];
        // (varpi_i, varpi_j) = B = D A^{-1} in this column convention: (varpi_i, alpha_j) = d_j delta_ij
        std::vector<std::vector<Rational>> b(idx(n), std::vector<Rational>(idx(n)));
        Integer l = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                // varpi_j = sum_k (A^{-1})_{kj} alpha_k in coordinates alpha_k = sum_i a_ik varpi_i
                b[idx(i)][idx(j)] = cinv_[idx(i)][idx(j)] * d_[idx(i)];
                l = lcm(l, b[idx(i)][idx(j)].get_den());
            }
        ell_ = static_cast<int>(l.get_si());
        gram_.assign(idx(n), std::vector<long>(idx(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational x = b[idx(i)][idx(j)] * ell_;
                gram_[idx(i)][idx(j)] = x.get_num().get_si();
            }
        // positive roots: orbit closure of simple roots
        std::set<Weight> roots;
        for (const auto& al : alpha_)
            for (const auto& r : weyl_orbit(al)) roots.insert(r);
        for (const auto& r : roots)
            if (is_positive_root_combination(r)) pos_roots_.push_back(r);
        std::sort(pos_roots_.begin(), pos_roots_.end(), [&](const Weight& x, const Weight& y) {
            int hx = *height(x), hy = *height(y);
            return hx != hy ? hx < hy : x < y;
        });
    }
};

} // namespace qcentre
