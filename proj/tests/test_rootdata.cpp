#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qcentre/rootdata.hpp"

using namespace qcentre;

namespace {

const std::vector<std::string> kTypes{"A1", "A2", "A3", "B2", "C2", "G2"};

// (varpi_i, varpi_j) = (A^{-1})_{ij} d_i, with A^{-1} from Gauss-Jordan elimination.
std::vector<std::vector<Rational>> gram_oracle(const CartanDatum& d)
{
    const int n = d.rank();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = d.a(i, j);
        m[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        Rational piv = m[c][c];
        for (auto& x : m[c]) x /= piv;
        for (int r = 0; r < n; ++r)
            if (r != c && m[r][c] != 0) {
                Rational f = m[r][c];
                for (int k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
            }
    }
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            g[i][j] = m[i][n + j] * d.d(i);
        }
    return g;
}

long lcm_of_denominators(const std::vector<std::vector<Rational>>& g)
{
    long l = 1;
    for (const auto& row : g)
        for (const auto& x : row) l = std::lcm(l, x.get_den().get_si());
    return l;
}

Weight random_weight(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> c(-4, 4);
    Weight w(n);
    for (int i = 0; i < n; ++i) w[i] = c(rng);
    return w;
}

} // namespace

TEST(Cartan, Symmetrizable)
{
    for (const auto& t : kTypes) {
        CartanDatum d = CartanDatum::parse(t);
        int mind = 100;
        for (int i = 0; i < d.rank(); ++i) {
            EXPECT_EQ(d.a(i, i), 2);
            mind = std::min(mind, d.d(i));
            for (int j = 0; j < d.rank(); ++j) EXPECT_EQ(d.d(i) * d.a(i, j), d.d(j) * d.a(j, i)) << t;
        }
        EXPECT_EQ(mind, 1) << t;
    }
}

TEST(Cartan, BadInput)
{
    EXPECT_THROW(CartanDatum::make('G', 3), PreconditionError);
    EXPECT_THROW(CartanDatum::make('X', 2), PreconditionError);
    EXPECT_THROW(CartanDatum::parse("B1"), PreconditionError);
}

TEST(Inner, Examples)
{
    CartanDatum a1 = CartanDatum::parse("A1"), a2 = CartanDatum::parse("A2");
    EXPECT_EQ(a1.inner(a1.fundamental(0), a1.simple_root(0)), Rational(1));
    EXPECT_EQ(a2.inner(a2.fundamental(0), a2.fundamental(0)), Rational(2, 3));
    EXPECT_EQ(a2.inner(Weight{3, -2}, a2.zero()), Rational(0));
}

TEST(Inner, MatchesInverseCartanOracle)
{
    for (const auto& t : kTypes) {
        CartanDatum d = CartanDatum::parse(t);
        auto g = gram_oracle(d);
        for (int i = 0; i < d.rank(); ++i)
            for (int j = 0; j < d.rank(); ++j) EXPECT_EQ(d.inner(d.fundamental(i), d.fundamental(j)), g[i][j]) << t;
        EXPECT_EQ(d.ell(), lcm_of_denominators(g)) << t;
    }
    EXPECT_EQ(CartanDatum::parse("A1").ell(), 2);
    EXPECT_EQ(CartanDatum::parse("A2").ell(), 3);
    EXPECT_EQ(CartanDatum::parse("G2").ell(), 1);
}

TEST(Inner, FundamentalAgainstSimpleRoots)
{
    for (const auto& t : kTypes) {
        CartanDatum d = CartanDatum::parse(t);
        for (int i = 0; i < d.rank(); ++i) {
            EXPECT_EQ(d.inner(d.simple_root(i), d.simple_root(i)), Rational(2 * d.d(i)));
            for (int j = 0; j < d.rank(); ++j)
                EXPECT_EQ(d.inner(d.fundamental(i), d.simple_root(j)), Rational(i == j ? d.d(j) : 0)) << t;
        }
    }
}

TEST(Inner, EllMakesProductsIntegral)
{
    std::mt19937 rng(11);
    for (const auto& t : kTypes) {
        CartanDatum d = CartanDatum::parse(t);
        for (int k = 0; k < 100; ++k) {
            Rational x = d.ell() * d.inner(random_weight(rng, d.rank()), random_weight(rng, d.rank()));
            EXPECT_EQ(x.get_den(), 1);
        }
    }
}

TEST(Weyl, Reflections)
{
    CartanDatum a1 = CartanDatum::parse("A1"), a2 = CartanDatum::parse("A2");
    EXPECT_EQ(a1.simple_reflection(0, Weight{1}), Weight{-1});
    EXPECT_EQ(a2.simple_reflection(1, a2.zero()), a2.zero());
    EXPECT_EQ(a2.simple_reflection(0, Weight{1, 1}), (Weight{-1, 2}));
    std::mt19937 rng(3);
    for (const auto& t : kTypes) {
        CartanDatum d = CartanDatum::parse(t);
        for (int k = 0; k < 20; ++k) {
            Weight w = random_weight(rng, d.rank());
            for (int i = 0; i < d.rank(); ++i) {
                EXPECT_EQ(d.simple_reflection(i, d.simple_reflection(i, w)), w);
                EXPECT_EQ(d.inner(d.simple_reflection(i, w), d.simple_reflection(i, w)), d.inner(w, w));
            }
        }
    }
}

TEST(Weyl, Orbits)
{
    CartanDatum a1 = CartanDatum::parse("A1"), a2 = CartanDatum::parse("A2");
    EXPECT_EQ(a2.weyl_orbit(a2.zero()).size(), 1u);
    auto o1 = a1.weyl_orbit(Weight{1});
    EXPECT_EQ(std::set<Weight>(o1.begin(), o1.end()), (std::set<Weight>{Weight{1}, Weight{-1}}));
    EXPECT_EQ(a2.weyl_orbit(Weight{1, 0}).size(), 3u);
    EXPECT_EQ(a2.weyl_orbit(Weight{1, 1}).size(), 6u);
    EXPECT_EQ(CartanDatum::parse("G2").weyl_orbit(Weight{1, 1}).size(), 12u);
    std::mt19937 rng(5);
    for (const auto& t : kTypes) {
        CartanDatum d = CartanDatum::parse(t);
        for (int k = 0; k < 10; ++k) {
            auto orb = d.weyl_orbit(random_weight(rng, d.rank()));
            std::set<Weight> s(orb.begin(), orb.end());
            int dominant = 0;
            for (const auto& w : orb) {
                dominant += w.is_dominant();
                for (int i = 0; i < d.rank(); ++i) EXPECT_TRUE(s.count(d.simple_reflection(i, w)));
            }
            EXPECT_EQ(dominant, 1);
        }
    }
}

TEST(Roots, FromReducedWords)
{
    CartanDatum a1 = CartanDatum::parse("A1"), a2 = CartanDatum::parse("A2");
    EXPECT_EQ(a1.positive_roots(ReducedWord{{0}}), std::vector<Weight>{a1.simple_root(0)});
    auto r = a2.positive_roots(ReducedWord{{0, 1, 0}});
    EXPECT_EQ(r, (std::vector<Weight>{a2.simple_root(0), a2.simple_root(0) + a2.simple_root(1), a2.simple_root(1)}));
    EXPECT_EQ(CartanDatum::parse("G2").positive_roots(ReducedWord{{1, 0, 1, 0, 1, 0}}).size(), 6u);
    EXPECT_THROW(a2.positive_roots(ReducedWord{{0, 0, 1}}), PreconditionError);
    EXPECT_THROW(a2.positive_roots(ReducedWord{{0, 1}}), PreconditionError);
}

TEST(Roots, SetIndependentOfWord)
{
    for (const std::string t : {"A2", "B2", "G2"}) {
        CartanDatum d = CartanDatum::parse(t);
        ReducedWord w1 = d.default_reduced_word();
        ReducedWord w2 = w1;
        for (auto& i : w2.letters) i = 1 - i;
        EXPECT_TRUE(d.is_longest(w1));
        EXPECT_TRUE(d.is_longest(w2));
        auto r1 = d.positive_roots(w1), r2 = d.positive_roots(w2);
        EXPECT_EQ(std::set<Weight>(r1.begin(), r1.end()), std::set<Weight>(r2.begin(), r2.end())) << t;
        auto all = d.positive_roots();
        EXPECT_EQ(std::set<Weight>(r1.begin(), r1.end()), std::set<Weight>(all.begin(), all.end())) << t;
    }
}

TEST(Roots, DefaultWords)
{
    auto letters = [](const std::string& t) { return CartanDatum::parse(t).default_reduced_word().letters; };
    EXPECT_EQ(letters("A2"), (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(letters("B2"), (std::vector<int>{0, 1, 0, 1}));
    EXPECT_EQ(letters("G2"), (std::vector<int>{0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(letters("A3").size(), 6u);
}

TEST(Rho, HalfSumOfPositiveRoots)
{
    for (const auto& t : kTypes) {
        CartanDatum d = CartanDatum::parse(t);
        Weight s = d.zero();
        for (const auto& b : d.positive_roots()) s += b;
        EXPECT_EQ(s, 2 * d.rho()) << t;
        for (int i = 0; i < d.rank(); ++i)
            EXPECT_EQ(d.inner(d.rho(), d.simple_root(i)) / d.d(i), Rational(1));
    }
    EXPECT_EQ(CartanDatum::parse("A1").rho(), Weight{1});
}

TEST(Orders, Dominance)
{
    CartanDatum a1 = CartanDatum::parse("A1"), a2 = CartanDatum::parse("A2");
    EXPECT_TRUE(a2.dominance_leq(Weight{1, 1}, Weight{1, 1}));
    EXPECT_TRUE(a1.dominance_leq(Weight{0}, Weight{2}));
    EXPECT_FALSE(a1.dominance_leq(Weight{1}, Weight{2}));
    EXPECT_FALSE(a2.dominance_leq(Weight{1, 0}, Weight{0, 1}));
    EXPECT_TRUE(a2.dominance_leq(Weight{0, 1}, Weight{2, 0}));
}

TEST(Orders, Lex)
{
    EXPECT_TRUE(lex_less(Weight{0, 1}, Weight{1, 0}));
    EXPECT_FALSE(lex_less(Weight{1, 0}, Weight{1, 0}));
    EXPECT_TRUE(lex_less(Weight{0, 5, 0}, Weight{1, 0, 0}));
}

TEST(RootCoords, RoundTrip)
{
    std::mt19937 rng(9);
    for (const auto& t : kTypes) {
        CartanDatum d = CartanDatum::parse(t);
        for (int k = 0; k < 20; ++k) {
            std::vector<int> c(static_cast<std::size_t>(d.rank()));
            for (auto& x : c) x = static_cast<int>(rng() % 7) - 3;
            auto back = d.root_coords(d.from_root_coords(c));
            ASSERT_TRUE(back);
            EXPECT_EQ(*back, c);
        }
    }
    EXPECT_FALSE(CartanDatum::parse("A2").root_coords(Weight{1, 0}));
}
