#include <random>

#include <gtest/gtest.h>

#include "qcentre/pairing.hpp"

using namespace qcentre;

namespace {

QuantumGroup group(const std::string& t) { return QuantumGroup(CartanDatum::parse(t)); }

Word random_word_of_length(std::mt19937& rng, int rank, int len)
{
    std::uniform_int_distribution<int> idx(0, rank - 1);
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(static_cast<char>(idx(rng)));
    return w;
}

Weight random_weight(std::mt19937& rng, int rank)
{
    std::uniform_int_distribution<int> c(-3, 3);
    Weight w(rank);
    for (int i = 0; i < rank; ++i) w[i] = c(rng);
    return w;
}

AlgebraElement random_element(const QuantumGroup& qg, std::mt19937& rng)
{
    std::uniform_int_distribution<int> len(0, 2), coeff(-2, 2);
    AlgebraElement x;
    for (int t = 0; t < 2; ++t) {
        Monomial m{random_word_of_length(rng, qg.rank(), len(rng)), random_weight(rng, qg.rank()),
                   random_word_of_length(rng, qg.rank(), len(rng))};
        x += qg.multiply(qg.multiply(qg.F_word(m.f), qg.K(m.k)), qg.E_word(m.e)) * QScalar(coeff(rng));
    }
    return x;
}

} // namespace

TEST(RossoForm, DefiningValues)
{
    QuantumGroup qg = group("B2");
    RossoForm form(qg);
    const CartanDatum& d = qg.datum();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            QScalar expected = i == j ? (qg.q_i(i) - qg.q_i(i).inverse()).inverse() : QScalar();
            EXPECT_EQ(form(qg.F(i), qg.E(j)), expected);
        }
    const Weight l{1, -1}, m{2, 1};
    EXPECT_EQ(form(qg.K(l), qg.K(m)), QScalar::vpow(-d.inner_v(l, m)));
    EXPECT_TRUE(form(qg.K(l), qg.E(0)).is_zero());
    EXPECT_TRUE(form(qg.F(1), qg.K(m)).is_zero());
    EXPECT_THROW(form(qg.E(0), qg.E(0)), PreconditionError);
    EXPECT_THROW(form(qg.F(0), qg.F(0)), PreconditionError);
    EXPECT_THROW(RossoForm(qg, 2), PreconditionError);
}

TEST(RossoForm, SquareInRankOneFromCoproduct)
{
    // (F^2, E E) = (Delta(F^2), E (x) E).  Against E (x) E only the terms
    // F K_l (x) F K_m survive, each contributing (F, E)^2.
    QuantumGroup qg = group("A1");
    RossoForm form(qg);
    const QScalar fe = form(qg.F(0), qg.E(0));
    TensorElement d = qg.comultiply(qg.multiply(qg.F(0), qg.F(0)));
    QScalar oracle;
    for (const auto& [k, c] : d.terms())
        if (k.first.f.size() == 1 && k.second.f.size() == 1) oracle += c * fe * fe;
    const QScalar q = qg.q_i(0);
    EXPECT_EQ(form(qg.F_word(Word(2, 0)), qg.E_word(Word(2, 0))), oracle);
    EXPECT_EQ(oracle, (QScalar(1) + q * q) * fe * fe);
}

TEST(RossoForm, BothRecursionsAgree)
{
    for (const std::string t : {"A2", "B2", "G2"}) {
        QuantumGroup qg = group(t);
        RossoForm form(qg);
        std::mt19937 rng(83);
        for (int k = 0; k < 60; ++k) {
            const int len = 1 + k % 4;
            Word f = random_word_of_length(rng, qg.rank(), len);
            Word e = f;
            std::shuffle(e.begin(), e.end(), rng);
            EXPECT_EQ(form.words(f, e), form.words_by_left(f, e)) << t;
        }
    }
}

TEST(RossoForm, CoproductProperties)
{
    QuantumGroup qg = group("A2");
    RossoForm form(qg);
    std::mt19937 rng(89);
    for (int k = 0; k < 30; ++k) {
        Word f = random_word_of_length(rng, 2, 3);
        Word e1 = random_word_of_length(rng, 2, 1);
        Word e2 = f;
        std::shuffle(e2.begin(), e2.end(), rng);
        e2.pop_back();
        AlgebraElement x = qg.F_word(f);
        AlgebraElement y1 = qg.E_word(e1), y2 = qg.E_word(e2);
        // (x, y1 y2) = (Delta x, y2 (x) y1)
        QScalar lhs = form(x, qg.multiply(y1, y2));
        QScalar rhs;
        const TensorElement dx = qg.comultiply(x);
        for (const auto& [t, c] : dx.terms())
            rhs += c * form(AlgebraElement(t.first, QScalar(1)), y2) * form(AlgebraElement(t.second, QScalar(1)), y1);
        EXPECT_EQ(lhs, rhs);
        // (x1 x2, y) = (x1 (x) x2, Delta y)
        AlgebraElement x1 = qg.F_word(e1), x2 = qg.F_word(e2), y = qg.E_word(f);
        QScalar lhs2 = form(qg.multiply(x1, x2), y);
        QScalar rhs2;
        const TensorElement dy = qg.comultiply(y);
        for (const auto& [t, c] : dy.terms())
            rhs2 += c * form(x1, AlgebraElement(t.first, QScalar(1))) * form(x2, AlgebraElement(t.second, QScalar(1)));
        EXPECT_EQ(lhs2, rhs2);
    }
}

TEST(RossoForm, Homogeneity)
{
    QuantumGroup qg = group("A2");
    RossoForm form(qg);
    const CartanDatum& d = qg.datum();
    std::mt19937 rng(97);
    for (int k = 0; k < 30; ++k) {
        Word f = random_word_of_length(rng, 2, 1 + k % 3), e = f;
        std::shuffle(e.begin(), e.end(), rng);
        const Weight l = random_weight(rng, 2), h = random_weight(rng, 2);
        AlgebraElement x = qg.multiply(qg.F_word(f), qg.K(l));
        AlgebraElement y = qg.multiply(qg.E_word(e), qg.K(h));
        EXPECT_EQ(form(x, y), QScalar::vpow(-d.inner_v(l, h)) * form.words(f, e));
    }
}

TEST(GradedOrthogonality, Examples)
{
    QuantumGroup qg = group("A2");
    RossoForm form(qg);
    const CartanDatum& d = qg.datum();
    EXPECT_TRUE(form(qg.F(0), qg.E(1)).is_zero());
    EXPECT_TRUE(form(qg.multiply(qg.F(0), qg.F(1)), qg.E(0)).is_zero());
    EXPECT_THROW(graded_orthogonality_check(qg, d.simple_root(0), d.simple_root(0)), PreconditionError);
    EXPECT_THROW(words_of_content(d, -d.simple_root(0)), PreconditionError);
    std::vector<Weight> targets;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) targets.push_back(d.from_root_coords({a, b}));
    for (const auto& nu : targets)
        for (const auto& mu : targets)
            if (!(nu == mu)) EXPECT_TRUE(graded_orthogonality_check(qg, nu, mu));
}

TEST(Gram, Examples)
{
    QuantumGroup qg = group("A2");
    RootVectorTable tbl = root_vectors(qg);
    const CartanDatum& d = qg.datum();
    GramResult g1 = gram_rank(qg, d.simple_root(0), tbl);
    ASSERT_EQ(g1.partitions.size(), 1u);
    EXPECT_EQ(g1.gram[0][0], qg.inv_qdiff(0));
    EXPECT_EQ(g1.rank, 1);
    GramResult g0 = gram_rank(qg, d.zero(), tbl);
    EXPECT_EQ(g0.rank, 0);
    GramResult g2 = gram_rank(qg, d.simple_root(0) + d.simple_root(1), tbl);
    EXPECT_EQ(g2.partitions.size(), 2u);
    EXPECT_EQ(g2.rank, 2);
    EXPECT_FALSE(determinant(g2.gram).is_zero());
}

TEST(Gram, KostantPartitionCounts)
{
    CartanDatum a2 = CartanDatum::parse("A2"), b2 = CartanDatum::parse("B2");
    QuantumGroup qa(a2), qb(b2);
    RootVectorTable ta = root_vectors(qa), tb = root_vectors(qb);
    // A2: p(a alpha1 + b alpha2) = min(a, b) + 1
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            EXPECT_EQ(kostant_partitions(a2, ta, a2.from_root_coords({a, b})).size(), static_cast<std::size_t>(std::min(a, b) + 1));
    EXPECT_EQ(kostant_partitions(b2, tb, b2.from_root_coords({1, 2})).size(), 3u);
}

TEST(Gram, FullRankUpToHeight)
{
    auto check = [](const std::string& t, int height) {
        QuantumGroup qg = group(t);
        RootVectorTable tbl = root_vectors(qg);
        for (int a = 0; a <= height; ++a)
            for (int b = 0; a + b <= height; ++b) {
                if (a + b == 0) continue;
                GramResult g = gram_rank(qg, qg.datum().from_root_coords({a, b}), tbl);
                EXPECT_TRUE(g.full_rank()) << t << " " << a << "," << b;
            }
    };
    check("A2", 4);
    check("B2", 3);
}

TEST(BigForm, CartanAndGrading)
{
    QuantumGroup qg = group("A2");
    const CartanDatum& d = qg.datum();
    const Weight l{1, 0}, h{-1, 2};
    EXPECT_EQ(big_form(qg, qg.K(l), qg.K(h)), QScalar::vpow(-d.inner_v(l, h) / 2));
    EXPECT_TRUE(big_form(qg, qg.multiply(qg.F(0), qg.K(l)), qg.F(0)).is_zero());
    EXPECT_EQ(big_form(qg, qg.multiply(qg.F(0), qg.K(l)), qg.E(0)), big_form(qg, qg.F(0), qg.E(0)));
    EXPECT_FALSE(big_form(qg, qg.F(0), qg.E(0)).is_zero());
    EXPECT_TRUE(big_form(qg, qg.F(0), qg.F(0)).is_zero());
}

TEST(BigForm, AdInvarianceWithSignedPairing)
{
    for (const std::string t : {"A1", "A2"}) {
        QuantumGroup qg = group(t);
        std::mt19937 rng(101);
        for (int k = 0; k < 25; ++k) {
            AlgebraElement u = random_element(qg, rng), v = random_element(qg, rng);
            for (int i = 0; i < qg.rank(); ++i)
                for (const auto& x : {qg.E(i), qg.F(i)}) {
                    QScalar lhs = big_form(qg, qg.adjoint(x, u), v, -1);
                    QScalar rhs = big_form(qg, u, qg.adjoint(qg.antipode(x), v), -1);
                    ASSERT_EQ(lhs, rhs) << t;
                }
        }
    }
}

TEST(BigForm, UnsignedPairingIsNotAdInvariant)
{
    QuantumGroup qg = group("A1");
    AlgebraElement u = qg.F(0), v = qg.K(Weight{2});
    QScalar lhs = big_form(qg, qg.adjoint(qg.E(0), u), v);
    QScalar rhs = big_form(qg, u, qg.adjoint(qg.antipode(qg.E(0)), v));
    EXPECT_EQ(lhs, -rhs);
    EXPECT_FALSE(lhs.is_zero());
    EXPECT_EQ(big_form(qg, qg.adjoint(qg.E(0), u), v, -1), big_form(qg, u, qg.adjoint(qg.antipode(qg.E(0)), v), -1));
}

TEST(ZTrace, RankOneValues)
{
    QuantumGroup qg = group("A1");
    const CartanDatum& d = qg.datum();
    EXPECT_TRUE(verify_z_trace(qg, d.zero(), d.zero()));
    const QScalar q = qg.q_i(0);
    U0Element cand = z_trace_candidate(d, Weight{1});
    EXPECT_EQ(big_form(qg, qg.K(Weight{0}), cand.to_algebra(qg)), q + q.inverse());
    EXPECT_TRUE(verify_z_trace(qg, Weight{1}, Weight{0}));
    EXPECT_TRUE(verify_z_trace(qg, Weight{1}, Weight{2}));
}

TEST(ZTrace, SampledWeights)
{
    for (const std::string t : {"A2", "B2", "G2"}) {
        QuantumGroup qg = group(t);
        std::mt19937 rng(103);
        for (int i = 0; i < qg.rank(); ++i) {
            WeightModule v = simple_module(qg, qg.datum().fundamental(i));
            for (int s = 0; s < 10; ++s) EXPECT_TRUE(verify_z_trace(qg, v, random_weight(rng, qg.rank()))) << t;
        }
    }
}
