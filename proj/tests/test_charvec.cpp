#include <gtest/gtest.h>

#include <chernum/charvec.hpp>

#include "oracles.hpp"

using namespace chernum;

namespace {

Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

ChernVector cv(int n, std::initializer_list<std::pair<Partition, Rational>> terms) {
    ChernVector v(n);
    for (const auto& [p, c] : terms) v.add(p, c);
    return v;
}

}  // namespace

TEST(ChernMonomial, UnitVectors) {
    const auto v = chern_monomial(Partition{2, 1, 1});
    EXPECT_EQ(v.degree(), 4);
    const auto dense = v.dense();
    ASSERT_EQ(dense.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(dense[i], i == 3 ? 1 : 0);
    EXPECT_EQ(chern_monomial(Partition{4}).dense()[0], 1);
    try {
        (void)chern_monomial(Partition{});
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "no degree-0 Chern number");
    }
}

TEST(Pontryagin, PrintedFormulaInstances) {
    EXPECT_EQ(pontryagin_class(1, 2).component(2), cv(2, {{Partition{1, 1}, 1}, {Partition{2}, -2}}));
    EXPECT_EQ(pontryagin_class(2, 4).component(4),
              cv(4, {{Partition{2, 2}, 1}, {Partition{3, 1}, -2}, {Partition{4}, 2}}));
    EXPECT_EQ(pontryagin_class(3, 6).component(6),
              cv(6, {{Partition{3, 3}, 1}, {Partition{4, 2}, -2}, {Partition{5, 1}, 2}, {Partition{6}, -2}}));
    try {
        (void)pontryagin_class(3, 4);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "Pontryagin class exceeds truncation degree");
    }
}

TEST(Pontryagin, ClassIsHomogeneous) {
    for (int i = 1; i <= 5; ++i) {
        const auto p = pontryagin_class(i, 2 * i);
        for (const auto& [part, c] : p.terms()) EXPECT_EQ(part.weight(), 2 * i);
    }
}

TEST(Pontryagin, MonomialVectors) {
    EXPECT_EQ(pontryagin_monomial_vector(Partition{1}, 2), cv(2, {{Partition{1, 1}, 1}, {Partition{2}, -2}}));
    EXPECT_EQ(pontryagin_monomial_vector(Partition{1, 1}, 4),
              cv(4, {{Partition{1, 1, 1, 1}, 1}, {Partition{2, 1, 1}, -4}, {Partition{2, 2}, 4}}));
    EXPECT_EQ(pontryagin_monomial_vector(Partition{2}, 4),
              cv(4, {{Partition{2, 2}, 1}, {Partition{3, 1}, -2}, {Partition{4}, 2}}));
    EXPECT_THROW(pontryagin_monomial_vector(Partition{2}, 6), std::invalid_argument);
}

TEST(GradedChernPoly, TruncatesAboveTopDegree) {
    const auto p = pontryagin_class(1, 3);
    const auto square = p * p;
    for (const auto& [part, c] : square.terms()) EXPECT_LE(part.weight(), 3);
    EXPECT_TRUE(square.component(4).is_zero());
}

TEST(Euler, TopChernMonomial) {
    EXPECT_EQ(euler_vector(2), cv(2, {{Partition{2}, 1}}));
    EXPECT_EQ(euler_vector(4), cv(4, {{Partition{4}, 1}}));
    EXPECT_EQ(euler_vector(7), cv(7, {{Partition{7}, 1}}));
}

TEST(HirzebruchTodd, DimensionTwoComponents) {
    const auto t = tp_vectors(2);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0], cv(2, {{Partition{1, 1}, q(1, 12)}, {Partition{2}, q(1, 12)}}));
    EXPECT_EQ(t[1], cv(2, {{Partition{1, 1}, q(1, 6)}, {Partition{2}, q(-5, 6)}}));
    EXPECT_EQ(t[2], t[0]);
}

TEST(HirzebruchTodd, DimensionOneComponents) {
    const auto t = tp_vectors(1);
    EXPECT_EQ(t[0], cv(1, {{Partition{1}, q(1, 2)}}));
    EXPECT_EQ(t[1], cv(1, {{Partition{1}, q(-1, 2)}}));
}

TEST(HirzebruchTodd, NoComponentsBeyondDegree) {
    for (int n = 1; n <= 8; ++n) {
        const auto term = chi_y_sequence_term(n);
        for (const auto& [p, c] : term.terms()) EXPECT_LE(c.degree(), n);
    }
}

TEST(Genera, ToddVectors) {
    EXPECT_EQ(todd_vector(1), cv(1, {{Partition{1}, q(1, 2)}}));
    EXPECT_EQ(todd_vector(2), cv(2, {{Partition{1, 1}, q(1, 12)}, {Partition{2}, q(1, 12)}}));
    EXPECT_EQ(todd_vector(3), cv(3, {{Partition{2, 1}, q(1, 24)}}));
    // Classical Todd_4 = (-c4 + c3c1 + 3c2^2 + 4c2c1^2 - c1^4)/720.
    EXPECT_EQ(todd_vector(4), cv(4, {{Partition{4}, q(-1, 720)},
                                     {Partition{3, 1}, q(1, 720)},
                                     {Partition{2, 2}, q(3, 720)},
                                     {Partition{2, 1, 1}, q(4, 720)},
                                     {Partition{1, 1, 1, 1}, q(-1, 720)}}));
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(todd_vector(n), tp_vectors(n)[0]);
}

TEST(Genera, LVectors) {
    EXPECT_EQ(l_genus_vector(1), pontryagin_monomial_vector(Partition{1}, 2).scaled(q(1, 3)));
    const auto l2 = pontryagin_monomial_vector(Partition{2}, 4).scaled(7) - pontryagin_monomial_vector(Partition{1, 1}, 4);
    EXPECT_EQ(l_genus_vector(2), l2.scaled(q(1, 45)));
    // L_3 = (62 p3 - 13 p2 p1 + 2 p1^3)/945.
    const auto l3 = pontryagin_monomial_vector(Partition{3}, 6).scaled(62) -
                    pontryagin_monomial_vector(Partition{2, 1}, 6).scaled(13) +
                    pontryagin_monomial_vector(Partition{1, 1, 1}, 6).scaled(2);
    EXPECT_EQ(l_genus_vector(3), l3.scaled(q(1, 945)));
}

TEST(Identities, SymmetryEulerAndSignature) {
    for (int n = 1; n <= 12; ++n) {
        const auto t = tp_vectors(n);
        const Rational sign = n % 2 == 0 ? 1 : -1;
        ChernVector alternating(n), total(n);
        for (int p = 0; p <= n; ++p) {
            EXPECT_EQ(t[static_cast<std::size_t>(p)], t[static_cast<std::size_t>(n - p)].scaled(sign)) << n << " " << p;
            alternating += t[static_cast<std::size_t>(p)].scaled(p % 2 == 0 ? 1 : -1);
            total += t[static_cast<std::size_t>(p)];
        }
        EXPECT_EQ(alternating, euler_vector(n));
        if (n % 2 == 0) EXPECT_EQ(total, l_genus_vector(n / 2));
        else EXPECT_TRUE(total.is_zero());
    }
}

TEST(Identities, SpecializedRoutesAgree) {
    for (int n = 1; n <= 9; ++n) {
        const auto t = tp_vectors(n);
        for (const auto& y0 : {q(0), q(1), q(-1), q(2), q(-1, 3)}) {
            ChernVector via_components(n);
            Rational power = 1;
            for (const auto& v : t) {
                via_components += v.scaled(power);
                power *= y0;
            }
            EXPECT_EQ(via_components, chi_y_vector(n, y0)) << "n = " << n << ", y = " << y0;
        }
    }
}

TEST(Subspaces, Dimensions) {
    EXPECT_EQ(subspace_EP(1).dim(), 2u);
    EXPECT_EQ(subspace_EP(2).dim(), 3u);
    EXPECT_EQ(subspace_EP(3).dim(), 4u);
    EXPECT_EQ(subspace_HT(2).dim(), 2u);
    EXPECT_EQ(subspace_HT(4).dim(), 3u);
    EXPECT_EQ(subspace_HT(6).dim(), 4u);
    EXPECT_EQ(subspace_CHI(2).dim(), 2u);
    EXPECT_EQ(subspace_CHI(5).dim(), 3u);
    EXPECT_EQ(subspace_CHI(8).dim(), 5u);
    EXPECT_EQ(subspace_C(6).dim(), 11u);
    EXPECT_TRUE(subspace_equal(subspace_EP(1), subspace_C(2)));
    EXPECT_TRUE(subspace_equal(subspace_HT(2), subspace_C(2)));
}

TEST(Subspaces, FirstChernTimesCodimensionOne) {
    EXPECT_TRUE(contains(subspace_CHI(2), chern_monomial(Partition{1, 1})));
    for (int n = 3; n <= 10; ++n) EXPECT_TRUE(contains(subspace_CHI(n), chern_monomial(Partition{n - 1, 1}))) << n;
    // c1^n is not a chi_p combination once n >= 3.
    for (int n = 3; n <= 8; ++n)
        EXPECT_FALSE(contains(subspace_CHI(n), chern_monomial(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))));
}

TEST(ChernVector, SparseInvariantsAndPrinting) {
    ChernVector v(3);
    v.add(Partition{2, 1}, 1);
    v.add(Partition{2, 1}, -1);
    EXPECT_TRUE(v.is_zero());
    EXPECT_THROW(v.add(Partition{2}, 1), std::invalid_argument);
    EXPECT_EQ(to_string(l_genus_vector(1)), "-2/3*c2 + 1/3*c1^2");
    EXPECT_EQ(to_string(pontryagin_monomial_vector(Partition{1}, 2)), "-2*c2 + c1^2");
    EXPECT_EQ(to_string(euler_vector(3).scaled(-1)), "-c3");
    EXPECT_EQ(to_string(ChernVector(2)), "0");
}
