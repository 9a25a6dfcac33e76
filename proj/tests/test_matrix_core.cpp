#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <vector>

#include "pcm/comparison_matrix.hpp"
#include "test_support.hpp"

using namespace pcm;

namespace {

ComparisonMatrix power_counterexample_matrix() {
    const std::array<double, 3> upper{0.1, 0.15, 0.3};
    return ComparisonMatrix::from_upper_triangle(3, upper);
}

void expect_exactly_reciprocal(const ComparisonMatrix& m) {
    for (std::size_t i = 0; i < m.order(); ++i) {
        EXPECT_EQ(m(i, i), 1.0);
        for (std::size_t j = i + 1; j < m.order(); ++j) EXPECT_EQ(m(j, i), 1.0 / m(i, j));
    }
}

}  // namespace

TEST(FromUpperTriangle, OnesGiveAllOnesMatrix) {
    const std::array<double, 3> upper{1, 1, 1};
    EXPECT_EQ(ComparisonMatrix::from_upper_triangle(3, upper), ComparisonMatrix::ones(3));
}

TEST(FromUpperTriangle, CornerLayout) {
    const std::array<double, 3> upper{1, 2, 1};
    EXPECT_EQ(ComparisonMatrix::from_upper_triangle(3, upper), ComparisonMatrix::corner({3, 2.0}));
}

TEST(FromUpperTriangle, PowerCounterexampleMatrix) {
    const auto a = power_counterexample_matrix();
    EXPECT_DOUBLE_EQ(a(1, 0), 10.0);
    EXPECT_DOUBLE_EQ(a(1, 1), 1.0);
    EXPECT_DOUBLE_EQ(a(1, 2), 0.3);
    EXPECT_NEAR(a(2, 0), 6.6666, 1e-4);
    EXPECT_NEAR(a(2, 1), 3.3333, 1e-4);
    expect_exactly_reciprocal(a);
}

TEST(FromUpperTriangle, Errors) {
    const std::array<double, 3> bad{1, 0, 1};
    EXPECT_THROW(ComparisonMatrix::from_upper_triangle(3, bad), ValidationError);
    const std::array<double, 2> short_list{1, 2};
    EXPECT_THROW(ComparisonMatrix::from_upper_triangle(3, short_list), InvalidArgument);
    const std::array<double, 3> negative{1, -2, 1};
    EXPECT_THROW(ComparisonMatrix::from_upper_triangle(3, negative), ValidationError);
}

TEST(Validate, Cases) {
    const std::vector<double> ones(9, 1.0);
    EXPECT_TRUE(validate(3, ones).ok());

    const std::vector<double> exact{1, 2, 0.5, 1};
    EXPECT_TRUE(validate(2, exact).ok());

    const std::vector<double> off{1, 2, 0.4, 1};
    const auto r = validate(2, off);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].kind, ViolationKind::reciprocity);
    EXPECT_EQ(r.violations[0].row, 0u);
    EXPECT_EQ(r.violations[0].col, 1u);
    EXPECT_NEAR(r.violations[0].value, 0.8, 1e-15);   // 2 * 0.4
    EXPECT_NE(describe(r.violations[0]).find("(1,2)/(2,1)"), std::string::npos);
}

TEST(Validate, DiagonalAndSign) {
    const std::vector<double> m{2, 1, 1, -1};
    const auto r = validate(2, m);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].kind, ViolationKind::diagonal);
    EXPECT_EQ(r.violations[1].kind, ViolationKind::non_positive);
}

TEST(IsConsistent, Examples) {
    EXPECT_TRUE(is_consistent(ComparisonMatrix::corner({3, 1.0})));
    EXPECT_FALSE(is_consistent(ComparisonMatrix::corner({3, 2.0})));
    const std::array<double, 3> w{0.5, 0.3, 0.2};
    EXPECT_TRUE(is_consistent(ComparisonMatrix::from_weights(w)));
}

TEST(Corner, Layout) {
    EXPECT_EQ(ComparisonMatrix::corner({3, 1.0}), ComparisonMatrix::ones(3));
    const auto c = ComparisonMatrix::corner({3, 2.0});
    const std::vector<double> expected{1, 1, 2, 1, 1, 1, 0.5, 1, 1};
    EXPECT_EQ(test::dense(c), expected);

    const auto c5 = ComparisonMatrix::corner({5, 7.0});
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            const double want = (i == 0 && j == 4) ? 7.0 : (i == 4 && j == 0) ? 1.0 / 7.0 : 1.0;
            EXPECT_EQ(c5(i, j), want) << i << "," << j;
        }
    }
    EXPECT_THROW(ComparisonMatrix::corner({2, 2.0}), InvalidArgument);
    EXPECT_THROW(ComparisonMatrix::corner({3, 0.0}), InvalidArgument);
}

TEST(FromWeights, Examples) {
    const std::array<double, 3> ones{1, 1, 1};
    EXPECT_EQ(ComparisonMatrix::from_weights(ones), ComparisonMatrix::ones(3));
    const std::array<double, 2> w2{2, 1};
    EXPECT_EQ(test::dense(ComparisonMatrix::from_weights(w2)), (std::vector<double>{1, 2, 0.5, 1}));
    const std::array<double, 3> w3{6, 3, 1};
    const auto m = ComparisonMatrix::from_weights(w3);
    EXPECT_DOUBLE_EQ(m(0, 2), 6.0);
    EXPECT_DOUBLE_EQ(m(0, 1) * m(1, 2), 6.0);
    const std::array<double, 2> bad{1, 0};
    EXPECT_THROW(ComparisonMatrix::from_weights(bad), InvalidArgument);
}

TEST(Permute, Examples) {
    const auto c = ComparisonMatrix::corner({3, 2.0});
    const std::array<std::size_t, 3> id{0, 1, 2};
    EXPECT_EQ(permute(c, id), c);

    // sigma = (3,2,1): entry (3,1) of the result is a_13 = 2.
    const std::array<std::size_t, 3> rev{2, 1, 0};
    const auto p = permute(c, rev);
    EXPECT_EQ(p(2, 0), 2.0);
    EXPECT_EQ(p(0, 2), 0.5);
    expect_exactly_reciprocal(p);

    const std::array<std::size_t, 3> dup{0, 0, 1};
    EXPECT_THROW(permute(c, dup), InvalidArgument);
}

TEST(ElementwisePower, Examples) {
    const auto a = power_counterexample_matrix();
    EXPECT_EQ(elementwise_power(a, 1.0), a);
    const auto b = elementwise_power(a, 2.0);
    EXPECT_NEAR(b(1, 0), 100.0, 1e-12);
    EXPECT_NEAR(b(0, 2), 0.0225, 1e-15);
    EXPECT_NEAR(b(2, 0), 44.4444, 1e-4);
    expect_exactly_reciprocal(b);
    EXPECT_EQ(elementwise_power(ComparisonMatrix::corner({3, 3.0}), 2.0), ComparisonMatrix::corner({3, 9.0}));
    EXPECT_THROW(elementwise_power(a, 0.0), InvalidArgument);
}

TEST(PerturbEntry, Examples) {
    const std::array<double, 3> w{2, 1, 1};
    const auto m = ComparisonMatrix::from_weights(w);
    EXPECT_EQ(perturb_entry(m, 0, 1, 1.0), m);
    const auto sq = perturb_entry(m, 0, 1, 2.0);
    EXPECT_EQ(sq(0, 1), 4.0);
    EXPECT_EQ(sq(1, 0), 0.25);
    EXPECT_EQ(sq(0, 2), m(0, 2));
    EXPECT_DOUBLE_EQ(perturb_entry(m, 0, 1, 0.5)(0, 1), std::sqrt(2.0));

    EXPECT_THROW(perturb_entry(m, 1, 2, 2.0), InvalidArgument);   // a_23 == 1
    EXPECT_THROW(perturb_entry(ComparisonMatrix::corner({3, 2.0}), 0, 2, 2.0), InvalidArgument);
    EXPECT_THROW(perturb_entry(m, 0, 1, 0.0), InvalidArgument);
    EXPECT_THROW(perturb_entry(m, 0, 0, 2.0), InvalidArgument);
}

TEST(Triads, CountAndRatio) {
    EXPECT_EQ(triads(ComparisonMatrix::ones(3)).size(), 1u);
    EXPECT_EQ(triads(ComparisonMatrix::ones(5)).size(), 10u);
    const auto t = triads(ComparisonMatrix::corner({3, 2.0}));
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0].ratio, 2.0 / (1.0 * 1.0));
    EXPECT_THROW(triads(ComparisonMatrix::ones(2)), InvalidArgument);
}

// ---- properties -------------------------------------------------------------

TEST(MatrixProperties, ConstructorsAndTransformsStayExactlyReciprocal) {
    test::Gen g(7);
    for (int c = 0; c < 300; ++c) {
        const auto n = g.order(3, 8);
        const auto m = g.reciprocal(n);
        expect_exactly_reciprocal(m);
        expect_exactly_reciprocal(elementwise_power(m, g.uniform(0.1, 4.0)));
        expect_exactly_reciprocal(permute(m, g.permutation(n)));
        expect_exactly_reciprocal(ComparisonMatrix::from_weights(g.weights(n)));
    }
}

TEST(MatrixProperties, FromWeightsIsConsistentAndRankOne) {
    test::Gen g(11);
    for (int c = 0; c < 500; ++c) {
        const auto n = g.order(2, 9);
        const auto m = ComparisonMatrix::from_weights(g.weights(n));
        ASSERT_TRUE(is_consistent(m, 1e-12));
        // Every 2x2 minor of a rank-1 matrix vanishes.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = i + 1; k < n; ++k) {
                for (std::size_t j = 0; j < n; ++j) {
                    for (std::size_t l = j + 1; l < n; ++l) {
                        const double minor = m(i, j) * m(k, l) - m(i, l) * m(k, j);
                        const double scale = std::abs(m(i, j) * m(k, l)) + std::abs(m(i, l) * m(k, j));
                        ASSERT_LE(std::abs(minor), 1e-9 * std::max(1.0, scale));
                    }
                }
            }
        }
    }
}

TEST(MatrixProperties, PermutationPreservesTriadRatioMultiset) {
    test::Gen g(13);
    for (int c = 0; c < 200; ++c) {
        const auto n = g.order(3, 7);
        const auto m = g.reciprocal(n);
        const auto p = permute(m, g.permutation(n));
        // Ratios may invert when the triple's order flips; compare |log r|.
        auto logs = [](const ComparisonMatrix& x) {
            std::vector<double> v;
            for (const auto& t : triads(x)) v.push_back(std::abs(std::log(t.ratio)));
            std::sort(v.begin(), v.end());
            return v;
        };
        const auto a = logs(m);
        const auto b = logs(p);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t k = 0; k < a.size(); ++k) ASSERT_NEAR(a[k], b[k], 1e-12);
        ASSERT_EQ(is_consistent(m), is_consistent(p));
    }
}
