#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "pcm/priority.hpp"
#include "test_support.hpp"

using namespace pcm;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST(PrincipalEigen, ConsistentMatrixHasLambdaN) {
    for (std::size_t n : {2u, 3u, 5u, 9u}) {
        const auto r = principal_eigen(ComparisonMatrix::ones(n));
        EXPECT_NEAR(r.lambda_max, static_cast<double>(n), 1e-12);
        for (double w : r.vector.weights) EXPECT_NEAR(w, 1.0 / n, 1e-12);
    }
    const std::array<double, 3> w{0.5, 0.3, 0.2};
    const auto r = principal_eigen(ComparisonMatrix::from_weights(w));
    EXPECT_NEAR(r.lambda_max, 3.0, 1e-10);
    EXPECT_LT(max_abs_diff(r.vector.weights, {0.5, 0.3, 0.2}), 1e-10);
}

TEST(PrincipalEigen, CornerMatchesCharacteristicRoot) {
    const auto r = principal_eigen(ComparisonMatrix::corner({3, 2.0}));
    EXPECT_NEAR(r.lambda_max, test::corner_lambda_bisection(3, 2.0), 1e-10);
    EXPECT_NEAR(r.lambda_max, 3.0536, 1e-4);
    for (std::size_t n : {3u, 4u, 5u, 7u, 10u}) {
        for (double x : {1.5, 2.0, 9.0, 100.0, 1e4, 1e8, 1e12}) {
            const auto e = principal_eigen(ComparisonMatrix::corner({n, x}));
            const double want = test::corner_lambda_bisection(n, x);
            EXPECT_NEAR(e.lambda_max, want, 1e-9 * want) << "n=" << n << " x=" << x;
            EXPECT_LE(e.residual, 1e-12);
        }
    }
}

TEST(PrincipalEigen, ExtremeCornerConverges) {
    const auto e = principal_eigen(ComparisonMatrix::corner({3, 1e15}));
    EXPECT_LT(e.iterations, 10'000u);
    EXPECT_NEAR(e.lambda_max, test::corner_lambda_bisection(3, 1e15), 1e-9 * e.lambda_max);
}

TEST(PrincipalEigen, IterationCapRaises) {
    EigenOptions opts;
    opts.max_iterations = 1;
    try {
        (void)principal_eigen(ComparisonMatrix::corner({5, 1e6}), opts);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_EQ(e.iterations(), 1u);
        EXPECT_GT(e.last_residual(), 0.0);
    }
    opts.tolerance = 0.0;
    EXPECT_THROW(principal_eigen(ComparisonMatrix::ones(3), opts), InvalidArgument);
}

TEST(GeometricMean, Examples) {
    const auto w = geometric_mean_weights(ComparisonMatrix::ones(4));
    for (double v : w.weights) EXPECT_NEAR(v, 0.25, 1e-15);
    EXPECT_EQ(w.method, WeightMethod::geometric_mean);

    // Row products of corner(3,2) are 2, 1, 1/2.
    const auto c = geometric_mean_weights(ComparisonMatrix::corner({3, 2.0}));
    const double r0 = std::cbrt(2.0), r1 = 1.0, r2 = std::cbrt(0.5);
    const double s = r0 + r1 + r2;
    EXPECT_NEAR(c[0], r0 / s, 1e-14);
    EXPECT_NEAR(c[1], r1 / s, 1e-14);
    EXPECT_NEAR(c[2], r2 / s, 1e-14);
    EXPECT_NEAR(c[0], 0.4126, 1e-4);
    EXPECT_NEAR(c[2], 0.2599, 1e-4);
}

TEST(GeometricMean, HugeEntriesStayFinite) {
    const auto w = geometric_mean_weights(ComparisonMatrix::corner({3, 1e300}));
    EXPECT_NEAR(std::accumulate(w.weights.begin(), w.weights.end(), 0.0), 1.0, 1e-12);
    for (double v : w.weights) EXPECT_TRUE(std::isfinite(v) && v >= 0.0);
}

TEST(PriorityVector, Dispatch) {
    const auto m = ComparisonMatrix::corner({3, 4.0});
    EXPECT_EQ(priority_vector(m, WeightMethod::eigenvector).method, WeightMethod::eigenvector);
    EXPECT_EQ(priority_vector(m, WeightMethod::geometric_mean).method, WeightMethod::geometric_mean);
    EXPECT_EQ(to_string(WeightMethod::eigenvector), "EM");
    EXPECT_EQ(to_string(WeightMethod::geometric_mean), "GM");
}

// ---- properties -------------------------------------------------------------

TEST(PriorityProperties, WeightsArePositiveAndNormalized) {
    test::Gen g(21);
    for (int c = 0; c < 1000; ++c) {
        const auto m = g.reciprocal(g.order(2, 10));
        for (auto method : {WeightMethod::eigenvector, WeightMethod::geometric_mean}) {
            const auto w = priority_vector(m, method);
            double s = 0.0;
            for (double v : w.weights) {
                ASSERT_GT(v, 0.0);
                s += v;
            }
            ASSERT_NEAR(s, 1.0, 1e-12);
        }
    }
}

TEST(PriorityProperties, EmAndGmAgreeOnConsistentMatrices) {
    test::Gen g(22);
    for (int c = 0; c < 1000; ++c) {
        const auto n = g.order(2, 10);
        const auto w = g.weights(n);
        const auto m = ComparisonMatrix::from_weights(w);
        const auto em = priority_vector(m, WeightMethod::eigenvector);
        const auto gm = priority_vector(m, WeightMethod::geometric_mean);
        ASSERT_LT(max_abs_diff(em.weights, gm.weights), 1e-8);
        const double s = std::accumulate(w.begin(), w.end(), 0.0);
        std::vector<double> wn(w);
        for (auto& v : wn) v /= s;
        ASSERT_LT(max_abs_diff(gm.weights, wn), 1e-12);
    }
}

TEST(PriorityProperties, LambdaAtLeastNAndInsideCollatzWielandtBounds) {
    test::Gen g(23);
    for (int c = 0; c < 1000; ++c) {
        const auto n = g.order(2, 10);
        const auto m = g.reciprocal(n);
        const auto e = principal_eigen(m);
        ASSERT_GE(e.lambda_max, static_cast<double>(n) - 1e-9);
        ASSERT_LE(e.residual, 1e-12);
        // Row sums bracket the Perron root.
        double lo = 1e300, hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += m(i, j);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        ASSERT_GE(e.lambda_max, lo * (1 - 1e-12));
        ASSERT_LE(e.lambda_max, hi * (1 + 1e-12));
        // Recompute A w / w directly.
        for (std::size_t i = 0; i < n; ++i) {
            double aw = 0.0;
            for (std::size_t j = 0; j < n; ++j) aw += m(i, j) * e.vector[j];
            ASSERT_NEAR(aw / e.vector[i], e.lambda_max, 1e-9 * e.lambda_max);
        }
    }
}

TEST(PriorityProperties, PermutationEquivariance) {
    test::Gen g(24);
    for (int c = 0; c < 500; ++c) {
        const auto n = g.order(3, 8);
        const auto m = g.reciprocal(n);
        const auto sigma = g.permutation(n);
        const auto p = permute(m, sigma);
        for (auto method : {WeightMethod::eigenvector, WeightMethod::geometric_mean}) {
            const auto w = priority_vector(m, method);
            const auto wp = priority_vector(p, method);
            for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(wp[i], w[sigma[i]], 1e-10);
        }
        ASSERT_NEAR(principal_eigen(p).lambda_max, principal_eigen(m).lambda_max, 1e-9);
    }
}
