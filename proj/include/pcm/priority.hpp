#pragma once

// Priority vectors: principal eigenvector (power iteration) and row geometric means.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/comparison_matrix.hpp"

namespace pcm {

enum class WeightMethod { eigenvector, geometric_mean };

inline std::string_view to_string(WeightMethod m) {
    return m == WeightMethod::eigenvector ? "EM" : "GM";
}

/// Normalized positive weights (sum 1) and the method that produced them.
struct PriorityVector {
    std::vector<double> weights;
    WeightMethod method = WeightMethod::geometric_mean;

    std::size_t size() const noexcept { return weights.size(); }
    double operator[](std::size_t i) const noexcept { return weights[i]; }
};

struct EigenOptions {
    double tolerance = 1e-12;
    std::size_t max_iterations = 10'000;
};

struct EigenResult {
    double lambda_max = 0.0;
    PriorityVector vector;
    std::size_t iterations = 0;
    double residual = 0.0;   // max_i |(A w)_i - lambda w_i| / (lambda w_i)
};

/// Perron eigenpair by shifted power iteration.
///
/// Iterates v <- (A + s I) v / sum, where s = sum(A v) / sum(v) is the current
/// eigenvalue estimate. A + sI has the same Perron vector as A, and the shift
/// pulls the complex pair of near-equal modulus (which corner matrices with huge
/// entries develop) away from the dominant eigenvalue. Starts from the uniform
/// vector. Converged when successive iterates differ by at most `tolerance`
/// and the residual is at most `tolerance`, both measured relative to each
/// component. Tiny weights (corner matrices with huge x) would otherwise stop
/// early and, multiplied by x, spoil lambda.
inline EigenResult principal_eigen(const ComparisonMatrix& m, EigenOptions opts = {}) {
    if (!(opts.tolerance > 0.0)) throw InvalidArgument("principal_eigen: tolerance must be > 0");
    const std::size_t n = m.order();
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    std::vector<double> av(n);
    std::vector<double> next(n);

    auto multiply = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto r = m.row(i);
            y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
        }
    };
    auto relative_residual = [&](const std::vector<double>& x, double lambda) {
        multiply(x, av);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(av[i] - lambda * x[i]) / x[i]);
        return worst / lambda;
    };

    double residual = std::numeric_limits<double>::infinity();
    for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
        multiply(v, av);
        const double sum_av = std::accumulate(av.begin(), av.end(), 0.0);
        const double sum_v = std::accumulate(v.begin(), v.end(), 0.0);
        const double shift = sum_av / sum_v;
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = av[i] + shift * v[i];
            total += next[i];
        }
        double step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= total;
            step = std::max(step, std::abs(next[i] - v[i]) / next[i]);
        }
        v.swap(next);
        if (step > opts.tolerance) continue;

        multiply(v, av);
        const double lambda = std::accumulate(av.begin(), av.end(), 0.0) /
                              std::accumulate(v.begin(), v.end(), 0.0);
        residual = relative_residual(v, lambda);
        if (residual <= opts.tolerance) {
            return {lambda, {std::move(v), WeightMethod::eigenvector}, it, residual};
        }
    }
    multiply(v, av);
    residual = relative_residual(v, std::accumulate(av.begin(), av.end(), 0.0) /
                                        std::accumulate(v.begin(), v.end(), 0.0));
    throw ConvergenceError("power iteration did not converge after " +
                               std::to_string(opts.max_iterations) + " iterations (residual " +
                               std::to_string(residual) + ")",
                           residual, opts.max_iterations);
}

/// w_i proportional to the geometric mean of row i, computed as exp(mean log a_ij).
inline PriorityVector geometric_mean_weights(const ComparisonMatrix& m) {
    const std::size_t n = m.order();
    std::vector<double> logs(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (double a : m.row(i)) s += std::log(a);
        logs[i] = s / static_cast<double>(n);
    }
    // Subtracting the largest log keeps every exp() in (0, 1].
    const double top = *std::max_element(logs.begin(), logs.end());
    std::vector<double> w(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = std::exp(logs[i] - top);
        total += w[i];
    }
    for (auto& x : w) x /= total;
    return {std::move(w), WeightMethod::geometric_mean};
}

inline PriorityVector priority_vector(const ComparisonMatrix& m, WeightMethod method,
                                      EigenOptions opts = {}) {
    if (method == WeightMethod::eigenvector) return principal_eigen(m, opts).vector;
    return geometric_mean_weights(m);
}

}  // namespace pcm
