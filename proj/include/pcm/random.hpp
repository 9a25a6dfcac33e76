#pragma once

// Seeded generators for random reciprocal matrices, weights and permutations.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "pcm/comparison_matrix.hpp"

namespace pcm {

using Rng = std::mt19937_64;

/// Engine for trial `stream` of a run seeded with `seed`. Distinct streams are
/// independent, so trials can be replayed or run in any order.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

/// The 17 values {1/9, ..., 1/2, 1, 2, ..., 9}.
inline const std::array<double, 17>& saaty_scale() {
    static const std::array<double, 17> values = [] {
        std::array<double, 17> v{};
        for (int k = 9; k >= 2; --k) v[static_cast<std::size_t>(9 - k)] = 1.0 / k;
        v[8] = 1.0;
        for (int k = 2; k <= 9; ++k) v[static_cast<std::size_t>(7 + k)] = k;
        return v;
    }();
    return values;
}

struct SaatyDiscrete {};

/// Entries exp(U(log lo, log hi)).
struct LogUniform {
    double lo = 1.0 / 9.0;
    double hi = 9.0;
};

using EntryScale = std::variant<SaatyDiscrete, LogUniform>;

inline std::string to_string(const EntryScale& s) {
    if (std::holds_alternative<SaatyDiscrete>(s)) return "saaty17";
    const auto& lu = std::get<LogUniform>(s);
    return "loguniform:" + std::to_string(lu.lo) + ":" + std::to_string(lu.hi);
}

inline double draw_entry(const EntryScale& scale, Rng& rng) {
    if (std::holds_alternative<SaatyDiscrete>(scale)) {
        std::uniform_int_distribution<std::size_t> pick(0, saaty_scale().size() - 1);
        return saaty_scale()[pick(rng)];
    }
    const auto& lu = std::get<LogUniform>(scale);
    std::uniform_real_distribution<double> u(std::log(lu.lo), std::log(lu.hi));
    return std::exp(u(rng));
}

inline void check_scale(const EntryScale& scale) {
    if (const auto* lu = std::get_if<LogUniform>(&scale)) {
        if (!(lu->lo > 0.0) || !(lu->hi > lu->lo) || !std::isfinite(lu->hi)) {
            throw InvalidArgument("log-uniform range must satisfy 0 < lo < hi");
        }
    }
}

/// Upper triangle drawn i.i.d. from `scale`, lower triangle reciprocal.
inline ComparisonMatrix random_reciprocal(std::size_t n, const EntryScale& scale, Rng& rng) {
    if (n < 2) throw InvalidArgument("random_reciprocal: order must be at least 2");
    check_scale(scale);
    std::vector<double> upper(n * (n - 1) / 2);
    for (auto& a : upper) a = draw_entry(scale, rng);
    return ComparisonMatrix::from_upper_triangle(n, upper);
}

inline ComparisonMatrix random_reciprocal(std::size_t n, const EntryScale& scale, std::uint64_t seed) {
    auto rng = make_rng(seed);
    return random_reciprocal(n, scale, rng);
}

/// Positive weights with log-uniform spread over [lo, hi].
inline std::vector<double> random_weights(std::size_t n, Rng& rng, double lo = 1.0 / 9.0, double hi = 9.0) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    std::vector<double> w(n);
    for (auto& x : w) x = std::exp(u(rng));
    return w;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return sigma;
}

inline std::size_t random_order(std::size_t lo, std::size_t hi, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace pcm
