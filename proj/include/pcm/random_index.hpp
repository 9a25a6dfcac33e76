#pragma once

// Monte Carlo estimation of the random index R.I.(n).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pcm/indices.hpp"
#include "pcm/random.hpp"

namespace pcm {

struct RiEstimate {
    std::size_t n = 0;
    double mean_ci = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;   // successful samples
    std::uint64_t skipped = 0;   // samples dropped for non-convergence
    std::uint64_t seed = 0;
};

/// Mean and standard error of CI over `samples` i.i.d. random reciprocal matrices.
/// Samples whose eigen solve fails are skipped; more than 0.1% skipped is an error.
inline RiEstimate estimate_ri(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                              const EntryScale& scale = SaatyDiscrete{}) {
    if (n < 2) throw InvalidArgument("estimate_ri: order must be at least 2");
    if (samples < 100) throw InvalidArgument("estimate_ri: need at least 100 samples");
    check_scale(scale);

    auto rng = make_rng(seed, n);
    // Welford running mean/variance.
    double mean = 0.0;
    double m2 = 0.0;
    std::uint64_t count = 0;
    std::uint64_t skipped = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto m = random_reciprocal(n, scale, rng);
        double value = 0.0;
        try {
            value = ci(m);
        } catch (const ConvergenceError&) {
            ++skipped;
            continue;
        }
        ++count;
        const double d = value - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (value - mean);
    }
    if (static_cast<double>(skipped) > 0.001 * static_cast<double>(samples)) {
        throw Error("estimate_ri: " + std::to_string(skipped) + " of " + std::to_string(samples) +
                    " samples failed to converge");
    }
    const double variance = count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
    return {n, mean, std::sqrt(variance / static_cast<double>(count)), count, skipped, seed};
}

/// R.I. for every order in [n_min, n_max]; each order uses its own stream of `seed`.
inline RiTable build_ri_table(std::size_t n_min, std::size_t n_max, std::uint64_t samples,
                              std::uint64_t seed, const EntryScale& scale = SaatyDiscrete{}) {
    if (n_min < 2 || n_max < n_min) throw InvalidArgument("build_ri_table: invalid order range");
    RiTable t;
    t.provenance = {"monte-carlo", to_string(scale), samples, seed};
    for (std::size_t n = n_min; n <= n_max; ++n) t.values[n] = estimate_ri(n, samples, seed, scale).mean_ci;
    return t;
}

}  // namespace pcm
