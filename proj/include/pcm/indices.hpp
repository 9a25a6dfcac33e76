#pragma once

// Inconsistency indices of reciprocal comparison matrices.
//
// Mean-based: CI, CR, GWI, PLI, GCI, RIC. Extreme-based: KII. The max-operator
// variants of PLI and GWI and the convex "compromise" blend live here as well.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "pcm/comparison_matrix.hpp"
#include "pcm/priority.hpp"

namespace pcm {

namespace index_name {
inline constexpr const char* ci = "CI";
inline constexpr const char* cr = "CR";
inline constexpr const char* gwi = "GWI";
inline constexpr const char* pli = "PLI";
inline constexpr const char* gci = "GCI";
inline constexpr const char* kii = "KII";
inline constexpr const char* ric = "RIC";
}  // namespace index_name

/// CI values this close to zero are reported as exactly zero.
inline constexpr double kCiZeroClamp = 1e-9;

/// Random index R.I.(n): mean CI of random reciprocal matrices of order n.
struct RiTable {
    struct Provenance {
        std::string source = "bundled";   // "bundled" or "monte-carlo"
        std::string scale = "saaty17";
        std::uint64_t samples = 0;
        std::uint64_t seed = 0;
    };

    std::map<std::size_t, double> values;
    Provenance provenance;

    std::optional<double> at(std::size_t n) const {
        const auto it = values.find(n);
        if (it == values.end()) return std::nullopt;
        return it->second;
    }
};

/// Frozen output of build_ri_table(3..15, 100000 samples, seed 42) over the
/// 17-value Saaty scale; BuildRiTable.BundledTableMatchesEstimator regenerates part of it.
inline const RiTable& bundled_ri_table() {
    static const RiTable table{
        {
            {3, 0.52650596173003328},
            {4, 0.8837439837682981},
            {5, 1.1075303413348312},
            {6, 1.2489145132785509},
            {7, 1.3408487468629906},
            {8, 1.4040647978225977},
            {9, 1.4486780288107863},
            {10, 1.4859670620641576},
            {11, 1.513694485739066},
            {12, 1.5364175213847187},
            {13, 1.5545286383681562},
            {14, 1.5708878911064279},
            {15, 1.5836297452113792},
        },
        {"bundled", "saaty17", 100'000, 42},
    };
    return table;
}

inline double ci_from_lambda(double lambda_max, std::size_t n) {
    const double value = (lambda_max - static_cast<double>(n)) / static_cast<double>(n - 1);
    return std::abs(value) < kCiZeroClamp ? 0.0 : value;
}

/// Saaty's consistency index (lambda_max - n) / (n - 1).
inline double ci(const ComparisonMatrix& m, EigenOptions opts = {}) {
    return ci_from_lambda(principal_eigen(m, opts).lambda_max, m.order());
}

/// Consistency ratio CI / R.I.(n).
inline double cr(const ComparisonMatrix& m, const RiTable& ri, EigenOptions opts = {}) {
    const auto r = ri.at(m.order());
    if (!r) throw InvalidArgument("cr: no R.I. entry for n = " + std::to_string(m.order()));
    if (!(*r > 0.0)) throw InvalidArgument("cr: R.I. entry for n = " + std::to_string(m.order()) + " is not positive");
    return ci(m, opts) / *r;
}

namespace detail {

inline void require_weights(const ComparisonMatrix& m, const PriorityVector& w, const char* who) {
    if (w.size() != m.order()) {
        throw InvalidArgument(std::string(who) + ": weight vector length does not match matrix order");
    }
}

inline void require_triads(const ComparisonMatrix& m, const char* who) {
    if (m.order() < 3) throw InvalidArgument(std::string(who) + ": order must be at least 3");
}

// Calls fn(i, j, |abar_ij - w_i|) for every cell of the column-normalized matrix.
template <typename Fn>
void for_each_gw_deviation(const ComparisonMatrix& m, const PriorityVector& w, Fn&& fn) {
    const std::size_t n = m.order();
    std::vector<double> col_sum(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) col_sum[j] += m(i, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) fn(i, j, std::abs(m(i, j) / col_sum[j] - w[i]));
    }
}

inline double triad_excess(double ratio) { return ratio + 1.0 / ratio - 2.0; }

}  // namespace detail

/// Golden-Wang index: (1/n) sum_ij |abar_ij - w_i|, abar = column-normalized A.
inline double gwi(const ComparisonMatrix& m, const PriorityVector& w) {
    detail::require_weights(m, w, "gwi");
    double total = 0.0;
    detail::for_each_gw_deviation(m, w, [&](std::size_t, std::size_t, double d) { total += d; });
    return total / static_cast<double>(m.order());
}

/// Max-operator GWI: max_ij |abar_ij - w_i|.
inline double gwi_max(const ComparisonMatrix& m, const PriorityVector& w) {
    detail::require_weights(m, w, "gwi_max");
    double worst = 0.0;
    detail::for_each_gw_deviation(m, w, [&](std::size_t, std::size_t, double d) { worst = std::max(worst, d); });
    return worst;
}

/// Pelaez-Lamata index: mean over triads of (r + 1/r - 2).
inline double pli(const ComparisonMatrix& m) {
    detail::require_triads(m, "pli");
    const auto ts = triads(m);
    double total = 0.0;
    for (const auto& t : ts) total += detail::triad_excess(t.ratio);
    return total / static_cast<double>(ts.size());
}

inline double pli_max(const ComparisonMatrix& m) {
    detail::require_triads(m, "pli_max");
    double worst = 0.0;
    for (const auto& t : triads(m)) worst = std::max(worst, detail::triad_excess(t.ratio));
    return worst;
}

/// Geometric consistency index: 2/((n-1)(n-2)) sum_{i<j} ln^2(a_ij w_j / w_i).
inline double gci(const ComparisonMatrix& m, const PriorityVector& w) {
    detail::require_triads(m, "gci");
    detail::require_weights(m, w, "gci");
    const std::size_t n = m.order();
    for (double x : w.weights) {
        if (!(x > 0.0)) throw InvalidArgument("gci: weights must be strictly positive");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double e = std::log(m(i, j)) + std::log(w[j]) - std::log(w[i]);
            total += e * e;
        }
    }
    return 2.0 * total / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

/// Koczkodaj's index: worst triad, each scored min(|1 - r|, |1 - 1/r|). In [0, 1).
inline double kii(const ComparisonMatrix& m) {
    detail::require_triads(m, "kii");
    double worst = 0.0;
    for (const auto& t : triads(m)) {
        worst = std::max(worst, std::min(std::abs(1.0 - t.ratio), std::abs(1.0 - 1.0 / t.ratio)));
    }
    return worst;
}

/// Row inconsistency index: 1 minus the mean cosine between pairs of row vectors.
inline double ric(const ComparisonMatrix& m) {
    const std::size_t n = m.order();
    // Unit rows; each row is scaled by its largest entry first so squares cannot overflow.
    std::vector<double> unit(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = m.row(i);
        const double top = *std::max_element(r.begin(), r.end());
        double norm2 = 0.0;
        for (double a : r) norm2 += (a / top) * (a / top);
        const double norm = std::sqrt(norm2);
        for (std::size_t j = 0; j < n; ++j) unit[i * n + j] = r[j] / top / norm;
    }
    double cos_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) dot += unit[i * n + k] * unit[j * n + k];
            cos_sum += std::min(dot, 1.0);
        }
    }
    return 1.0 - 2.0 * cos_sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

/// lambda * mean_value + (1 - lambda) * extreme_value.
inline double compromise(double mean_value, double extreme_value, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("compromise: lambda must lie in [0, 1]");
    return lambda * mean_value + (1.0 - lambda) * extreme_value;
}

/// All indices of one matrix plus how they were obtained.
struct IndexReport {
    std::size_t n = 0;
    std::map<std::string, double> values;
    double lambda_max = 0.0;
    WeightMethod weight_method = WeightMethod::geometric_mean;
    std::optional<double> ri_used;
    bool consistent = false;

    std::optional<double> get(const std::string& name) const {
        const auto it = values.find(name);
        if (it == values.end()) return std::nullopt;
        return it->second;
    }
};

/// Computes every index defined for the matrix order. Triad-based indices
/// (GWI, PLI, GCI, KII) need n >= 3; CR is omitted when the table has no
/// positive entry for n.
inline IndexReport report(const ComparisonMatrix& m, const RiTable& ri = bundled_ri_table(),
                          WeightMethod method = WeightMethod::geometric_mean, EigenOptions opts = {}) {
    IndexReport r;
    r.n = m.order();
    r.weight_method = method;
    r.consistent = is_consistent(m);

    const auto eig = principal_eigen(m, opts);
    r.lambda_max = eig.lambda_max;
    const double ci_value = ci_from_lambda(eig.lambda_max, r.n);
    r.values[index_name::ci] = ci_value;
    if (const auto ri_n = ri.at(r.n); ri_n && *ri_n > 0.0) {
        r.ri_used = *ri_n;
        r.values[index_name::cr] = ci_value / *ri_n;
    }
    r.values[index_name::ric] = ric(m);
    if (r.n >= 3) {
        const PriorityVector w =
            method == WeightMethod::eigenvector ? eig.vector : geometric_mean_weights(m);
        r.values[index_name::gwi] = gwi(m, w);
        r.values[index_name::pli] = pli(m);
        r.values[index_name::gci] = gci(m, w);
        r.values[index_name::kii] = kii(m);
    }
    return r;
}

inline nlohmann::json to_json(const IndexReport& r) {
    nlohmann::json j{
        {"n", r.n},
        {"lambda_max", r.lambda_max},
        {"weight_method", std::string(to_string(r.weight_method))},
        {"indices", r.values},
        {"consistent", r.consistent},
    };
    if (r.ri_used) j["ri_used"] = *r.ri_used;
    return j;
}

inline nlohmann::json to_json(const RiTable& t) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [n, v] : t.values) j[std::to_string(n)] = v;
    j["provenance"] = {
        {"source", t.provenance.source},
        {"scale", t.provenance.scale},
        {"samples", t.provenance.samples},
        {"seed", t.provenance.seed},
    };
    return j;
}

/// Reads the {"<n>": value, ..., "provenance": {...}} form written by to_json.
inline RiTable ri_table_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidArgument("R.I. table JSON must be an object");
    RiTable t;
    t.provenance = {"file", "", 0, 0};
    for (const auto& [key, value] : j.items()) {
        if (key == "provenance") {
            t.provenance.source = value.value("source", "file");
            t.provenance.scale = value.value("scale", "");
            t.provenance.samples = value.value("samples", std::uint64_t{0});
            t.provenance.seed = value.value("seed", std::uint64_t{0});
            continue;
        }
        std::size_t n = 0;
        try {
            std::size_t used = 0;
            n = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw InvalidArgument("R.I. table: key '" + key + "' is not a matrix order");
        }
        if (!value.is_number()) throw InvalidArgument("R.I. table: value for n = " + key + " is not a number");
        t.values[n] = value.get<double>();
    }
    return t;
}

}  // namespace pcm
