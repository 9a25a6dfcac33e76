#pragma once

// Empirical checks of the six inconsistency axioms for an arbitrary index.
//
//   A1  consistent  <=>  index == 0
//   A2  invariance under simultaneous row/column permutation
//   A3  a_ij -> a_ij^b, b > 1, does not decrease the index
//   A4  moving one entry of a consistent matrix away (a_ij^delta) is monotone in delta
//   A5  continuity in the entries
//   A6  bounded from above over all reciprocal matrices
//
// Every check is a pure function of the index and the options (seed included).
// A check either passes, fails with a counterexample that replay() re-verifies,
// or is inconclusive.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pcm/comparison_matrix.hpp"
#include "pcm/indices.hpp"
#include "pcm/matrix_io.hpp"
#include "pcm/priority.hpp"
#include "pcm/random.hpp"

namespace pcm {

enum class Axiom { a1 = 1, a2, a3, a4, a5, a6 };
inline constexpr std::array<Axiom, 6> kAllAxioms{Axiom::a1, Axiom::a2, Axiom::a3,
                                                 Axiom::a4, Axiom::a5, Axiom::a6};

inline std::string to_string(Axiom a) { return "A" + std::to_string(static_cast<int>(a)); }

enum class Outcome { pass, fail, inconclusive };

inline std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

inline char verdict_letter(Outcome o) {
    return o == Outcome::pass ? 'Y' : o == Outcome::fail ? 'N' : '?';
}

/// A named inconsistency index. `upper_bound` is the bound the A6 check tries
/// to confirm; indices without one can only be found unbounded or inconclusive.
struct IndexFunction {
    std::string name;
    std::function<double(const ComparisonMatrix&)> eval;
    std::optional<double> upper_bound;
};

struct Counterexample {
    std::vector<ComparisonMatrix> matrices;
    std::vector<double> observed;     // index value for each matrix
    std::vector<double> parameters;   // axiom-specific: b, delta pair, eps ladder, x ladder
    std::string description;
};

struct AxiomVerdict {
    std::string index_name;
    Axiom axiom = Axiom::a1;
    Outcome outcome = Outcome::inconclusive;
    std::size_t trials = 0;
    std::optional<Counterexample> counterexample;
    std::uint64_t seed = 0;
    std::string note;
};

struct HarnessOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::size_t min_order = 3;
    std::size_t max_order = 7;

    double zero_tolerance = 1e-9;     // A1
    double compare_slack = 1e-9;      // A2-A4, scaled by max(1, |value|)

    std::vector<double> power_grid{1.5, 2.0, 3.0, 5.0};
    std::vector<double> delta_grid{0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 1.1, 1.5, 2.0, 3.0, 5.0};
    double min_log_entry = 0.1;       // A1/A4 only perturb entries with |ln a_ij| >= this

    std::vector<double> eps_ladder{1e-2, 1e-4, 1e-6};
    double flat_threshold = 1e-12;

    std::vector<std::size_t> corner_orders{3, 4, 5, 6, 7};
    std::vector<double> corner_ladder{1e1, 1e2,  1e3,  1e4,  1e5,  1e6,
                                      1e7, 1e8, 1e9, 1e10, 1e11, 1e12};
    double divergence_threshold = 100.0;
    double divergence_growth = 0.01;

    /// Matrix/exponent pairs tried by the A3 check before the random trials.
    /// The default is the 3x3 matrix whose square has a smaller RIC.
    std::vector<std::pair<ComparisonMatrix, double>> power_probes = default_power_probes();

    static std::vector<std::pair<ComparisonMatrix, double>> default_power_probes() {
        const std::array<double, 3> upper{0.1, 0.15, 0.3};
        return {{ComparisonMatrix::from_upper_triangle(3, upper), 2.0}};
    }
};

namespace detail {

inline bool differs(double a, double b, double slack) {
    return std::abs(a - b) > slack * std::max(1.0, std::abs(a));
}

inline bool a1_violated(bool consistent, double value, double tol) {
    return consistent ? !(value <= tol) : !(value > tol);
}

inline bool a3_violated(double before, double after, double slack) {
    return after < before - slack * std::max(1.0, std::abs(before));
}

// delta_lo < delta_hi on the same side of 1.
inline bool a4_violated(double delta_hi, double f_lo, double f_hi, double slack) {
    const double s = slack * std::max(1.0, std::abs(f_lo));
    return delta_hi <= 1.0 ? f_hi > f_lo + s : f_hi < f_lo - s;
}

inline bool a5_violated(const std::vector<double>& d, double flat) {
    for (std::size_t k = 1; k < d.size(); ++k) {
        if (d[k] > flat && d[k] > 0.5 * d[k - 1]) return true;
    }
    return false;
}

inline bool a5_flat(const std::vector<double>& d, double flat) {
    return std::all_of(d.begin(), d.end(), [&](double x) { return x <= flat; });
}

// Evaluates f, mapping exceptions and non-finite results to +inf.
inline double eval_or_inf(const IndexFunction& f, const ComparisonMatrix& m) {
    try {
        const double v = f.eval(m);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
    }
}

inline bool a6_diverging(const std::vector<double>& v, const HarnessOptions& o) {
    if (v.empty()) return false;
    if (std::any_of(v.begin(), v.end(), [](double x) { return !std::isfinite(x); })) return true;
    const double top = *std::max_element(v.begin(), v.end());
    if (top <= o.divergence_threshold || v.size() < 2) return false;
    const double prev = v[v.size() - 2];
    const double last = v.back();
    return last - prev > o.divergence_growth * std::abs(prev);
}

// Bounded evidence: never above the declared bound, and the step-to-step
// increments over the upper half of the ladder shrink.
inline bool a6_bounded(const std::vector<double>& v, std::optional<double> bound) {
    if (!bound) return false;
    for (double x : v) {
        if (!std::isfinite(x) || x > *bound + 1e-12) return false;
    }
    std::vector<double> inc;
    for (std::size_t k = v.size() / 2; k + 1 < v.size(); ++k) inc.push_back(std::abs(v[k + 1] - v[k]));
    for (std::size_t k = 1; k < inc.size(); ++k) {
        if (inc[k] > inc[k - 1] + 1e-12) return false;
    }
    return true;
}

struct PerturbSetup {
    ComparisonMatrix base;
    std::size_t i;
    std::size_t j;
};

// Consistent matrix with a chosen off-diagonal entry far enough from 1.
inline PerturbSetup consistent_with_entry(Rng& rng, const HarnessOptions& o) {
    while (true) {
        const auto n = random_order(o.min_order, o.max_order, rng);
        auto m = ComparisonMatrix::from_weights(random_weights(n, rng));
        const auto i = random_order(0, n - 1, rng);
        auto j = random_order(0, n - 2, rng);
        if (j >= i) ++j;
        if (std::abs(std::log(m(i, j))) >= o.min_log_entry) return {std::move(m), i, j};
    }
}

inline std::string cell_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

inline AxiomVerdict make_verdict(const IndexFunction& f, Axiom a, const HarnessOptions& o) {
    AxiomVerdict v;
    v.index_name = f.name;
    v.axiom = a;
    v.seed = o.seed;
    return v;
}

inline std::uint64_t stream_id(Axiom a, std::size_t trial) {
    return (static_cast<std::uint64_t>(a) << 48) ^ static_cast<std::uint64_t>(trial);
}

}  // namespace detail

/// A1: zero on random consistent matrices, positive once one entry is
/// perturbed by delta in {2, 0.5}.
inline AxiomVerdict check_axiom1(const IndexFunction& f, const HarnessOptions& o = {}) {
    auto v = detail::make_verdict(f, Axiom::a1, o);
    for (std::size_t t = 0; t < o.trials; ++t) {
        auto rng = make_rng(o.seed, detail::stream_id(Axiom::a1, t));
        const auto setup = detail::consistent_with_entry(rng, o);
        v.trials = t + 1;

        const double at_consistent = f.eval(setup.base);
        if (detail::a1_violated(true, at_consistent, o.zero_tolerance)) {
            v.outcome = Outcome::fail;
            v.counterexample = Counterexample{{setup.base}, {at_consistent}, {},
                                              "consistent matrix with nonzero index"};
            return v;
        }
        for (double delta : {2.0, 0.5}) {
            auto p = perturb_entry(setup.base, setup.i, setup.j, delta);
            const double value = f.eval(p);
            if (detail::a1_violated(false, value, o.zero_tolerance)) {
                v.outcome = Outcome::fail;
                v.counterexample = Counterexample{
                    {std::move(p)}, {value}, {delta},
                    "inconsistent matrix (entry " + detail::cell_name(setup.i, setup.j) +
                        " raised to " + detail::format_number(delta) + ") with zero index"};
                return v;
            }
        }
    }
    v.outcome = Outcome::pass;
    return v;
}

/// A2: |f(P A P^T) - f(A)| <= slack * max(1, |f(A)|) for random A and P.
/// With `identity_only`, P is the identity (harness self-test).
inline AxiomVerdict check_axiom2(const IndexFunction& f, const HarnessOptions& o = {},
                                 bool identity_only = false) {
    auto v = detail::make_verdict(f, Axiom::a2, o);
    for (std::size_t t = 0; t < o.trials; ++t) {
        auto rng = make_rng(o.seed, detail::stream_id(Axiom::a2, t));
        const auto n = random_order(o.min_order, o.max_order, rng);
        auto m = random_reciprocal(n, SaatyDiscrete{}, rng);
        auto sigma = random_permutation(n, rng);
        if (identity_only) std::iota(sigma.begin(), sigma.end(), std::size_t{0});
        auto p = permute(m, sigma);
        v.trials = t + 1;
        const double before = f.eval(m);
        const double after = f.eval(p);
        if (detail::differs(before, after, o.compare_slack)) {
            std::string perm;
            for (auto s : sigma) perm += (perm.empty() ? "" : " ") + std::to_string(s + 1);
            v.outcome = Outcome::fail;
            v.counterexample = Counterexample{{std::move(m), std::move(p)}, {before, after}, {},
                                              "permutation (" + perm + ") changes the index"};
            return v;
        }
    }
    v.outcome = Outcome::pass;
    return v;
}

/// A3: f(A^b) >= f(A) - slack for the probes and random A, b in power_grid.
inline AxiomVerdict check_axiom3(const IndexFunction& f, const HarnessOptions& o = {}) {
    auto v = detail::make_verdict(f, Axiom::a3, o);
    auto test = [&](const ComparisonMatrix& m, double b) {
        const double before = f.eval(m);
        auto powered = elementwise_power(m, b);
        const double after = f.eval(powered);
        if (!detail::a3_violated(before, after, o.compare_slack)) return false;
        v.outcome = Outcome::fail;
        v.counterexample = Counterexample{{m, std::move(powered)}, {before, after}, {b},
                                          "raising entries to the power " + detail::format_number(b) +
                                              " decreases the index"};
        return true;
    };
    for (const auto& [m, b] : o.power_probes) {
        if (m.order() < o.min_order || m.order() > o.max_order) continue;
        ++v.trials;
        if (test(m, b)) return v;
    }
    for (std::size_t t = 0; t < o.trials; ++t) {
        auto rng = make_rng(o.seed, detail::stream_id(Axiom::a3, t));
        const auto n = random_order(o.min_order, o.max_order, rng);
        const auto m = random_reciprocal(n, SaatyDiscrete{}, rng);
        ++v.trials;
        for (double b : o.power_grid) {
            if (test(m, b)) return v;
        }
    }
    v.outcome = Outcome::pass;
    return v;
}

/// A4: along delta_grid (ascending), f is nonincreasing below 1 and nondecreasing above 1.
inline AxiomVerdict check_axiom4(const IndexFunction& f, const HarnessOptions& o = {}) {
    auto v = detail::make_verdict(f, Axiom::a4, o);
    auto grid = o.delta_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::remove(grid.begin(), grid.end(), 1.0), grid.end());
    if (grid.empty() || grid.front() >= 1.0 || grid.back() <= 1.0) {
        throw InvalidArgument("check_axiom4: delta grid must span both sides of 1");
    }
    for (std::size_t t = 0; t < o.trials; ++t) {
        auto rng = make_rng(o.seed, detail::stream_id(Axiom::a4, t));
        const auto setup = detail::consistent_with_entry(rng, o);
        v.trials = t + 1;
        std::vector<ComparisonMatrix> ms;
        std::vector<double> values;
        for (double d : grid) {
            ms.push_back(perturb_entry(setup.base, setup.i, setup.j, d));
            values.push_back(f.eval(ms.back()));
        }
        for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
            if ((grid[k] < 1.0) != (grid[k + 1] < 1.0)) continue;
            if (detail::a4_violated(grid[k + 1], values[k], values[k + 1], o.compare_slack)) {
                v.outcome = Outcome::fail;
                v.counterexample = Counterexample{
                    {ms[k], ms[k + 1]}, {values[k], values[k + 1]}, {grid[k], grid[k + 1]},
                    "entry " + detail::cell_name(setup.i, setup.j) + ": delta " +
                        detail::format_number(grid[k]) + " -> " + detail::format_number(grid[k + 1]) +
                        " breaks monotonicity"};
                return v;
            }
        }
    }
    v.outcome = Outcome::pass;
    return v;
}

/// A5: for a random cell, d(eps) = max over a_ij*(1+eps)^{+-1} of |f(A') - f(A)| must
/// at least halve at each step down eps_ladder (or already be below flat_threshold).
/// A pass only means no discontinuity was detected.
inline AxiomVerdict check_axiom5(const IndexFunction& f, const HarnessOptions& o = {}) {
    auto v = detail::make_verdict(f, Axiom::a5, o);
    bool decreasing = o.eps_ladder.size() >= 2 && o.eps_ladder.back() > 0.0;
    for (std::size_t k = 1; k < o.eps_ladder.size(); ++k) decreasing &= o.eps_ladder[k] < o.eps_ladder[k - 1];
    if (!decreasing) throw InvalidArgument("check_axiom5: eps ladder must be positive and strictly decreasing");
    bool any_movement = false;
    for (std::size_t t = 0; t < o.trials; ++t) {
        auto rng = make_rng(o.seed, detail::stream_id(Axiom::a5, t));
        const auto n = random_order(o.min_order, o.max_order, rng);
        const auto m = random_reciprocal(n, SaatyDiscrete{}, rng);
        const auto i = random_order(0, n - 1, rng);
        auto j = random_order(0, n - 2, rng);
        if (j >= i) ++j;
        v.trials = t + 1;

        const double base = f.eval(m);
        std::vector<ComparisonMatrix> ms{m};
        std::vector<double> values{base};
        std::vector<double> d;
        for (double eps : o.eps_ladder) {
            double worst = 0.0;
            for (double factor : {1.0 + eps, 1.0 / (1.0 + eps)}) {
                ms.push_back(scale_entry(m, i, j, factor));
                values.push_back(f.eval(ms.back()));
                worst = std::max(worst, std::abs(values.back() - base));
            }
            d.push_back(worst);
        }
        if (!detail::a5_flat(d, o.flat_threshold)) any_movement = true;
        if (detail::a5_violated(d, o.flat_threshold)) {
            std::ostringstream msg;
            msg << "entry " << detail::cell_name(i, j) << ": |delta f| does not vanish with eps (";
            for (std::size_t k = 0; k < d.size(); ++k) msg << (k ? ", " : "") << d[k];
            msg << ")";
            v.outcome = Outcome::fail;
            v.counterexample = Counterexample{std::move(ms), std::move(values), o.eps_ladder, msg.str()};
            return v;
        }
    }
    if (!any_movement) {
        v.outcome = Outcome::inconclusive;
        v.note = "index is flat at every sampled point";
        return v;
    }
    v.outcome = Outcome::pass;
    v.note = "no discontinuity detected";
    return v;
}

/// A6: sweeps corner(n, x) over corner_orders x corner_ladder. Fails (unbounded)
/// when some order exceeds divergence_threshold and still grows at the top of
/// the ladder; passes when every order stays under the declared bound with
/// shrinking increments; otherwise inconclusive.
inline AxiomVerdict check_axiom6(const IndexFunction& f, const HarnessOptions& o = {}) {
    auto v = detail::make_verdict(f, Axiom::a6, o);
    bool all_bounded = true;
    double observed_max = 0.0;
    for (auto n : o.corner_orders) {
        std::vector<ComparisonMatrix> ms;
        std::vector<double> values;
        for (double x : o.corner_ladder) {
            ms.push_back(ComparisonMatrix::corner({n, x}));
            values.push_back(detail::eval_or_inf(f, ms.back()));
        }
        ++v.trials;
        observed_max = std::max(observed_max, *std::max_element(values.begin(), values.end()));
        if (detail::a6_diverging(values, o)) {
            std::ostringstream msg;
            msg << "corner matrices of order " << n << " grow without bound: f = " << values.back()
                << " at x = " << o.corner_ladder.back();
            v.outcome = Outcome::fail;
            v.counterexample = Counterexample{std::move(ms), std::move(values), o.corner_ladder, msg.str()};
            return v;
        }
        if (!detail::a6_bounded(values, f.upper_bound)) all_bounded = false;
    }
    std::ostringstream note;
    note << "max observed " << observed_max;
    if (f.upper_bound) note << ", declared bound " << *f.upper_bound;
    v.note = note.str();
    v.outcome = all_bounded ? Outcome::pass : Outcome::inconclusive;
    return v;
}

inline AxiomVerdict check_axiom(const IndexFunction& f, Axiom a, const HarnessOptions& o = {}) {
    switch (a) {
    case Axiom::a1: return check_axiom1(f, o);
    case Axiom::a2: return check_axiom2(f, o);
    case Axiom::a3: return check_axiom3(f, o);
    case Axiom::a4: return check_axiom4(f, o);
    case Axiom::a5: return check_axiom5(f, o);
    case Axiom::a6: return check_axiom6(f, o);
    }
    throw InvalidArgument("unknown axiom");
}

/// Re-evaluates a fail verdict's counterexample from scratch. True when the
/// recorded matrices still violate the axiom.
inline bool replay(const IndexFunction& f, const AxiomVerdict& v, const HarnessOptions& o = {}) {
    if (v.outcome != Outcome::fail || !v.counterexample) return false;
    const auto& cx = *v.counterexample;
    std::vector<double> values;
    for (const auto& m : cx.matrices) {
        values.push_back(v.axiom == Axiom::a6 ? detail::eval_or_inf(f, m) : f.eval(m));
    }
    switch (v.axiom) {
    case Axiom::a1:
        return values.size() == 1 &&
               detail::a1_violated(is_consistent(cx.matrices[0]), values[0], o.zero_tolerance);
    case Axiom::a2:
        return values.size() == 2 && detail::differs(values[0], values[1], o.compare_slack);
    case Axiom::a3:
        return values.size() == 2 && cx.parameters.size() == 1 && cx.parameters[0] > 1.0 &&
               elementwise_power(cx.matrices[0], cx.parameters[0]) == cx.matrices[1] &&
               detail::a3_violated(values[0], values[1], o.compare_slack);
    case Axiom::a4:
        return values.size() == 2 && cx.parameters.size() == 2 &&
               detail::a4_violated(cx.parameters[1], values[0], values[1], o.compare_slack);
    case Axiom::a5: {
        const std::size_t steps = cx.parameters.size();
        if (values.size() != 1 + 2 * steps) return false;
        std::vector<double> d;
        for (std::size_t k = 0; k < steps; ++k) {
            d.push_back(std::max(std::abs(values[1 + 2 * k] - values[0]),
                                 std::abs(values[2 + 2 * k] - values[0])));
        }
        return detail::a5_violated(d, o.flat_threshold);
    }
    case Axiom::a6: return detail::a6_diverging(values, o);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Index catalog and the reference verdict table.

/// The six indices of the reference table, in its row order: CI, GWI, GCI,
/// PLI, RIC, KII. GWI and GCI use `method` for their weight vector.
///
/// Declared A6 bounds: RIC and KII are bounded by 1. GWI is bounded by 2
/// (columns of the normalized matrix and the weights each sum to 1); for
/// n >= 4 it does exceed 1 on corner matrices.
inline std::vector<IndexFunction> standard_indices(WeightMethod method = WeightMethod::geometric_mean) {
    auto weights = [method](const ComparisonMatrix& m) { return priority_vector(m, method); };
    return {
        {index_name::ci, [](const ComparisonMatrix& m) { return ci(m); }, std::nullopt},
        {index_name::gwi, [weights](const ComparisonMatrix& m) { return gwi(m, weights(m)); }, 2.0},
        {index_name::gci, [weights](const ComparisonMatrix& m) { return gci(m, weights(m)); }, std::nullopt},
        {index_name::pli, [](const ComparisonMatrix& m) { return pli(m); }, std::nullopt},
        {index_name::ric, [](const ComparisonMatrix& m) { return ric(m); }, 1.0},
        {index_name::kii, [](const ComparisonMatrix& m) { return kii(m); }, 1.0},
    };
}

/// Case-insensitive lookup in standard_indices(); "GW" is accepted for GWI.
inline std::optional<IndexFunction> find_index(std::string name,
                                               WeightMethod method = WeightMethod::geometric_mean) {
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (name == "GW") name = index_name::gwi;
    for (auto& f : standard_indices(method)) {
        if (f.name == name) return f;
    }
    return std::nullopt;
}

enum class Expected { yes, no, open };

/// Reference Y/N/? pattern per index; `open` cells are reported but not asserted.
inline std::optional<std::array<Expected, 6>> reference_verdicts(const std::string& name) {
    using E = Expected;
    if (name == index_name::ci) return std::array{E::yes, E::yes, E::yes, E::yes, E::yes, E::no};
    if (name == index_name::gwi) return std::array{E::yes, E::yes, E::no, E::open, E::yes, E::yes};
    if (name == index_name::gci) return std::array{E::yes, E::yes, E::yes, E::yes, E::yes, E::no};
    if (name == index_name::pli) return std::array{E::yes, E::yes, E::yes, E::yes, E::yes, E::no};
    if (name == index_name::ric) return std::array{E::yes, E::yes, E::no, E::yes, E::yes, E::yes};
    if (name == index_name::kii) return std::array{E::yes, E::yes, E::yes, E::yes, E::yes, E::yes};
    return std::nullopt;
}

struct VerdictRow {
    std::string index_name;
    std::array<AxiomVerdict, 6> verdicts;
};

struct VerdictTable {
    std::vector<VerdictRow> rows;
    std::uint64_t seed = 0;
};

inline VerdictTable verdict_table(const std::vector<IndexFunction>& indices, const HarnessOptions& o = {}) {
    VerdictTable table;
    table.seed = o.seed;
    for (const auto& f : indices) {
        VerdictRow row{f.name, {}};
        for (std::size_t k = 0; k < kAllAxioms.size(); ++k) row.verdicts[k] = check_axiom(f, kAllAxioms[k], o);
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Cell text: '?' for reference-open cells, otherwise Y/N/? from the outcome.
inline char table_cell(const VerdictRow& row, std::size_t k) {
    const auto ref = reference_verdicts(row.index_name);
    if (ref && (*ref)[k] == Expected::open) return '?';
    return verdict_letter(row.verdicts[k].outcome);
}

/// One line per (index, axiom) cell whose outcome contradicts the reference.
inline std::vector<std::string> reference_mismatches(const VerdictTable& table) {
    std::vector<std::string> out;
    for (const auto& row : table.rows) {
        const auto ref = reference_verdicts(row.index_name);
        if (!ref) continue;
        for (std::size_t k = 0; k < 6; ++k) {
            const Expected e = (*ref)[k];
            if (e == Expected::open) continue;
            const Outcome want = e == Expected::yes ? Outcome::pass : Outcome::fail;
            if (row.verdicts[k].outcome != want) {
                out.push_back(row.index_name + "/" + to_string(kAllAxioms[k]) + ": expected " +
                              (e == Expected::yes ? "Y" : "N") + ", observed " +
                              std::string(to_string(row.verdicts[k].outcome)));
            }
        }
    }
    return out;
}

inline std::string render_text(const VerdictTable& table) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "Index/Axiom";
    for (auto a : kAllAxioms) out << std::setw(4) << to_string(a);
    out << '\n';
    std::vector<std::string> notes;
    for (const auto& row : table.rows) {
        out << std::left << std::setw(12) << row.index_name;
        for (std::size_t k = 0; k < 6; ++k) out << std::setw(4) << table_cell(row, k);
        out << '\n';
        const auto ref = reference_verdicts(row.index_name);
        for (std::size_t k = 0; k < 6; ++k) {
            if (ref && (*ref)[k] == Expected::open) {
                notes.push_back(row.index_name + "/" + to_string(kAllAxioms[k]) + " is open; observed " +
                                std::string(to_string(row.verdicts[k].outcome)) + " (not asserted)");
            }
        }
    }
    for (const auto& n : notes) out << "note: " << n << '\n';
    return out.str();
}

inline std::string describe(const AxiomVerdict& v) {
    std::ostringstream out;
    out << v.index_name << ' ' << to_string(v.axiom) << ": " << to_string(v.outcome) << " after "
        << v.trials << " trial(s), seed " << v.seed;
    if (!v.note.empty()) out << " [" << v.note << "]";
    if (v.counterexample) {
        const auto& cx = *v.counterexample;
        out << "\n  counterexample: " << cx.description;
        out << std::setprecision(6);
        // Corner sweeps are most telling at the top of the ladder.
        const std::size_t shown = std::min<std::size_t>(cx.matrices.size(), 2);
        const std::size_t first = v.axiom == Axiom::a6 ? cx.matrices.size() - shown : 0;
        for (std::size_t k = first; k < first + shown; ++k) {
            const auto& m = cx.matrices[k];
            out << "\n  matrix " << k + 1 << " (index " << cx.observed[k] << "):";
            for (std::size_t i = 0; i < m.order(); ++i) {
                out << "\n    ";
                for (std::size_t j = 0; j < m.order(); ++j) out << (j ? ", " : "") << m(i, j);
            }
        }
        if (cx.matrices.size() > shown) {
            out << "\n  (" << cx.matrices.size() - shown << " of " << cx.matrices.size() << " matrices not shown)";
        }
    }
    return out.str();
}

inline nlohmann::json to_json(const AxiomVerdict& v) {
    nlohmann::json j{
        {"index", v.index_name},
        {"axiom", to_string(v.axiom)},
        {"outcome", std::string(to_string(v.outcome))},
        {"trials", v.trials},
        {"seed", v.seed},
    };
    if (!v.note.empty()) j["note"] = v.note;
    if (v.counterexample) {
        nlohmann::json ms = nlohmann::json::array();
        for (const auto& m : v.counterexample->matrices) ms.push_back(to_json(m));
        j["counterexample"] = {
            {"description", v.counterexample->description},
            {"matrices", std::move(ms)},
            {"observed", v.counterexample->observed},
            {"parameters", v.counterexample->parameters},
        };
    }
    return j;
}

inline nlohmann::json to_json(const VerdictTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json cells = nlohmann::json::object();
        nlohmann::json details = nlohmann::json::array();
        for (std::size_t k = 0; k < 6; ++k) {
            cells[to_string(kAllAxioms[k])] = std::string(1, table_cell(row, k));
            details.push_back(to_json(row.verdicts[k]));
        }
        rows.push_back({{"index", row.index_name}, {"cells", std::move(cells)}, {"verdicts", std::move(details)}});
    }
    return {{"seed", t.seed}, {"rows", std::move(rows)}};
}

}  // namespace pcm
