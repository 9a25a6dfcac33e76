#pragma once

// Reciprocal pairwise-comparison matrices: construction, validation and the
// structure-preserving transforms used by the axiom checks.
//
// Every ComparisonMatrix is exactly reciprocal: constructors take the upper
// triangle (or rebuild it from validated input) and compute a_ji = 1 / a_ij.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pcm/error.hpp"

namespace pcm {

inline constexpr double kReciprocityTolerance = 1e-6;
inline constexpr double kConsistencyTolerance = 1e-9;

/// Parameters of the corner matrix: all ones except a_1n = x and a_n1 = 1/x.
struct CornerSpec {
    std::size_t n = 3;
    double x = 1.0;
};

/// An index triple i < j < k together with a_ik / (a_ij * a_jk).
struct Triad {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    double ratio = 1.0;
};

struct ValidationReport {
    std::vector<CellViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks positivity, unit diagonal and |a_ij * a_ji - 1| <= tol on a raw
/// row-major n x n array. Reciprocity violations are reported once per pair,
/// at the upper cell.
inline ValidationReport validate(std::size_t n, std::span<const double> entries,
                                 double tol = kReciprocityTolerance) {
    ValidationReport report;
    if (entries.size() != n * n) {
        throw InvalidArgument("validate: expected " + std::to_string(n * n) + " entries, got " +
                              std::to_string(entries.size()));
    }
    auto at = [&](std::size_t i, std::size_t j) { return entries[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double a = at(i, j);
            if (!std::isfinite(a)) {
                report.violations.push_back({i, j, ViolationKind::non_finite, a});
            } else if (a <= 0.0) {
                report.violations.push_back({i, j, ViolationKind::non_positive, a});
            } else if (i == j && std::abs(a - 1.0) > tol) {
                report.violations.push_back({i, j, ViolationKind::diagonal, a});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = at(i, j);
            const double b = at(j, i);
            if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) continue;
            const double product = a * b;
            if (std::abs(product - 1.0) > tol) {
                report.violations.push_back({i, j, ViolationKind::reciprocity, product});
            }
        }
    }
    return report;
}

class ComparisonMatrix {
public:
    /// Fills the diagonal with 1 and the lower triangle with reciprocals.
    /// `upper` lists a_ij for i < j in row-major order: a_12, a_13, ..., a_(n-1)n.
    static ComparisonMatrix from_upper_triangle(std::size_t n, std::span<const double> upper) {
        if (n < 2) throw InvalidArgument("matrix order must be at least 2");
        const std::size_t expected = n * (n - 1) / 2;
        if (upper.size() != expected) {
            throw InvalidArgument("from_upper_triangle: expected " + std::to_string(expected) +
                                  " entries for n = " + std::to_string(n) + ", got " +
                                  std::to_string(upper.size()));
        }
        ComparisonMatrix m(n);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++idx) {
                const double a = upper[idx];
                if (!(a > 0.0) || !std::isfinite(a)) {
                    throw ValidationError("from_upper_triangle: entry must be positive and finite",
                                          {{i, j, a > 0.0 ? ViolationKind::non_finite
                                                          : ViolationKind::non_positive,
                                            a}});
                }
                m.set_pair(i, j, a);
            }
        }
        return m;
    }

    /// Validates a full row-major array and rebuilds the lower triangle from the
    /// upper one so the result is exactly reciprocal.
    static ComparisonMatrix from_entries(std::size_t n, std::span<const double> entries,
                                         double tol = kReciprocityTolerance) {
        if (n < 2) throw InvalidArgument("matrix order must be at least 2");
        auto report = validate(n, entries, tol);
        if (!report.ok()) {
            std::string msg = "invalid comparison matrix: " + describe(report.violations.front());
            if (report.violations.size() > 1) {
                msg += " (and " + std::to_string(report.violations.size() - 1) + " more)";
            }
            throw ValidationError(std::move(msg), std::move(report.violations));
        }
        ComparisonMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) m.set_pair(i, j, entries[i * n + j]);
        }
        return m;
    }

    /// a_ij = w_i / w_j. The result is consistent by construction.
    static ComparisonMatrix from_weights(std::span<const double> w) {
        if (w.size() < 2) throw InvalidArgument("from_weights: need at least 2 weights");
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!(w[i] > 0.0) || !std::isfinite(w[i])) {
                throw InvalidArgument("from_weights: weight " + std::to_string(i + 1) +
                                      " must be positive and finite");
            }
        }
        ComparisonMatrix m(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) m.set_pair(i, j, w[i] / w[j]);
        }
        return m;
    }

    static ComparisonMatrix corner(CornerSpec spec) {
        if (spec.n < 3) throw InvalidArgument("corner: order must be at least 3");
        if (!(spec.x > 0.0) || !std::isfinite(spec.x)) {
            throw InvalidArgument("corner: x must be positive and finite");
        }
        ComparisonMatrix m(spec.n);
        m.set_pair(0, spec.n - 1, spec.x);
        return m;
    }

    static ComparisonMatrix ones(std::size_t n) {
        if (n < 2) throw InvalidArgument("matrix order must be at least 2");
        return ComparisonMatrix(n);
    }

    std::size_t order() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const noexcept {
        return std::span<const double>(a_).subspan(i * n_, n_);
    }
    std::span<const double> entries() const noexcept { return a_; }

    /// Upper triangle in from_upper_triangle order.
    std::vector<double> upper_triangle() const {
        std::vector<double> out;
        out.reserve(n_ * (n_ - 1) / 2);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) out.push_back((*this)(i, j));
        }
        return out;
    }

    friend bool operator==(const ComparisonMatrix&, const ComparisonMatrix&) = default;

private:
    explicit ComparisonMatrix(std::size_t n) : n_(n), a_(n * n, 1.0) {}

    void set_pair(std::size_t i, std::size_t j, double value) {
        a_[i * n_ + j] = value;
        a_[j * n_ + i] = 1.0 / value;
    }

    friend ComparisonMatrix permute(const ComparisonMatrix&, std::span<const std::size_t>);
    friend ComparisonMatrix elementwise_power(const ComparisonMatrix&, double);
    friend ComparisonMatrix perturb_entry(const ComparisonMatrix&, std::size_t, std::size_t,
                                          double);
    friend ComparisonMatrix scale_entry(const ComparisonMatrix&, std::size_t, std::size_t, double);

    std::size_t n_;
    std::vector<double> a_;
};

inline ValidationReport validate(const ComparisonMatrix& m, double tol = kReciprocityTolerance) {
    return validate(m.order(), m.entries(), tol);
}

/// All i < j < k triads with ratio a_ik / (a_ij * a_jk).
inline std::vector<Triad> triads(const ComparisonMatrix& m) {
    const std::size_t n = m.order();
    if (n < 3) throw InvalidArgument("triads: order must be at least 3");
    std::vector<Triad> out;
    out.reserve(n * (n - 1) * (n - 2) / 6);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                out.push_back({i, j, k, m(i, k) / (m(i, j) * m(j, k))});
            }
        }
    }
    return out;
}

/// True iff every triad ratio is within tol of 1. Order-2 matrices are always consistent.
inline bool is_consistent(const ComparisonMatrix& m, double tol = kConsistencyTolerance) {
    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (std::abs(m(i, k) / (m(i, j) * m(j, k)) - 1.0) > tol) return false;
            }
        }
    }
    return true;
}

/// Result entry (i,j) is a_{sigma(i) sigma(j)}, i.e. P A P^T. sigma is zero-based.
inline ComparisonMatrix permute(const ComparisonMatrix& m, std::span<const std::size_t> sigma) {
    const std::size_t n = m.order();
    if (sigma.size() != n) throw InvalidArgument("permute: permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (auto s : sigma) {
        if (s >= n || seen[s]) throw InvalidArgument("permute: sigma is not a bijection");
        seen[s] = true;
    }
    ComparisonMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.a_[i * n + j] = m(sigma[i], sigma[j]);
    }
    return out;
}

/// a_ij -> a_ij^b. Reciprocity is kept exact by recomputing the lower triangle.
inline ComparisonMatrix elementwise_power(const ComparisonMatrix& m, double b) {
    if (!(b > 0.0) || !std::isfinite(b)) throw InvalidArgument("elementwise_power: b must be > 0");
    const std::size_t n = m.order();
    ComparisonMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) out.set_pair(i, j, std::pow(m(i, j), b));
    }
    return out;
}

/// Replaces a_ij by a_ij^delta (and a_ji by its reciprocal) in a consistent matrix.
inline ComparisonMatrix perturb_entry(const ComparisonMatrix& m, std::size_t i, std::size_t j,
                                      double delta) {
    const std::size_t n = m.order();
    if (i >= n || j >= n || i == j) throw InvalidArgument("perturb_entry: need i != j within order");
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw InvalidArgument("perturb_entry: delta must be > 0");
    }
    if (m(i, j) == 1.0) throw InvalidArgument("perturb_entry: a_ij must differ from 1");
    if (!is_consistent(m)) throw InvalidArgument("perturb_entry: matrix must be consistent");
    ComparisonMatrix out = m;
    out.set_pair(i, j, std::pow(m(i, j), delta));
    return out;
}

/// Multiplies a_ij by factor and sets a_ji to the reciprocal. Used for
/// continuity probes; no consistency precondition.
inline ComparisonMatrix scale_entry(const ComparisonMatrix& m, std::size_t i, std::size_t j,
                                    double factor) {
    const std::size_t n = m.order();
    if (i >= n || j >= n || i == j) throw InvalidArgument("scale_entry: need i != j within order");
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw InvalidArgument("scale_entry: factor must be > 0");
    }
    ComparisonMatrix out = m;
    out.set_pair(i, j, m(i, j) * factor);
    return out;
}

}  // namespace pcm
