#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (wrong order, non-positive value, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// What went wrong with a single cell of a candidate matrix.
enum class ViolationKind { non_positive, diagonal, reciprocity, non_finite };

/// Cell-level diagnostic. Indices are zero-based; messages print them one-based.
struct CellViolation {
    std::size_t row = 0;
    std::size_t col = 0;
    ViolationKind kind = ViolationKind::non_positive;
    double value = 0.0;   // offending entry, or a_ij * a_ji for reciprocity
};

std::string describe(const CellViolation& v);

/// Raised when data cannot be turned into a valid comparison matrix.
class ValidationError : public Error {
public:
    ValidationError(std::string what, std::vector<CellViolation> cells)
        : Error(std::move(what)), cells_(std::move(cells)) {}

    const std::vector<CellViolation>& cells() const noexcept { return cells_; }

private:
    std::vector<CellViolation> cells_;
};

/// Malformed matrix text (bad number, ragged rows, non-square).
class ParseError : public Error {
public:
    ParseError(std::string what, std::size_t line) : Error(std::move(what)), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Power iteration ran out of iterations.
class ConvergenceError : public Error {
public:
    ConvergenceError(std::string what, double last_residual, std::size_t iterations)
        : Error(std::move(what)), last_residual_(last_residual), iterations_(iterations) {}

    double last_residual() const noexcept { return last_residual_; }
    std::size_t iterations() const noexcept { return iterations_; }

private:
    double last_residual_;
    std::size_t iterations_;
};

inline std::string describe(const CellViolation& v) {
    const auto cell = [](std::size_t r, std::size_t c) {
        return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
    };
    switch (v.kind) {
    case ViolationKind::non_positive:
        return "non-positive entry " + std::to_string(v.value) + " at " + cell(v.row, v.col);
    case ViolationKind::non_finite:
        return "non-finite entry at " + cell(v.row, v.col);
    case ViolationKind::diagonal:
        return "diagonal entry " + std::to_string(v.value) + " at " + cell(v.row, v.col) + " is not 1";
    case ViolationKind::reciprocity:
        return "reciprocity violated at " + cell(v.row, v.col) + "/" + cell(v.col, v.row) +
               ": product " + std::to_string(v.value) + " != 1";
    }
    return "unknown violation";
}

}  // namespace pcm
