#pragma once

#include <stdexcept>
#include <string>

namespace twistknot {

// Exact division was requested but the divisor does not divide the dividend.
// Every use site divides by a factor whose divisibility is a theorem, so this
// always signals an implementation bug, never a data-dependent condition.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Negative matrix power requested for a matrix whose determinant is not 1.
struct NotUnimodular : std::invalid_argument {
    explicit NotUnimodular(const std::string& what) : std::invalid_argument(what) {}
};

// The requested twist-knot parameters describe the unknot.
struct Unknot : std::invalid_argument {
    explicit Unknot(const std::string& what) : std::invalid_argument(what) {}
};

// Operation requires a hyperbolic knot (every twist knot except the trefoil).
struct NotHyperbolic : std::invalid_argument {
    explicit NotHyperbolic(const std::string& what) : std::invalid_argument(what) {}
};

// A closed-form evaluator was called at a point that does not satisfy the
// defining polynomial of the representation curve.
struct OffCurve : std::invalid_argument {
    explicit OffCurve(const std::string& what) : std::invalid_argument(what) {}
};

// Eigenvalues too close to each other for formulas with (xi+ - xi-) poles.
struct DegenerateEigenvalues : std::runtime_error {
    explicit DegenerateEigenvalues(const std::string& what) : std::runtime_error(what) {}
};

struct RootFindingDiverged : std::runtime_error {
    explicit RootFindingDiverged(const std::string& what) : std::runtime_error(what) {}
};

// A matrix expected to fix the parabolic fixed point (vanishing upper-left
// entry) failed to do so at the supplied parameter.
struct NotParabolic : std::invalid_argument {
    explicit NotParabolic(const std::string& what) : std::invalid_argument(what) {}
};

// A computed document does not match its bundled reference transcription.
struct GoldenMismatch : std::runtime_error {
    explicit GoldenMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientData : std::invalid_argument {
    explicit InsufficientData(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace twistknot
