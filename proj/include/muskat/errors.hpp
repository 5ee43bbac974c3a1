#pragma once

#include <stdexcept>
#include <string>

namespace muskat {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridMismatch : Error {
    using Error::Error;
};

// A multiplier undefined at xi = 0 was applied to a field with nonzero mean.
struct SingularZeroMode : Error {
    using Error::Error;
};

struct NegativeTime : Error {
    using Error::Error;
};

struct BlockOutOfRange : Error {
    using Error::Error;
};

// Time (or depth) sample sequence unusable for a path norm.
struct DegeneratePath : Error {
    using Error::Error;
};

// 1 + |D|H dipped below the hard guard; the flattening is too distorted
// for the rational coefficient forms.
struct DenominatorTooSmall : Error {
    using Error::Error;
};

// An interface exceeded the smallness threshold a solver needs.
struct SmallnessViolated : Error {
    SmallnessViolated(const std::string& what, double measured, double threshold)
        : Error(what), measured(measured), threshold(threshold) {}
    double measured;
    double threshold;
};

struct NoConvergence : Error {
    NoConvergence(const std::string& what, int iterations, double residual)
        : Error(what), iterations(iterations), residual(residual) {}
    int iterations;
    double residual;
};

// The two algebraically equivalent forms of the interface velocity disagreed.
struct FormMismatch : Error {
    using Error::Error;
};

// Finite-difference system lost positivity.
struct NotSpd : Error {
    using Error::Error;
};

// A power-law fit came back with r^2 below the requested floor.
struct PoorFit : Error {
    PoorFit(const std::string& what, double r2) : Error(what), r2(r2) {}
    double r2;
};

// Initial data too large for the global iteration.
struct DataTooLarge : Error {
    DataTooLarge(const std::string& what, double measured, double threshold)
        : Error(what), measured(measured), threshold(threshold) {}
    double measured;
    double threshold;
};

struct ConfigError : Error {
    using Error::Error;
};

// An internal cross-check between two computations of the same quantity failed.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace muskat
