#pragma once

#include <stdexcept>
#include <string>

namespace speclust {

/// Base class for all library-specific failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Cholesky pivot fell below the positive-definiteness threshold.
struct NotPositiveDefinite : Error {
    using Error::Error;
};

/// The iterative eigensolver exhausted its iteration budget.
/// Usually indicates a (near-)degenerate spectral gap.
struct NoConvergence : Error {
    explicit NoConvergence(int max_iter)
        : Error("eigensolver did not converge within " + std::to_string(max_iter) +
                " iterations (degenerate spectral gap?)"),
          max_iter(max_iter) {}
    int max_iter;
};

/// The model has mu = 0; quantities of the form ||mu||^2 / ... are undefined.
struct ZeroMean : Error {
    ZeroMean() : Error("model mean vector is zero; requested quantity is undefined") {}
};

/// The alignment reference inner product is exactly zero.
struct AlignmentUndefined : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct AlphaOutOfRange : Error {
    using Error::Error;
};

struct BadScenarioParams : Error {
    using Error::Error;
};

struct AllReplicationsDegenerate : Error {
    using Error::Error;
};

/// Malformed config / grid / model JSON (unknown keys, wrong types, ...).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace speclust
