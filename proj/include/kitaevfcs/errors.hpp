#pragma once

#include <stdexcept>
#include <string>

namespace kfcs {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters or malformed configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Frequency window too narrow: |ln Z| at the grid edge above tolerance.
struct TailNotConverged : Error {
    using Error::Error;
};

// Log-branch continuation could not resolve a phase jump at the minimum step.
struct BranchAmbiguity : Error {
    using Error::Error;
};

// Richardson extrapolation of a finite-difference cumulant failed to settle.
struct StepTooSmall : Error {
    using Error::Error;
};

// Too few resolved q pairs for a slope fit.
struct InsufficientSupport : Error {
    using Error::Error;
};

// omega hits a closed-chain eigenvalue with both leads decoupled.
struct SingularPropagator : Error {
    using Error::Error;
};

// Parameters violate an analytic case's validity constraints.
struct CaseMismatch : Error {
    using Error::Error;
};

// Lead charges with odd sum cannot be split into pair/normal components.
struct ParityError : Error {
    using Error::Error;
};

} // namespace kfcs
