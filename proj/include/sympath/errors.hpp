#pragma once

#include <stdexcept>
#include <string>

namespace sympath {

/// Base class for all numerical failures raised by this library.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSymmetric : NumericalError {
    using NumericalError::NumericalError;
};

struct NotSymplectic : NumericalError {
    using NumericalError::NumericalError;
};

struct AmbientMismatch : NumericalError {
    using NumericalError::NumericalError;
};

struct DegenerateFrame : NumericalError {
    using NumericalError::NumericalError;
};

struct DimensionMismatch : NumericalError {
    using NumericalError::NumericalError;
};

struct StepCountTooSmall : NumericalError {
    using NumericalError::NumericalError;
};

struct NonSymmetricCoefficient : NumericalError {
    using NumericalError::NumericalError;
};

/// A crossing form has a nontrivial kernel; carries the crossing time.
struct DegenerateCrossing : NumericalError {
    double time;
    explicit DegenerateCrossing(double t, const std::string& what)
        : NumericalError(what), time(t) {}
};

struct MissingCoefficientPath : NumericalError {
    using NumericalError::NumericalError;
};

struct NoConvergence : NumericalError {
    using NumericalError::NumericalError;
};

struct SingularJacobian : NumericalError {
    using NumericalError::NumericalError;
};

struct NotPositiveDefinite : NumericalError {
    using NumericalError::NumericalError;
};

struct DBlockNotPositive : NumericalError {
    using NumericalError::NumericalError;
};

struct DegenerateEndpoint : NumericalError {
    using NumericalError::NumericalError;
};

struct ConfigParse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sympath
