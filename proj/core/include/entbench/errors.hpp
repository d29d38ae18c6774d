#pragma once

#include <stdexcept>
#include <string>

namespace entb {

// Base type for every error this library raises on bad input or
// failed numerics. Callers that do not care about the kind can
// catch this one.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix failed a Hermitian symmetry check.
struct NonHermitianError : Error {
    using Error::Error;
};

// Iterative solver exhausted its budget.
struct NoConvergenceError : Error {
    using Error::Error;
};

// Bipartite split (dim_a, dim_b) does not match the matrix size.
struct BadSplitError : Error {
    using Error::Error;
};

// Scalar function applied to an eigenvalue outside its domain.
struct SpectralDomainError : Error {
    using Error::Error;
};

// State specification with out-of-range parameters.
struct InvalidSpecError : Error {
    using Error::Error;
};

// Channel strength outside [0, 1].
struct BadStrengthError : Error {
    using Error::Error;
};

// Operand dimensions do not match what the operation expects.
struct DimensionError : Error {
    using Error::Error;
};

// Requested measure is absent from a record.
struct MissingMeasureError : Error {
    using Error::Error;
};

// Quantity required to be positive was not.
struct NonPositiveError : Error {
    using Error::Error;
};

}  // namespace entb
