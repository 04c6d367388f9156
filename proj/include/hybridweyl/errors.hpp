#pragma once

#include <stdexcept>
#include <string>

namespace hybridweyl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid algebra label, unsupported embedding, malformed realization.
struct ConstructionError : Error {
  using Error::Error;
};

// Weight or vector length does not match the algebra's rank.
struct DimensionError : Error {
  using Error::Error;
};

// Caller violated a documented precondition (e.g. non-dominant highest weight).
struct PreconditionError : Error {
  using Error::Error;
};

// Sign map is not well defined on the orbit of an S-function seed.
struct DegeneracyError : Error {
  using Error::Error;
};

// An internal identity failed. Always a bug, never a user error.
struct ConsistencyError : Error {
  using Error::Error;
};

// Denominator S-function vanishes at the evaluation point.
struct SingularPointError : Error {
  using Error::Error;
};

}  // namespace hybridweyl
