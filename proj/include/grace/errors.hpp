#pragma once

#include <stdexcept>
#include <string>

namespace grace {

// Base class for all engine errors. Subclasses exist so callers (and the
// CLI) can map failure kinds to exit codes and messages.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched domain sizes (e.g. composing maps over different Z_n).
struct DomainSizeError : Error {
  using Error::Error;
};

// Input violates a value-range or format contract.
struct ParseError : Error {
  using Error::Error;
};

// Element list fails the subgroup axioms (identity, closure, inverses).
struct GroupAxiomError : Error {
  using Error::Error;
};

// Request exceeds the configured maximum domain size.
struct SizeCapError : Error {
  using Error::Error;
};

// Matrix inversion requested for a singular matrix; message carries det.
struct SingularMatrixError : Error {
  using Error::Error;
};

// A construction's structural precondition has no solution for this input.
struct ConstructionUnavailableError : Error {
  using Error::Error;
};

// Operation invoked on an instance that does not satisfy its premise.
struct PremiseError : Error {
  using Error::Error;
};

// LCM is undefined for identically-zero products.
struct ZeroProductError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace grace
