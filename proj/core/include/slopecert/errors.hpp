#pragma once

#include <stdexcept>
#include <string>

namespace slopecert {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed caller input (bad matrix, even alpha, gcd != 1, ...).
struct InputError : Error {
  using Error::Error;
};

// Generator images do not satisfy the relators of the presentation.
struct RepresentationInvalidError : Error {
  using Error::Error;
};

// Explicit permutation action does not satisfy the relators.
struct ActionInvalidError : Error {
  using Error::Error;
};

// Word handed to Reidemeister rewriting does not stabilize the base coset.
struct NotInSubgroupError : Error {
  using Error::Error;
};

// Generating set spans a sublattice of rank < 2.
struct DegenerateLatticeError : Error {
  using Error::Error;
};

// A documented operation precondition was violated.
struct PreconditionError : Error {
  using Error::Error;
};

// Image of the boundary word is conjugate to the inverse commutator.
struct OrientationReversedError : Error {
  using Error::Error;
};

// Longitude candidate failed one of its defining checks.
struct LongitudeError : Error {
  using Error::Error;
};

// Two independent computations of the same quantity disagree: a bug,
// never a mathematical outcome.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace slopecert
