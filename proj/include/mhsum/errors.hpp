#pragma once

#include <stdexcept>
#include <string>

namespace mhsum {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation that needs a nonempty index received the empty index.
struct EmptyIndexError : Error {
  using Error::Error;
};

// Entrywise operation on tuples of different depths.
struct DepthMismatchError : Error {
  using Error::Error;
};

// An integer argument lies outside the operation's legal range.
struct InvalidRangeError : Error {
  using Error::Error;
};

// Arithmetic between truncated series of different orders.
struct OrderMismatchError : Error {
  using Error::Error;
};

// Inversion of a non-unit (zero rational, series with zero constant
// term, polynomial division by zero, residue sharing a factor with the
// modulus where the caller did not come from a rational embedding).
struct NotInvertibleError : Error {
  using Error::Error;
};

// Embedding a rational a/b into Z/p^nZ with p | b.
struct NonInvertibleDenominatorError : Error {
  using Error::Error;
};

// A transport move applied to a state whose shape does not match it.
struct InapplicableMoveError : Error {
  using Error::Error;
};

// A transport chain reached a state whose value differs from the start.
struct ChainBrokenError : Error {
  using Error::Error;
};

// A closed-form right-hand side was requested outside its parity
// hypothesis.
struct ParityViolationError : Error {
  using Error::Error;
};

// verify_identity dispatch on an unknown identity id.
struct UnknownIdentityError : Error {
  using Error::Error;
};

// Malformed sweep configuration (bad key, bad value, unknown statement).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace mhsum
