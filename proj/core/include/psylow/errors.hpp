#pragma once

#include <stdexcept>

namespace psylow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed spec text, corpus line or partition literal
struct ParseError : Error {
  using Error::Error;
};

// an enumeration or subgroup cap was exceeded
struct CapError : Error {
  using Error::Error;
};

// arguments violate a documented precondition
struct PreconditionError : Error {
  using Error::Error;
};

// a theorem check failed, or the curated facts table was contradicted
struct VerificationError : Error {
  using Error::Error;
};

}  // namespace psylow
