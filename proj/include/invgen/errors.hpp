#pragma once

#include <stdexcept>
#include <string>

namespace invgen {

// Error taxonomy. Everything user-recoverable derives from Error so the CLI
// can map exception class -> exit code in one place.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input values (bad generators, bad ranges, zero polynomial, ...).
struct InputError : Error {
  using Error::Error;
};

// A configured cap was exceeded (partition degree, element enumeration, draw
// budget). The message names the cap.
struct SizeError : Error {
  using Error::Error;
};

// Query outside what the object supports (degree beyond an atlas ceiling,
// non-prime-power primitive degree requested explicitly, ...).
struct CapabilityError : Error {
  using Error::Error;
};

// Mathematically meaningless request (sampling where every subgroup is
// solvable, certifying an inseparable polynomial).
struct DomainError : Error {
  using Error::Error;
};

// Text that failed to parse; column/byte is 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column(column) {}
  std::size_t column;
};

}  // namespace invgen
