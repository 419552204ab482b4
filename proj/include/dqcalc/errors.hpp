#pragma once

#include <stdexcept>
#include <string>

namespace dqcalc {

// Base type for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The complexified evaluation point lies outside the function's domain.
struct DomainError : Error {
  using Error::Error;
};

// The real (non-dual) part is zero or too small to invert.
struct SingularInput : Error {
  using Error::Error;
};

// apply_commuting was handed parts that do not commute.
struct NonCommuting : Error {
  using Error::Error;
};

// Parallel/perpendicular or dimension preconditions violated.
struct ShapeMismatch : Error {
  using Error::Error;
};

// Matrix pair fails the anticommutation check.
struct NotAnticommuting : Error {
  using Error::Error;
};

// Malformed argument (non-finite exponent, bad branch choice, bad n, ...).
struct InvalidParameter : Error {
  using Error::Error;
};

// Malformed JSON or function-spec string.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace dqcalc
