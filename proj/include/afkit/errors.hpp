#pragma once

#include <stdexcept>
#include <string>

namespace afkit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Shapes that do not line up: tuple length vs dimension, mismatched sizes.
class DimensionError : public Error {
public:
  using Error::Error;
};

// An argument violates a documented precondition (non-Hermitian input,
// non-PSD class, negative dilation factor, parameter out of range).
class DomainError : public Error {
public:
  using Error::Error;
};

// Malformed wire input (bad rational string, schema mismatch).
class ParseError : public Error {
public:
  using Error::Error;
};

// Intermediate point count of a Minkowski sum exceeds the vertex budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// A class handed to an equality theorem is nef but not big (det = 0).
class NotBigError : public Error {
public:
  using Error::Error;
};

// d00 = 0: the proportionality constant is undefined.
class DegenerateError : public Error {
public:
  using Error::Error;
};

// An exact check that must hold on qualified inputs failed. Raised loudly:
// on generated data this is either a bug or a counterexample.
class TheoremViolation : public Error {
public:
  using Error::Error;
};

} // namespace afkit
