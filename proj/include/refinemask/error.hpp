#pragma once

#include <stdexcept>
#include <string>

namespace refinemask {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (rational, mask or polynomial strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularMatrix : public DomainError {
 public:
  using DomainError::DomainError;
};

// The mask sum is not 2^{-n-1} for any n >= 0.
class NotRefiningPolynomial : public DomainError {
 public:
  NotRefiningPolynomial() : DomainError("mask does not refine a polynomial") {}
  using DomainError::DomainError;
};

}  // namespace refinemask
