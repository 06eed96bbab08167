#pragma once

#include <stdexcept>
#include <string>

namespace qcascade {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or dimension violation by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Numerical breakdown: singular solves, non-convergence, failed residual checks.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Malformed or schema-violating input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcascade
