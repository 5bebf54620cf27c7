#pragma once

#include <stdexcept>
#include <string>

namespace se2frame {

// Root of every error thrown by the library. Degenerate frames are not
// errors; they are reported through flags on the result types.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SingularBasis : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

// Numerical failures: an eigensolver or an adaptive loop did not settle.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureStall : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class TailNotConverged : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace se2frame
