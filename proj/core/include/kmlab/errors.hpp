#pragma once

#include <stdexcept>
#include <string>

namespace kmlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad sizes, malformed configs, mismatched grids, out-of-range parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical failures: divergence, overflow guards, ill-conditioned bases.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// File-system and parsing failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kmlab
