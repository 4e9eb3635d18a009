#pragma once

#include <stdexcept>
#include <string>

namespace pgreedy {

// Base class for failures of the numerical pipeline (as opposed to bad input,
// which is reported through std::invalid_argument / std::domain_error).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by extend() when the chosen functional has no residual power left.
class InvalidSelection : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Raised when a residual power goes clearly negative, i.e. the stored Newton
// columns no longer describe a positive semidefinite Gram matrix.
class BrokenGram : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Raised by the dense collocation oracle when the Gram system cannot be
// factorized reliably.
class IllConditioned : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Malformed artifact files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pgreedy
