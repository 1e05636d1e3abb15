#pragma once

#include <stdexcept>
#include <string>

namespace grasscurv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand orders do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed (e.g. eigensolver did not converge).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A value violates an invariant of the involution model.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the domain of a formula (degenerate planes, m <= 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Tangent or normal vectors anchored at different points.
class AnchorError : public Error {
 public:
  using Error::Error;
};

}  // namespace grasscurv
