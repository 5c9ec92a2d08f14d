#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace odla {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes do not agree, or an operation is undefined in this dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Structure constants or 2-form are not skew where they must be.
class SkewError : public Error {
 public:
  using Error::Error;
};

/// Bracket and 2-form fail the deformed Jacobi identity.
class NotAnAlgebraError : public Error {
 public:
  using Error::Error;
};

/// Missing, extra or nonpositive type parameter; unknown type name.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// Only exact rational specs can be written as documents.
class NonRationalSpecError : public Error {
 public:
  using Error::Error;
};

/// Malformed algebra document. `position()` is a byte offset into the input
/// when the failure is syntactic, otherwise 0.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace odla
