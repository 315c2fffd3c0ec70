#pragma once

#include <stdexcept>
#include <string>

namespace rotnd {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multi-index component lies outside its dimension.
class IndexError : public Error {
 public:
  IndexError(std::size_t dimension, std::size_t value, std::size_t extent)
      : Error("index component " + std::to_string(value) + " out of bounds for dimension " +
              std::to_string(dimension) + " (extent " + std::to_string(extent) + ")"),
        dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
};

/// A caller broke an operation's precondition (e.g. an index outside its region).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A rank or ordinal is past the end of the sequence it addresses.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Rank mismatch, empty shape, or an element count that cannot be addressed.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A region is inverted or does not fit inside the tensor.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Base for tensor-file parse failures.
class FormatError : public Error {
 public:
  using Error::Error;
};

class BadMagicError : public FormatError {
 public:
  using FormatError::FormatError;
};

class BadVersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

class BadDTypeError : public FormatError {
 public:
  using FormatError::FormatError;
};

class BadRankError : public FormatError {
 public:
  using FormatError::FormatError;
};

class TruncatedError : public FormatError {
 public:
  using FormatError::FormatError;
};

class DimsOverflowError : public FormatError {
 public:
  using FormatError::FormatError;
};

class TrailingDataError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Filesystem failure; the message carries the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rotnd
