#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schur {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A chain condition d_out * d_in = 0 failed.
class InvalidComplex : public Error {
 public:
  using Error::Error;
};

/// Input text does not match a grammar. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A finite-group computation would exceed the configured order cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A homomorphism of abelian groups is not well defined, or amalgam data is inconsistent.
class IllDefinedMap : public Error {
 public:
  using Error::Error;
};

}  // namespace schur
