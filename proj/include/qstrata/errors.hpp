#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qstrata {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCartanType : public Error {
 public:
  using Error::Error;
};

/// Root-of-unity order fails the goodness test (odd, prime to d_i and the
/// highest-root coefficients).
class BadEll : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// ell shares a factor with the order of a Weyl group element; carries the gcd.
class CoprimalityError : public Error {
 public:
  CoprimalityError(const std::string& what, long long gcd)
      : Error(what), gcd_(gcd) {}
  long long gcd() const noexcept { return gcd_; }

 private:
  long long gcd_;
};

class ContainmentError : public Error {
 public:
  using Error::Error;
};

class NotAzumaya : public Error {
 public:
  using Error::Error;
};

class AlgebraError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotLocal : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class GroupError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a user-supplied string; position is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qstrata
