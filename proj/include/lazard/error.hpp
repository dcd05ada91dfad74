#pragma once

#include <stdexcept>
#include <string>

namespace lazard {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// The polynomial is not in the image of the free Lie algebra.
class NotLieElement : public Error {
public:
  using Error::Error;
};

class NotHomogeneous : public Error {
public:
  using Error::Error;
};

class UnknownGenerator : public Error {
public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'") {}
};

class ZeroRelation : public Error {
public:
  using Error::Error;
};

/// A solved free-Lie dimension came out negative or fractional.
class NonIntegralDimension : public Error {
public:
  using Error::Error;
};

class InvalidSplit : public Error {
public:
  using Error::Error;
};

/// Malformed user input (files, flags, presentations outside an engine's hypotheses).
class InputError : public Error {
public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
public:
  using Error::Error;
};

} // namespace lazard
