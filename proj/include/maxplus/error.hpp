#pragma once

#include <stdexcept>
#include <string>

namespace maxplus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InverseOfZero : public Error {
 public:
  InverseOfZero() : Error("the zero element has no multiplicative inverse") {}
};

class ZeroToNonpositivePower : public Error {
 public:
  ZeroToNonpositivePower()
      : Error("the zero element can only be raised to a positive power") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class NotAVector : public Error {
 public:
  using Error::Error;
};

class ZeroMatrix : public Error {
 public:
  ZeroMatrix() : Error("conjugate of a zero matrix is undefined") {}
};

class NotColumnRegular : public Error {
 public:
  using Error::Error;
};

class NotRegularVector : public Error {
 public:
  using Error::Error;
};

/// Raised when a numerical result contradicts an invariant that the
/// closed-form solution guarantees (e.g. an empty parameter box).
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class StageOneInfeasible : public Error {
 public:
  using Error::Error;
};

class StageTwoInfeasible : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfBox : public Error {
 public:
  using Error::Error;
};

class GridTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxplus
