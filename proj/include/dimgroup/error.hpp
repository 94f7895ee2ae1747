#pragma once

#include <stdexcept>
#include <string>

namespace dimgroup {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// The sign of a nonzero element could not be decided within the configured
/// precision cap. A correctly configured (transcendental) oracle never
/// triggers this for a genuinely nonzero input.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ConstantFunction : public Error {
 public:
  using Error::Error;
};

class ConstantElement : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

class NotFormallyReal : public Error {
 public:
  using Error::Error;
};

class DependentBasis : public Error {
 public:
  using Error::Error;
};

class LambdaConditionFailed : public Error {
 public:
  using Error::Error;
};

class TopIndexZero : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal certificate fails to re-verify. Never expected.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dimgroup
