#pragma once

#include <stdexcept>
#include <string>

namespace latc {

// Base of every error raised by the library. The CLI maps subclasses onto
// process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class UnboundedError : public Error {
 public:
  using Error::Error;
};

// Enumeration exceeded a configured candidate or rank cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Malformed input file or text.
class ParseError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NotPositiveDefiniteError : public ParseError {
 public:
  using ParseError::ParseError;
};

class BoundTooSmallError : public Error {
 public:
  using Error::Error;
};

class DependenceError : public Error {
 public:
  using Error::Error;
};

class NonUnimodularError : public Error {
 public:
  using Error::Error;
};

class NonPrimitiveError : public Error {
 public:
  using Error::Error;
};

class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A candidate set claimed to cover the relevant vectors does not.
class CertificateUnsoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace latc
