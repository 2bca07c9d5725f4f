#pragma once

#include <stdexcept>
#include <string>

namespace qslforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  NotUnitary(double deviation, double tolerance);
  /// ||G^dagger G - I||_F of the rejected matrix.
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

class NotHermitian : public Error {
 public:
  NotHermitian(double deviation, double tolerance);
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

class InvalidSchedule : public Error {
 public:
  using Error::Error;
};

class UnknownGate : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class BadShape : public Error {
 public:
  using Error::Error;
};

class BadP : public Error {
 public:
  using Error::Error;
};

class NormError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Raised when a schedule does not implement the gate it is checked against.
class NotAllowedProtocol : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qslforge
