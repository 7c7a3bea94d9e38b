#pragma once

#include <stdexcept>
#include <string>

namespace bilateral {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma evaluated on its pole lattice.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A ratio whose numerator sits on a pole while the denominator is regular.
class InfiniteValueError : public Error {
 public:
  using Error::Error;
};

/// Poles in both numerator and denominator; the value needs a limit.
class IndeterminateRatioError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class DivergentSeriesError : public Error {
 public:
  using Error::Error;
};

class ConditionalRefusedError : public Error {
 public:
  using Error::Error;
};

/// A series term ratio whose denominator vanishes while the running term is
/// nonzero (an interior pole).
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnsatisfiableConstraintError : public Error {
 public:
  using Error::Error;
};

}  // namespace bilateral
