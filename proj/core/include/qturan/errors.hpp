#pragma once

#include <stdexcept>
#include <string>

namespace qturan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary operation between an Exact and a Float scalar, or between
/// quadratic numbers over different radicands.
class ModeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on a pole of Gamma_q or of a series coefficient.
class PoleError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A q-power or Gamma ratio that cannot be represented exactly.
class OffGridError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameters violate the hypotheses of the theorem being certified.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A lower series parameter equals q^{-j}, so some (b;q)_n vanishes.
class ParameterCollisionError : public Error {
 public:
  using Error::Error;
};

class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qturan
