#pragma once

#include <stdexcept>
#include <string>

namespace adsbcov {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A transmitter coincides with the ground station (pathloss undefined).
class SingularDistanceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Analytic path requested for a fading shape it does not cover.
class UnsupportedFadingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// No target transmitter is available (empty UAV population / zero intensity).
class NoTargetError : public Error {
 public:
  using Error::Error;
};

/// A fixed-distance target cannot be placed inside the configured region.
class PlacementError : public Error {
 public:
  using Error::Error;
};

/// A range bucket carries no probability mass under the distance law.
class EmptyBucketError : public Error {
 public:
  using Error::Error;
};

/// Configuration document could not be parsed; names the offending key.
class ParseError : public Error {
 public:
  ParseError(const std::string& field, const std::string& what)
      : Error("config field '" + field + "': " + what), field(field) {}
  std::string field;
};

/// A parsed value violates a scenario invariant.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& field, const std::string& constraint)
      : Error("validation failed for '" + field + "': " + constraint),
        field(field),
        constraint(constraint) {}
  std::string field;
  std::string constraint;
};

/// Adaptive quadrature hit its subdivision limit before reaching tolerance.
class IntegrationAccuracyError : public Error {
 public:
  IntegrationAccuracyError(double requested, double achieved)
      : Error("quadrature tolerance not met: requested " +
              std::to_string(requested) + ", achieved " +
              std::to_string(achieved)),
        requested(requested),
        achieved(achieved) {}
  double requested;
  double achieved;
};

}  // namespace adsbcov
