#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace ncplay {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Projection target is equidistant to multiple nearest points of a
/// non-convex set (e.g. the center of a ball complement, the midline
/// between union members). Never tie-broken silently.
class AmbiguousProjection : public Error {
 public:
  using Error::Error;
};

/// Point lies at distance >= prox_radius from a non-convex set, where
/// uniqueness of the projection is no longer guaranteed.
class OutsideProxNeighborhood : public Error {
 public:
  using Error::Error;
};

class NotMember : public Error {
 public:
  using Error::Error;
};

class SamplerExhausted : public Error {
 public:
  using Error::Error;
};

class BadInterval : public Error {
 public:
  using Error::Error;
};

class DegenerateVariation : public Error {
 public:
  using Error::Error;
};

class StepTooLarge : public Error {
 public:
  using Error::Error;
};

class InitialConditionViolation : public Error {
 public:
  using Error::Error;
};

class GridBudgetExceeded : public Error {
 public:
  GridBudgetExceeded(const std::string& msg, double last_gap)
      : Error(msg), last_gap_(last_gap) {}
  explicit GridBudgetExceeded(const std::string& msg) : Error(msg) {}
  /// Cauchy gap achieved before the budget ran out (NaN if not applicable).
  double last_gap() const { return last_gap_; }

 private:
  double last_gap_ = std::numeric_limits<double>::quiet_NaN();
};

class InadmissiblePerturbation : public Error {
 public:
  using Error::Error;
};

class ConfigParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncplay
