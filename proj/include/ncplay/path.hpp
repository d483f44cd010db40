#pragma once

#include <cstddef>
#include <vector>

#include "ncplay/vec.hpp"

namespace ncplay {

/// Continuous piecewise-linear function [0, T] -> R^d given by strictly
/// increasing sample times (times[0] = 0) and values of the same length.
class Path {
 public:
  Path(std::vector<double> times, std::vector<Vec> values);

  std::size_t size() const { return times_.size(); }
  std::size_t dim() const { return values_.front().dim(); }
  double duration() const { return times_.back(); }

  double time(std::size_t k) const { return times_[k]; }
  const Vec& value(std::size_t k) const { return values_[k]; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<Vec>& values() const { return values_; }

  /// Linear interpolation; node times return node values bitwise. Times
  /// outside [0, T] (by rounding) clamp to the endpoints.
  Vec eval(double t) const;

  /// Index of the segment [times[i], times[i+1]] containing t.
  std::size_t segment_index(double t) const;

 private:
  std::vector<double> times_;
  std::vector<Vec> values_;
};

/// Monotone surjective time reparametrization: a scalar path with
/// nondecreasing values, phi(0) = 0 and phi(T) = T.
class TimeChange {
 public:
  explicit TimeChange(Path phi);

  const Path& path() const { return phi_; }
  double duration() const { return phi_.duration(); }
  double eval(double t) const { return phi_.eval(t)[0]; }

 private:
  Path phi_;
};

/// Scalar convenience constructor.
Path scalar_path(std::vector<double> times, std::vector<double> values);

/// Sorted union of the two grids (exact-duplicate times collapsed).
std::vector<double> union_grid(const Path& f, const Path& g);

/// Path sampled at the given times (must cover [0, T]).
Path resample(const Path& f, const std::vector<double>& times);

/// f - g formed on the union grid.
Path path_difference(const Path& f, const Path& g);

/// Inserts segment midpoints `levels` times; identical interpolant.
Path refine(const Path& f, int levels);

}  // namespace ncplay
