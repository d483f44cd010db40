#include "ncplay/path.hpp"

#include <algorithm>
#include <cmath>

#include "ncplay/errors.hpp"

namespace ncplay {

Path::Path(std::vector<double> times, std::vector<Vec> values)
    : times_(std::move(times)), values_(std::move(values)) {
  if (times_.size() < 2) throw Error("path needs at least two samples");
  if (times_.size() != values_.size()) throw Error("path times and values lengths differ");
  if (times_.front() != 0.0) throw Error("path must start at t = 0");
  const std::size_t d = values_.front().dim();
  if (d == 0) throw Error("path dimension must be >= 1");
  for (std::size_t k = 0; k + 1 < times_.size(); ++k)
    if (!(times_[k] < times_[k + 1])) throw Error("path times must be strictly increasing");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k].dim() != d) throw DimensionMismatch("path values must share one dimension");
    if (!values_[k].finite() || !std::isfinite(times_[k]))
      throw Error("path samples must be finite");
  }
}

std::size_t Path::segment_index(double t) const {
  if (t <= times_.front()) return 0;
  if (t >= times_.back()) return times_.size() - 2;
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  return static_cast<std::size_t>(it - times_.begin()) - 1;
}

Vec Path::eval(double t) const {
  const std::size_t i = segment_index(t);
  if (t == times_[i]) return values_[i];
  if (t >= times_[i + 1]) return values_[i + 1];
  const double w = (t - times_[i]) / (times_[i + 1] - times_[i]);
  return values_[i] + w * (values_[i + 1] - values_[i]);
}

TimeChange::TimeChange(Path phi) : phi_(std::move(phi)) {
  if (phi_.dim() != 1) throw Error("time change must be scalar");
  const double T = phi_.duration();
  if (phi_.value(0)[0] != 0.0) throw Error("time change must satisfy phi(0) = 0");
  bool all_zero = true;
  for (std::size_t k = 0; k < phi_.size(); ++k)
    if (phi_.value(k)[0] != 0.0) all_zero = false;
  // The identically-zero profile is the degenerate arc length of a constant
  // path; everything else must be surjective onto [0, T].
  if (!all_zero && std::abs(phi_.value(phi_.size() - 1)[0] - T) > 1e-12 * std::max(1.0, T))
    throw Error("time change must satisfy phi(T) = T");
  for (std::size_t k = 0; k + 1 < phi_.size(); ++k)
    if (phi_.value(k + 1)[0] < phi_.value(k)[0])
      throw Error("time change values must be nondecreasing");
}

Path scalar_path(std::vector<double> times, std::vector<double> values) {
  std::vector<Vec> v;
  v.reserve(values.size());
  for (double x : values) v.push_back(Vec{x});
  return Path(std::move(times), std::move(v));
}

std::vector<double> union_grid(const Path& f, const Path& g) {
  std::vector<double> grid;
  grid.reserve(f.size() + g.size());
  std::merge(f.times().begin(), f.times().end(), g.times().begin(), g.times().end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

Path resample(const Path& f, const std::vector<double>& times) {
  std::vector<Vec> values;
  values.reserve(times.size());
  for (double t : times) values.push_back(f.eval(t));
  return Path(times, std::move(values));
}

Path path_difference(const Path& f, const Path& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("path dimensions differ");
  if (f.duration() != g.duration()) throw BadInterval("paths live on different intervals");
  const std::vector<double> grid = union_grid(f, g);
  std::vector<Vec> values;
  values.reserve(grid.size());
  for (double t : grid) values.push_back(f.eval(t) - g.eval(t));
  return Path(grid, std::move(values));
}

Path refine(const Path& f, int levels) {
  if (levels < 0) throw Error("refine levels must be >= 0");
  if (levels == 0) return f;
  std::vector<double> times = f.times();
  std::vector<Vec> values = f.values();
  for (int l = 0; l < levels; ++l) {
    std::vector<double> t2;
    std::vector<Vec> v2;
    t2.reserve(2 * times.size());
    v2.reserve(2 * values.size());
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
      t2.push_back(times[k]);
      v2.push_back(values[k]);
      t2.push_back(0.5 * (times[k] + times[k + 1]));
      v2.push_back(0.5 * (values[k] + values[k + 1]));
    }
    t2.push_back(times.back());
    v2.push_back(values.back());
    times = std::move(t2);
    values = std::move(v2);
  }
  return Path(std::move(times), std::move(values));
}

}  // namespace ncplay
