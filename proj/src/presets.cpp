#include "ncplay/presets.hpp"

#include <algorithm>
#include <cmath>

#include "ncplay/errors.hpp"

namespace ncplay {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<double> uniform_grid(double T, int samples) {
  if (!(T > 0.0)) throw Error("preset requires T > 0");
  if (samples < 2) throw Error("preset requires at least 2 samples");
  std::vector<double> t(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k)
    t[static_cast<std::size_t>(k)] = T * static_cast<double>(k) / (samples - 1);
  t.back() = T;
  return t;
}

}  // namespace

Path preset_ramp(double T, int samples) {
  std::vector<double> t = uniform_grid(T, samples);
  std::vector<double> v = t;
  return scalar_path(std::move(t), std::move(v));
}

Path preset_zigzag(double T, double amplitude, int legs, int samples) {
  if (legs < 1) throw Error("zigzag needs at least one leg");
  std::vector<double> breakpoints(static_cast<std::size_t>(legs) + 1);
  std::vector<double> values(static_cast<std::size_t>(legs) + 1);
  for (int k = 0; k <= legs; ++k) {
    breakpoints[static_cast<std::size_t>(k)] = T * static_cast<double>(k) / legs;
    values[static_cast<std::size_t>(k)] = (k % 2 == 0) ? 0.0 : amplitude;
  }
  breakpoints.back() = T;
  Path base = scalar_path(std::move(breakpoints), std::move(values));
  if (samples <= legs + 1) return base;
  // Merge a uniform grid into the breakpoints; same interpolant.
  std::vector<double> grid = uniform_grid(T, samples);
  std::vector<double> merged;
  std::merge(grid.begin(), grid.end(), base.times().begin(), base.times().end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  std::vector<Vec> vals;
  vals.reserve(merged.size());
  for (double t : merged) vals.push_back(base.eval(t));
  return Path(std::move(merged), std::move(vals));
}

Path preset_circle_arc(double T, double radius, double angle0, double angle1, int samples,
                       Vec center) {
  if (center.dim() != 2) throw Error("circle_arc preset is two-dimensional");
  std::vector<double> t = uniform_grid(T, samples);
  std::vector<Vec> v;
  v.reserve(t.size());
  for (double tk : t) {
    const double a = angle0 + (angle1 - angle0) * (tk / T);
    v.push_back(center + radius * Vec{std::cos(a), std::sin(a)});
  }
  return Path(std::move(t), std::move(v));
}

Path preset_lissajous(double T, double ax, double ay, int fx, int fy, double phase,
                      int samples) {
  std::vector<double> t = uniform_grid(T, samples);
  std::vector<Vec> v;
  v.reserve(t.size());
  for (double tk : t)
    v.push_back(Vec{ax * std::sin(kTwoPi * fx * tk / T + phase),
                    ay * std::sin(kTwoPi * fy * tk / T)});
  return Path(std::move(t), std::move(v));
}

TimeChange time_change_id(double T) {
  return TimeChange(scalar_path({0.0, T}, {0.0, T}));
}

TimeChange time_change_quadratic(double T, int samples) {
  std::vector<double> t = uniform_grid(T, samples);
  std::vector<double> v(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) v[k] = t[k] * t[k] / T;
  v.back() = T;
  return TimeChange(scalar_path(std::move(t), std::move(v)));
}

TimeChange time_change_remap(const std::vector<double>& grid) {
  if (grid.size() < 2) throw Error("remap needs a grid with at least 2 nodes");
  const double T = grid.back();
  const std::size_t n = grid.size() - 1;
  std::vector<double> s(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double w = static_cast<double>(k) / static_cast<double>(n);
    s[k] = T * std::pow(w, 1.5);
  }
  s.front() = 0.0;
  s.back() = T;
  return TimeChange(scalar_path(std::move(s), std::vector<double>(grid)));
}

TimeChange time_change_plateau(double T) {
  return TimeChange(
      scalar_path({0.0, T / 3.0, 2.0 * T / 3.0, T}, {0.0, T / 2.0, T / 2.0, T}));
}

}  // namespace ncplay
