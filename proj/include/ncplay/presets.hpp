#pragma once

#include "ncplay/path.hpp"

namespace ncplay {

/// Closed-form input presets. Formulas:
///   ramp:       u(t) = t (scalar), sampled at `samples` uniform nodes
///   zigzag:     scalar triangle wave over `legs` legs of duration T/legs,
///               alternating 0 -> amplitude -> 0 -> ...
///   circle_arc: u(t) = center + radius (cos a(t), sin a(t)),
///               a linear from angle0 to angle1
///   lissajous:  u(t) = (ax sin(2 pi fx t / T + phase), ay sin(2 pi fy t / T))
/// All presets are polylines at `samples` nodes; zigzag keeps its breakpoints
/// in the grid so the interpolant is exact for any sample count.
Path preset_ramp(double T, int samples);
Path preset_zigzag(double T, double amplitude, int legs, int samples);
Path preset_circle_arc(double T, double radius, double angle0, double angle1, int samples,
                       Vec center);
Path preset_lissajous(double T, double ax, double ay, int fx, int fy, double phase,
                      int samples);

/// Time change presets on [0, T]:
///   id:        phi(t) = t
///   quadratic: phi(t) = t^2 / T, sampled at `samples` nodes
///   remap:     piecewise-linear map of a skewed partition onto `grid`
///              (visits exactly the grid's values: value-sequence preserving)
///   plateau:   constant on the middle third, linear elsewhere
TimeChange time_change_id(double T);
TimeChange time_change_quadratic(double T, int samples);
TimeChange time_change_remap(const std::vector<double>& grid);
TimeChange time_change_plateau(double T);

}  // namespace ncplay
