#pragma once

#include "ncplay/path.hpp"

namespace ncplay {

/// Total variation of f over [a, b] (partial segments interpolated). For
/// polylines the increment sum equals the supremum over partitions exactly.
double variation(const Path& f, double a, double b);
double variation(const Path& f);

/// sup over [0, T] of |f(t) - g(t)|; attained on the union grid because the
/// norm of an affine function is convex on each segment.
double sup_distance(const Path& f, const Path& g);

/// BV-norm distance: sup_distance + variation of the difference.
double bv_distance(const Path& f, const Path& g);

/// Strict metric: sup_distance + |V(f) - V(g)|. Never exceeds bv_distance.
double strict_distance(const Path& f, const Path& g);

/// Normalized arc length l(t) = T * V(f,[0,t]) / V(f,[0,T]); identically zero
/// for constant paths.
TimeChange arc_length_profile(const Path& f);

struct Reparametrization {
  TimeChange ell;
  Path ftilde;  // constant-speed representative with f = ftilde o ell
};

/// Splits f into its normalized arc length and a constant-speed path, with
/// duplicate arc-length samples collapsed (plateaus of f are removed).
/// Throws DegenerateVariation for constant paths.
Reparametrization reparametrize_by_arclength(const Path& f);

/// Exact polyline of f o phi: phi's grid augmented with the preimages of f's
/// breakpoints, so no resampling error is introduced.
Path compose_time_change(const Path& f, const TimeChange& phi);

}  // namespace ncplay
