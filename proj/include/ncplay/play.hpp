#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncplay/geometry.hpp"
#include "ncplay/path.hpp"

namespace ncplay {

struct SolverOptions {
  /// Fraction of the prox radius allowed per increment; segments exceeding it
  /// are pre-subdivided so every projection stays well inside the
  /// unique-projection zone.
  double step_fraction = 0.25;
  std::size_t max_points = std::size_t{1} << 20;
  /// Sampled constraint points per step in vi_residual.
  int residual_targets = 64;
};

/// Output of the catching-up solve: input, output, stop and Q components on a
/// common grid, with per-step increments. Invariants at every node k:
///   x = u - y, w = y - x, x in Z, x(0) = z0.
struct PlaySolution {
  SetSpec set;
  Vec z0;
  SolverOptions opts;

  std::vector<double> grid;
  std::vector<Vec> u, y, x, w;
  std::vector<Vec> du, dy, dx;  // per-step, size grid.size() - 1

  std::vector<std::pair<std::string, double>> diagnostics;

  std::size_t steps() const { return du.size(); }
  std::size_t dim() const { return z0.dim(); }

  Path u_path() const { return Path(grid, u); }
  Path y_path() const { return Path(grid, y); }
  Path x_path() const { return Path(grid, x); }
  Path w_path() const { return Path(grid, w); }

  double diagnostic(const std::string& key, double fallback) const;
};

/// One implicit Euler step of the catching-up scheme:
///   x_next = Proj_Z(x_k + du), dy = (x_k + du) - x_next.
/// dy is a proximal normal direction at x_next (or zero).
std::pair<Vec, Vec> catching_up_step(const SetSpec& set, const Vec& x_k, const Vec& du);

/// Catching-up solve along u's grid. Segments whose increment exceeds
/// step_fraction * prox_radius are linearly subdivided first (non-convex
/// sets). The solve is a fold over the value increments only, so re-timing
/// the same value sequence yields bitwise-identical outputs.
PlaySolution solve_play(const SetSpec& set, const Path& u, const Vec& z0,
                        const SolverOptions& opts = {});

/// Refines u and re-solves until consecutive outputs agree within tol in the
/// sup norm. Diagnostics carry the achieved Cauchy gap ("cauchy_gap") and the
/// refinement level reached ("levels").
PlaySolution solve_adaptive(const SetSpec& set, const Path& u, const Vec& z0, double tol,
                            const SolverOptions& opts = {});

}  // namespace ncplay
