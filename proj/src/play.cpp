#include "ncplay/play.hpp"

#include <algorithm>
#include <cmath>

#include "ncplay/bvcalc.hpp"

namespace ncplay {

double PlaySolution::diagnostic(const std::string& key, double fallback) const {
  for (const auto& [k, v] : diagnostics)
    if (k == key) return v;
  return fallback;
}

std::pair<Vec, Vec> catching_up_step(const SetSpec& set, const Vec& x_k, const Vec& du) {
  if (!set.convex() && norm(du) >= set.prox_radius())
    throw StepTooLarge("increment of size " + std::to_string(norm(du)) +
                       " reaches the prox radius " + std::to_string(set.prox_radius()));
  const Vec target = x_k + du;
  Vec x_next = project(set, target);
  Vec dy = target - x_next;
  return {std::move(x_next), std::move(dy)};
}

namespace {

/// u's grid with every segment whose value increment exceeds the step bound
/// subdivided linearly. Subdivision counts depend on the values only.
void pre_refine(const Path& u, double max_step, std::size_t max_points,
                std::vector<double>& times, std::vector<Vec>& values) {
  times.clear();
  values.clear();
  times.reserve(u.size());
  values.reserve(u.size());
  for (std::size_t k = 0; k + 1 < u.size(); ++k) {
    const Vec& a = u.value(k);
    const Vec& b = u.value(k + 1);
    const double len = distance(a, b);
    std::size_t pieces = 1;
    if (std::isfinite(max_step) && len > max_step)
      pieces = static_cast<std::size_t>(std::ceil(len / max_step));
    times.push_back(u.time(k));
    values.push_back(a);
    for (std::size_t j = 1; j < pieces; ++j) {
      const double w = static_cast<double>(j) / static_cast<double>(pieces);
      times.push_back(u.time(k) + w * (u.time(k + 1) - u.time(k)));
      values.push_back(a + w * (b - a));
    }
    if (times.size() > max_points)
      throw GridBudgetExceeded("pre-refined grid exceeds max_points = " +
                               std::to_string(max_points));
  }
  times.push_back(u.time(u.size() - 1));
  values.push_back(u.value(u.size() - 1));
  if (times.size() > max_points)
    throw GridBudgetExceeded("pre-refined grid exceeds max_points = " +
                             std::to_string(max_points));
}

}  // namespace

PlaySolution solve_play(const SetSpec& set, const Path& u, const Vec& z0,
                        const SolverOptions& opts) {
  if (set.dim() != u.dim() || z0.dim() != u.dim())
    throw DimensionMismatch("set, input and initial state dimensions must agree");
  if (!contains(set, z0))
    throw InitialConditionViolation(
        "u(0) - y(0) = z0 must lie in the constraint set, but z0 is at distance " +
        std::to_string(distance(set, z0)));
  if (!(opts.step_fraction > 0.0) || opts.step_fraction > 1.0)
    throw Error("step_fraction must lie in (0, 1]");

  PlaySolution sol{set, z0, opts, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  const double max_step =
      set.convex() ? std::numeric_limits<double>::infinity()
                   : opts.step_fraction * set.prox_radius();
  pre_refine(u, max_step, opts.max_points, sol.grid, sol.u);

  const std::size_t n = sol.grid.size();
  sol.y.reserve(n);
  sol.x.reserve(n);
  sol.w.reserve(n);
  sol.du.reserve(n - 1);
  sol.dy.reserve(n - 1);
  sol.dx.reserve(n - 1);

  Vec x = z0;
  Vec y = sol.u.front() - z0;
  sol.x.push_back(x);
  sol.y.push_back(y);
  sol.w.push_back(y - x);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Vec du = sol.u[k + 1] - sol.u[k];
    auto [x_next, dy] = catching_up_step(set, x, du);
    sol.dx.push_back(x_next - x);
    x = std::move(x_next);
    y += dy;
    sol.x.push_back(x);
    sol.y.push_back(y);
    sol.w.push_back(y - x);
    sol.du.push_back(std::move(du));
    sol.dy.push_back(std::move(dy));
  }
  return sol;
}

PlaySolution solve_adaptive(const SetSpec& set, const Path& u, const Vec& z0, double tol,
                            const SolverOptions& opts) {
  if (!(tol > 0.0)) throw Error("solve_adaptive requires tol > 0");
  PlaySolution prev = solve_play(set, u, z0, opts);
  Path input = u;
  double gap = std::numeric_limits<double>::quiet_NaN();
  for (int level = 0;; ++level) {
    if (2 * input.size() - 1 > opts.max_points)
      throw GridBudgetExceeded("refinement to level " + std::to_string(level + 1) +
                                   " would exceed max_points; last gap " + std::to_string(gap),
                               gap);
    input = refine(input, 1);
    PlaySolution cur = solve_play(set, input, z0, opts);
    gap = sup_distance(prev.y_path(), cur.y_path());
    if (gap <= tol) {
      cur.diagnostics.emplace_back("cauchy_gap", gap);
      cur.diagnostics.emplace_back("levels", static_cast<double>(level + 1));
      return cur;
    }
    prev = std::move(cur);
  }
}

}  // namespace ncplay
