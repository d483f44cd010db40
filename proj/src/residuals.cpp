#include "ncplay/residuals.hpp"

#include <algorithm>
#include <cmath>

#include "ncplay/bvcalc.hpp"
#include "ncplay/rng.hpp"

namespace ncplay {

namespace {

/// Below this, an increment is rounding noise from a projection that moved
/// the point by ~machine epsilon; its direction carries no information.
double increment_floor(const PlaySolution& sol) {
  return 1e-13 * (1.0 + sol.set.scale());
}

double vi_residual_step(const PlaySolution& sol, std::uint64_t seed, std::size_t k) {
  const Vec& dy = sol.dy[k];
  const double dy_norm = norm(dy);
  if (dy_norm <= increment_floor(sol)) return 0.0;

  const SetSpec& set = sol.set;
  const Vec& x_next = sol.x[k + 1];
  const double r = set.prox_radius();
  const double halfwidth = 2.0 * dy_norm + extent_hint(set);

  Rng rng(seed, k);
  double worst = 0.0;
  auto consider = [&](const Vec& z) {
    const Vec zx = z - x_next;
    const double quad = std::isinf(r) ? 0.0 : dy_norm / (2.0 * r) * norm2(zx);
    worst = std::max(worst, dot(dy, zx) - quad);
  };
  for (int t = 0; t < sol.opts.residual_targets; ++t)
    consider(sample_member_near(set, x_next, halfwidth, rng));
  for (const Vec& z : extreme_members(set, x_next)) consider(z);
  consider(sol.x[k]);
  return worst;
}

double inclusion_residual_step(const PlaySolution& sol, double probe_fraction, std::size_t k) {
  const Vec& dy = sol.dy[k];
  const double dy_norm = norm(dy);
  if (dy_norm <= increment_floor(sol)) return 0.0;
  const SetSpec& set = sol.set;
  const double rho = set.convex() ? probe_fraction * dy_norm * 10.0
                                  : probe_fraction * set.prox_radius();
  const Vec& x_next = sol.x[k + 1];
  const Vec probe = x_next + (rho / dy_norm) * dy;
  return distance(project(set, probe), x_next);
}

template <typename StepFn>
double max_over_steps(std::size_t n, ExecPolicy policy, StepFn&& step) {
  double worst = 0.0;
  if (policy == ExecPolicy::Parallel) {
    const long nl = static_cast<long>(n);
#pragma omp parallel
    {
      double local = 0.0;
#pragma omp for nowait schedule(dynamic, 64)
      for (long k = 0; k < nl; ++k)
        local = std::max(local, step(static_cast<std::size_t>(k)));
#pragma omp critical(ncplay_residual_merge)
      worst = std::max(worst, local);
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, step(k));
  }
  return worst;
}

}  // namespace

double vi_residual(const PlaySolution& sol, std::uint64_t sampler_seed, ExecPolicy policy) {
  return max_over_steps(sol.steps(), policy, [&](std::size_t k) {
    return vi_residual_step(sol, sampler_seed, k);
  });
}

double inclusion_residual(const PlaySolution& sol, double probe_fraction, ExecPolicy policy) {
  if (!(probe_fraction > 0.0) || !(probe_fraction < 1.0))
    throw Error("probe_fraction must lie in (0, 1)");
  return max_over_steps(sol.steps(), policy, [&](std::size_t k) {
    return inclusion_residual_step(sol, probe_fraction, k);
  });
}

Report normality_report(const PlaySolution& sol) {
  double ortho_sum = 0.0;
  double du_sq_sum = 0.0;
  double max_speed_mismatch = 0.0;
  for (std::size_t k = 0; k < sol.steps(); ++k) {
    ortho_sum += std::abs(dot(sol.dy[k], sol.dx[k]));
    du_sq_sum += norm2(sol.du[k]);
    const Vec dw = sol.dy[k] - sol.dx[k];
    max_speed_mismatch = std::max(max_speed_mismatch, std::abs(norm(dw) - norm(sol.du[k])));
  }
  const double vu = variation(sol.u_path());
  const double vw = variation(sol.w_path());

  Report rep;
  rep.name = "normality";
  rep.pass = true;  // informational; refinement studies judge the decay
  rep.tolerance_used = 0.0;
  Report::Row row;
  row.label = "summary";
  row.values = {{"orthogonality_sum", ortho_sum},
                {"orthogonality_normalized", du_sq_sum > 0.0 ? ortho_sum / du_sq_sum : 0.0},
                {"max_speed_mismatch", max_speed_mismatch},
                {"variation_gap", std::abs(vw - vu)},
                {"variation_u", vu},
                {"variation_w", vw}};
  rep.rows.push_back(std::move(row));
  return rep;
}

}  // namespace ncplay
