#include "ncplay/propcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ncplay/residuals.hpp"

namespace ncplay {

namespace {

/// Runs one job per index, possibly in parallel; results land by index, so
/// the outcome does not depend on scheduling. Exceptions are captured and
/// rethrown after the loop.
template <typename Job>
void run_rows(int count, ExecPolicy policy, Job&& job) {
  std::exception_ptr err;
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
      try {
        job(i);
      } catch (...) {
#pragma omp critical(ncplay_rows_err)
        if (!err) err = std::current_exception();
      }
    }
  } else {
    for (int i = 0; i < count; ++i) job(i);  // first failure throws directly
  }
  if (err) std::rethrow_exception(err);
}

/// Average decay factor across consecutive levels, in [1.4, 2.6], or all
/// values numerically zero.
bool decays_like_first_order(const std::vector<double>& vals, double zero_floor) {
  bool all_zero = true;
  for (double v : vals)
    if (v > zero_floor) all_zero = false;
  if (all_zero) return true;
  double log_sum = 0.0;
  int n = 0;
  for (std::size_t j = 0; j + 1 < vals.size(); ++j) {
    if (vals[j + 1] <= zero_floor) return vals[j] <= zero_floor;  // vanished mid-way
    log_sum += std::log2(vals[j] / vals[j + 1]);
    ++n;
  }
  if (n == 0) return false;
  const double mean_ratio = std::exp2(log_sum / n);
  return mean_ratio >= 1.4 && mean_ratio <= 2.6;
}

}  // namespace

Report check_rate_independence(const SetSpec& set, const Path& u, const Vec& z0,
                               const TimeChange& phi, const SolverOptions& opts, int levels,
                               double tol, ExecPolicy policy) {
  if (levels < 0) throw Error("levels must be >= 0");
  const int rows = levels + 1;
  std::vector<double> errors(rows, 0.0);

  run_rows(rows, policy, [&](int j) {
    const Path uj = refine(u, j);
    const TimeChange phij(refine(phi.path(), j));
    const Path u_composed = compose_time_change(uj, phij);
    const Path left = solve_play(set, u_composed, z0, opts).y_path();
    const Path right = compose_time_change(solve_play(set, uj, z0, opts).y_path(), phij);
    errors[static_cast<std::size_t>(j)] = sup_distance(left, right);
  });

  Report rep;
  rep.name = "rate_independence";
  rep.tolerance_used = tol;
  for (int j = 0; j < rows; ++j) {
    Report::Row row;
    row.label = "level_" + std::to_string(j);
    row.values = {{"sup_error", errors[static_cast<std::size_t>(j)]}};
    rep.rows.push_back(std::move(row));
  }
  bool monotone = true;
  for (std::size_t j = 0; j + 1 < errors.size(); ++j)
    if (errors[j + 1] > errors[j]) monotone = false;
  rep.pass = errors.back() <= tol || monotone;
  return rep;
}

Report check_normality(const SetSpec& set, const Path& u, const Vec& z0, int levels,
                       const SolverOptions& opts, ExecPolicy policy) {
  if (levels < 2) throw Error("check_normality needs at least 2 levels");
  std::vector<double> ortho(levels), vgap(levels);

  run_rows(levels, policy, [&](int j) {
    const PlaySolution sol = solve_play(set, refine(u, j), z0, opts);
    const Report nr = normality_report(sol);
    ortho[static_cast<std::size_t>(j)] = nr.rows.front().get("orthogonality_normalized");
    vgap[static_cast<std::size_t>(j)] = nr.rows.front().get("variation_gap");
  });

  Report rep;
  rep.name = "normality_refinement";
  rep.tolerance_used = 1e-12;
  for (int j = 0; j < levels; ++j) {
    Report::Row row;
    row.label = "level_" + std::to_string(j);
    row.values = {{"orthogonality_normalized", ortho[static_cast<std::size_t>(j)]},
                  {"variation_gap", vgap[static_cast<std::size_t>(j)]}};
    rep.rows.push_back(std::move(row));
  }
  rep.pass = decays_like_first_order(ortho, rep.tolerance_used) &&
             decays_like_first_order(vgap, rep.tolerance_used);
  return rep;
}

Report continuity_experiment(const SetSpec& set, const Path& u, const Vec& z0,
                             OutputMetric mode, int n_terms, const Path& perturbation,
                             const std::vector<Vec>& z0_seq, const SolverOptions& opts,
                             double grid_tol, double tolerance, ExecPolicy policy) {
  if (n_terms < 1) throw Error("continuity_experiment needs n_terms >= 1");
  if (perturbation.dim() != u.dim() || perturbation.duration() != u.duration())
    throw DimensionMismatch("perturbation must share the input's interval and dimension");
  if (z0_seq.size() < static_cast<std::size_t>(n_terms))
    throw Error("z0_seq must provide one initial state per term");

  // Common fine grid from the adaptive rule applied to the base input. The
  // perturbation's breakpoints join the grid so the reference and every
  // perturbed solve discretize identically.
  const PlaySolution base_adaptive = solve_adaptive(set, u, z0, grid_tol, opts);
  const int base_levels = static_cast<int>(base_adaptive.diagnostic("levels", 0.0));
  const double grid_gap = base_adaptive.diagnostic("cauchy_gap", 0.0);
  const std::vector<double> common_grid =
      union_grid(refine(u, base_levels), refine(perturbation, base_levels));
  const Path u_fine = resample(refine(u, base_levels), common_grid);
  const Path pert_fine = resample(refine(perturbation, base_levels), common_grid);

  const Path y = solve_play(set, u_fine, z0, opts).y_path();

  auto metric = [mode](const Path& f, const Path& g) {
    return mode == OutputMetric::BV ? bv_distance(f, g) : strict_distance(f, g);
  };

  std::vector<double> in_dist(n_terms), out_dist(n_terms);
  run_rows(n_terms, policy, [&](int i) {
    const int n = i + 1;
    const Vec& z0n = z0_seq[static_cast<std::size_t>(i)];
    if (!contains(set, z0n))
      throw InadmissiblePerturbation("z0_seq[" + std::to_string(n) +
                                     "] lies outside the constraint set");
    // u_n = u + (1/n) * perturbation, nodewise on the shared grid.
    const double s = 1.0 / static_cast<double>(n);
    std::vector<Vec> vals;
    vals.reserve(u_fine.size());
    for (std::size_t k = 0; k < u_fine.size(); ++k)
      vals.push_back(u_fine.value(k) + s * pert_fine.value(k));
    const Path un(u_fine.times(), std::move(vals));
    try {
      const Path yn = solve_play(set, un, z0n, opts).y_path();
      in_dist[static_cast<std::size_t>(i)] = metric(un, u_fine) + distance(z0n, z0);
      out_dist[static_cast<std::size_t>(i)] = metric(yn, y);
    } catch (const OutsideProxNeighborhood& e) {
      throw InadmissiblePerturbation("term " + std::to_string(n) + ": " + e.what());
    } catch (const AmbiguousProjection& e) {
      throw InadmissiblePerturbation("term " + std::to_string(n) + ": " + e.what());
    } catch (const StepTooLarge& e) {
      throw InadmissiblePerturbation("term " + std::to_string(n) + ": " + e.what());
    }
  });

  Report rep;
  rep.name = mode == OutputMetric::BV ? "continuity_bv" : "continuity_strict";
  rep.tolerance_used = tolerance;
  for (int i = 0; i < n_terms; ++i) {
    Report::Row row;
    row.label = "n_" + std::to_string(i + 1);
    row.values = {{"input_distance", in_dist[static_cast<std::size_t>(i)]},
                  {"output_distance", out_dist[static_cast<std::size_t>(i)]}};
    rep.rows.push_back(std::move(row));
  }
  Report::Row grid_row;
  grid_row.label = "grid";
  grid_row.values = {{"levels", static_cast<double>(base_levels)}, {"cauchy_gap", grid_gap}};
  rep.rows.push_back(std::move(grid_row));

  bool decreasing = true;
  for (int i = 0; i + 1 < n_terms; ++i)
    if (out_dist[static_cast<std::size_t>(i + 1)] >
        1.05 * out_dist[static_cast<std::size_t>(i)])
      decreasing = false;
  const bool floor_ok =
      out_dist[static_cast<std::size_t>(n_terms - 1)] <=
      tolerance * (in_dist[static_cast<std::size_t>(n_terms - 1)] + grid_gap);
  rep.pass = decreasing && floor_ok;
  return rep;
}

Report convergence_order(const SetSpec& set, const Path& u, const Vec& z0, int levels,
                         const SolverOptions& opts, ExecPolicy policy) {
  if (levels < 3) throw Error("convergence_order needs at least 3 levels");
  std::vector<Path> solutions;
  solutions.reserve(static_cast<std::size_t>(levels));
  {
    std::vector<PlaySolution> sols(static_cast<std::size_t>(levels),
                                   solve_play(set, u, z0, opts));
    run_rows(levels, policy, [&](int j) {
      if (j > 0) sols[static_cast<std::size_t>(j)] = solve_play(set, refine(u, j), z0, opts);
    });
    for (auto& s : sols) solutions.push_back(s.y_path());
  }
  const Path& finest = solutions.back();
  std::vector<double> errors;
  for (int j = 0; j + 1 < levels; ++j)
    errors.push_back(sup_distance(solutions[static_cast<std::size_t>(j)], finest));

  Report rep;
  rep.name = "convergence_order";
  rep.pass = true;  // informational
  rep.tolerance_used = 0.0;
  for (std::size_t j = 0; j < errors.size(); ++j) {
    Report::Row row;
    row.label = "level_" + std::to_string(j);
    row.values = {{"sup_error_vs_finest", errors[j]}};
    if (j + 1 < errors.size() && errors[j] > 0.0 && errors[j + 1] > 0.0)
      row.values.emplace_back("richardson_p", std::log2(errors[j] / errors[j + 1]));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace ncplay
