#pragma once

#include <vector>

#include "ncplay/bvcalc.hpp"
#include "ncplay/play.hpp"
#include "ncplay/report.hpp"

namespace ncplay {

enum class OutputMetric { BV, Strict };

/// Compares Pl(u o phi) against Pl(u) o phi in the sup norm at the base grid
/// and `levels` refinement levels (input and time change refined together).
/// Pass iff the finest error is below tol (value-sequence-preserving time
/// changes reproduce the increment sequence exactly) or the error shrinks
/// monotonically across levels.
Report check_rate_independence(const SetSpec& set, const Path& u, const Vec& z0,
                               const TimeChange& phi, const SolverOptions& opts = {},
                               int levels = 3, double tol = 1e-6,
                               ExecPolicy policy = ExecPolicy::Parallel);

/// Records the discrete normality defects (orthogonality sum normalized by
/// sum |du|^2 and |V(w) - V(u)|) across refinement levels. Pass iff both
/// decay by an average factor in [1.4, 2.6] per level, or are identically
/// zero (exact cases).
Report check_normality(const SetSpec& set, const Path& u, const Vec& z0, int levels,
                       const SolverOptions& opts = {},
                       ExecPolicy policy = ExecPolicy::Parallel);

/// Solves u_n = u + (1/n) * perturbation with initial states z0_seq[n-1] on a
/// common fine grid and tabulates input vs output distance in the chosen
/// metric. Pass iff the output column decreases (5% noise allowed) and the
/// final output distance is at most tolerance * (final input distance +
/// achieved grid gap). Throws InadmissiblePerturbation if some u_n cannot be
/// solved.
Report continuity_experiment(const SetSpec& set, const Path& u, const Vec& z0,
                             OutputMetric mode, int n_terms, const Path& perturbation,
                             const std::vector<Vec>& z0_seq, const SolverOptions& opts = {},
                             double grid_tol = 1e-3, double tolerance = 10.0,
                             ExecPolicy policy = ExecPolicy::Parallel);

/// Empirical order of the catching-up scheme: errors against the finest level
/// and the Richardson exponents p_j = log2(e_j / e_{j+1}). Informational.
Report convergence_order(const SetSpec& set, const Path& u, const Vec& z0, int levels,
                         const SolverOptions& opts = {},
                         ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace ncplay
