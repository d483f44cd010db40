#pragma once

#include <cstdint>

#include "ncplay/play.hpp"
#include "ncplay/report.hpp"

namespace ncplay {

/// Worst positive part over steps k (with dy_k != 0) and sampled members z of
///   <z - x_{k+1}, dy_k> - |dy_k| / (2 r) |z - x_{k+1}|^2,
/// the discrete form of the solution's variational inequality. Sampling mixes
/// members near the iterate with the catalog's analytically extreme points;
/// with r infinite the quadratic term vanishes. Deterministic in the seed
/// regardless of the execution policy.
double vi_residual(const PlaySolution& sol, std::uint64_t sampler_seed,
                   ExecPolicy policy = ExecPolicy::Parallel);

/// Max re-projection displacement |Proj_Z(x_{k+1} + rho * dy_k/|dy_k|) - x_{k+1}|
/// over steps with dy_k != 0, where rho = probe_fraction * prox_radius for
/// non-convex sets and probe_fraction * |dy_k| * 10 for convex ones. A value
/// below 1e-9 certifies the discrete normal-cone inclusion dy_k in N_Z(x_{k+1}).
double inclusion_residual(const PlaySolution& sol, double probe_fraction,
                          ExecPolicy policy = ExecPolicy::Parallel);

/// Discrete normality diagnostics: the orthogonality defect
/// sum_k |<dy_k, dx_k>| (also normalized by sum |du_k|^2), the worst per-step
/// speed mismatch | |dw_k| - |du_k| |, and |V(w) - V(u)|. These are O(h)
/// quantities recorded for refinement studies, not zeros.
Report normality_report(const PlaySolution& sol);

}  // namespace ncplay
