#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ncplay/play.hpp"
#include "ncplay/report.hpp"
#include "ncplay/scenario.hpp"

namespace ncplay {

struct RunOverrides {
  std::optional<std::string> output_dir;
  std::optional<int> levels;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  ExecPolicy policy = ExecPolicy::Parallel;
};

/// Exit codes shared by the CLI: 0 all experiments pass, 1 operational
/// error, 2 at least one experiment failed.
inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitExperimentFailed = 2;

/// Solves the scenario, writes `<name>_trajectory.csv` and per-experiment
/// `<name>_<label>_report.{txt,csv}` under the output directory.
int run_scenario_file(const std::string& filename, const RunOverrides& ov, std::ostream& log);

/// Parses and validates without solving; prints derived quantities.
int validate_scenario_file(const std::string& filename, const RunOverrides& ov,
                           std::ostream& log);

/// Prints the set variants with their parameters and prox-radius formulas.
int print_catalog(std::ostream& out);

/// Runs one configured experiment against a solved scenario (exposed for the
/// test suites).
Report run_experiment(const Scenario& sc, const ExperimentConfig& cfg,
                      const PlaySolution& base, const RunOverrides& ov);

/// Copy of the solution with node y[k] shifted by delta along the first
/// coordinate and the dependent quantities recomputed; used by the
/// residual-detection fixtures.
PlaySolution with_corrupted_node(PlaySolution sol, std::size_t node, double delta);

}  // namespace ncplay
