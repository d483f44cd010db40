#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncplay/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Non-convex play operator solver and property experiment harness"};
  app.require_subcommand(1);

  std::string scenario_file;
  ncplay::RunOverrides ov;
  std::string output_dir;
  int levels = -1;
  long long seed = -1;
  bool quiet = false;
  bool serial = false;

  const auto add_common = [&](CLI::App* cmd, bool wants_file) {
    if (wants_file)
      cmd->add_option("file", scenario_file, "scenario file")->required();
    cmd->add_option("--output-dir", output_dir, "override the scenario's output directory");
    cmd->add_option("--levels", levels, "override experiment refinement levels");
    cmd->add_option("--seed", seed, "override all experiment seeds");
    cmd->add_flag("--quiet", quiet, "suppress progress output");
    cmd->add_flag("--serial", serial, "run the data-parallel kernels serially");
  };

  CLI::App* run = app.add_subcommand("run", "solve a scenario and run its experiments");
  add_common(run, true);
  CLI::App* validate = app.add_subcommand("validate", "parse and validate without solving");
  add_common(validate, true);
  CLI::App* catalog =
      app.add_subcommand("catalog", "list the constraint-set variants and their prox radii");

  CLI11_PARSE(app, argc, argv);

  if (!output_dir.empty()) ov.output_dir = output_dir;
  if (levels >= 0) ov.levels = levels;
  if (seed >= 0) ov.seed = static_cast<std::uint64_t>(seed);
  ov.quiet = quiet;
  ov.policy = serial ? ncplay::ExecPolicy::Serial : ncplay::ExecPolicy::Parallel;

  if (run->parsed()) return ncplay::run_scenario_file(scenario_file, ov, std::cout);
  if (validate->parsed()) return ncplay::validate_scenario_file(scenario_file, ov, std::cout);
  if (catalog->parsed()) return ncplay::print_catalog(std::cout);
  return ncplay::kExitError;
}
