#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncplay/geometry.hpp"
#include "ncplay/path.hpp"
#include "ncplay/play.hpp"

namespace ncplay {

struct ExperimentConfig {
  std::string kind;
  std::string label;
  std::uint64_t seed = 1;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_real(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
};

/// One solvable configuration: constraint set, input path, initial state,
/// solver options and a list of experiments.
struct Scenario {
  std::string name;
  std::string output_dir = ".";
  SetSpec set;
  Path input;
  Vec z0;
  SolverOptions solver;
  std::vector<ExperimentConfig> experiments;
};

/// Parses the flat sections + key=value scenario format. Errors name the
/// offending section and key. The initial state is checked against the set.
Scenario parse_scenario(const std::string& text, const std::string& base_dir = ".");
Scenario load_scenario(const std::string& filename);

}  // namespace ncplay
