#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ncplay {

/// Structured result of a property experiment or verifier. Rows keep metric
/// insertion order so serialized reports are byte-stable.
struct Report {
  struct Row {
    std::string label;
    std::vector<std::pair<std::string, double>> values;

    double get(const std::string& key) const;
    bool has(const std::string& key) const;
  };

  std::string name;
  std::vector<Row> rows;
  bool pass = false;
  double tolerance_used = 0.0;

  const Row* find(const std::string& label) const;
};

/// Execution policy for the data-parallel kernels (residual evaluators,
/// sampling verifiers, experiment rows). Serial is the reference
/// implementation; Parallel uses OpenMP and must produce identical results.
enum class ExecPolicy { Serial, Parallel };

std::string report_to_text(const Report& r);
/// CSV with columns: label, metric, value.
std::string report_to_csv(const Report& r);

}  // namespace ncplay
