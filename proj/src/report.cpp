#include "ncplay/report.hpp"

#include <sstream>

#include "ncplay/csv.hpp"

namespace ncplay {

double Report::Row::get(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  return 0.0;
}

bool Report::Row::has(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return true;
  return false;
}

const Report::Row* Report::find(const std::string& label) const {
  for (const auto& row : rows)
    if (row.label == label) return &row;
  return nullptr;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "report: " << r.name << "\n";
  out << "pass: " << (r.pass ? "true" : "false") << "\n";
  out << "tolerance: " << format_g17(r.tolerance_used) << "\n";
  for (const auto& row : r.rows) {
    out << "[" << row.label << "]\n";
    for (const auto& [k, v] : row.values) out << "  " << k << " = " << format_g17(v) << "\n";
  }
  return out.str();
}

std::string report_to_csv(const Report& r) {
  std::ostringstream out;
  out << "label,metric,value\n";
  for (const auto& row : r.rows)
    for (const auto& [k, v] : row.values)
      out << row.label << "," << k << "," << format_g17(v) << "\n";
  return out.str();
}

}  // namespace ncplay
