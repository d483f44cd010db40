#include "ncplay/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ncplay/errors.hpp"

namespace ncplay {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string path_to_csv(const Path& p) {
  std::ostringstream out;
  out << "t";
  for (std::size_t i = 1; i <= p.dim(); ++i) out << ",v" << i;
  out << "\n";
  for (std::size_t k = 0; k < p.size(); ++k) {
    out << format_g17(p.time(k));
    for (std::size_t i = 0; i < p.dim(); ++i) out << "," << format_g17(p.value(k)[i]);
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigParseError("csv line " + std::to_string(line_no) + ": cannot parse number '" +
                           s + "'");
  }
}

}  // namespace

Path path_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  bool header_seen = false;
  std::vector<double> times;
  std::vector<Vec> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv_line(line);
    if (!header_seen) {
      if (fields.empty() || fields.front() != "t")
        throw ConfigParseError("path csv must start with header 't,v1,...'");
      dim = fields.size() - 1;
      if (dim == 0) throw ConfigParseError("path csv header has no value columns");
      header_seen = true;
      continue;
    }
    if (fields.size() != dim + 1)
      throw ConfigParseError("csv line " + std::to_string(line_no) + ": expected " +
                             std::to_string(dim + 1) + " fields, got " +
                             std::to_string(fields.size()));
    times.push_back(parse_double(fields[0], line_no));
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = parse_double(fields[i + 1], line_no);
    values.push_back(std::move(v));
  }
  if (times.size() < 2) throw ConfigParseError("path csv needs at least two samples");
  for (std::size_t k = 0; k + 1 < times.size(); ++k)
    if (!(times[k] < times[k + 1]))
      throw ConfigParseError("path csv times must strictly increase (row " +
                             std::to_string(k + 2) + ")");
  return Path(std::move(times), std::move(values));
}

Path load_path_csv(const std::string& filename) { return path_from_csv(read_text_file(filename)); }

std::string trajectory_to_csv(const PlaySolution& sol) {
  std::ostringstream out;
  const std::size_t d = sol.dim();
  out << "t";
  for (const char* name : {"u", "y", "x", "w"})
    for (std::size_t i = 1; i <= d; ++i) out << "," << name << i;
  out << "\n";
  for (std::size_t k = 0; k < sol.grid.size(); ++k) {
    out << format_g17(sol.grid[k]);
    for (const auto* comp : {&sol.u, &sol.y, &sol.x, &sol.w})
      for (std::size_t i = 0; i < d; ++i) out << "," << format_g17((*comp)[k][i]);
    out << "\n";
  }
  return out.str();
}

void write_text_file(const std::string& filename, const std::string& content) {
  std::ofstream out(filename, std::ios::binary);
  if (!out) throw Error("cannot open '" + filename + "' for writing");
  out << content;
  if (!out) throw Error("write to '" + filename + "' failed");
}

std::string read_text_file(const std::string& filename) {
  std::ifstream in(filename, std::ios::binary);
  if (!in) throw Error("cannot open '" + filename + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ncplay
