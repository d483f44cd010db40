#include "ncplay/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "ncplay/csv.hpp"
#include "ncplay/presets.hpp"

namespace ncplay {

namespace {

struct Section {
  std::string name;
  std::map<std::string, std::string> kv;
  std::size_t line;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<Section> parse_sections(const std::string& text) {
  std::vector<Section> sections;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line.substr(0, line.find('#')));
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigParseError("line " + std::to_string(line_no) + ": unterminated section");
      sections.push_back({trim(t.substr(1, t.size() - 2)), {}, line_no});
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigParseError("line " + std::to_string(line_no) + ": expected key = value");
    if (sections.empty())
      throw ConfigParseError("line " + std::to_string(line_no) + ": key outside any section");
    const std::string key = trim(t.substr(0, eq));
    if (sections.back().kv.count(key))
      throw ConfigParseError("line " + std::to_string(line_no) + ": duplicate key '" + key +
                             "' in section [" + sections.back().name + "]");
    sections.back().kv[key] = trim(t.substr(eq + 1));
  }
  return sections;
}

class SectionReader {
 public:
  SectionReader(const Section& s) : s_(s) {}

  bool has(const std::string& key) const { return s_.kv.count(key) > 0; }

  std::string require(const std::string& key) const {
    const auto it = s_.kv.find(key);
    if (it == s_.kv.end())
      throw ConfigParseError("section [" + s_.name + "]: missing key '" + key + "'");
    return it->second;
  }

  std::string get(const std::string& key, const std::string& fallback) const {
    const auto it = s_.kv.find(key);
    return it == s_.kv.end() ? fallback : it->second;
  }

  double real(const std::string& key) const { return to_real(key, require(key)); }
  double real(const std::string& key, double fallback) const {
    return has(key) ? real(key) : fallback;
  }

  int integer(const std::string& key) const {
    const double v = real(key);
    if (v != std::floor(v))
      throw ConfigParseError("section [" + s_.name + "]: key '" + key + "' must be an integer");
    return static_cast<int>(v);
  }
  int integer(const std::string& key, int fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  std::vector<double> reals(const std::string& key) const {
    std::istringstream in(require(key));
    std::vector<double> out;
    std::string tok;
    while (in >> tok) out.push_back(to_real(key, tok));
    if (out.empty())
      throw ConfigParseError("section [" + s_.name + "]: key '" + key + "' has no numbers");
    return out;
  }

  Vec vec(const std::string& key) const { return Vec(reals(key)); }

  const std::string& name() const { return s_.name; }
  const std::map<std::string, std::string>& kv() const { return s_.kv; }

 private:
  double to_real(const std::string& key, const std::string& tok) const {
    try {
      std::size_t pos = 0;
      const double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ConfigParseError("section [" + s_.name + "]: key '" + key +
                             "': cannot parse number '" + tok + "'");
    }
  }

  const Section& s_;
};

SetSpec parse_convex_member(const SectionReader& r) {
  const std::string variant = r.require("variant");
  if (variant == "ball") return SetSpec::ball(r.vec("center"), r.real("radius"));
  if (variant == "box") return SetSpec::box(r.vec("lo"), r.vec("hi"));
  if (variant == "halfspace") return SetSpec::halfspace(r.vec("normal"), r.real("offset"));
  throw ConfigParseError("section [" + r.name() + "]: union members must be convex (got '" +
                         variant + "')");
}

SetSpec parse_set(const SectionReader& r, const std::vector<Section>& members) {
  const std::string variant = r.require("variant");
  if (variant == "ball") return SetSpec::ball(r.vec("center"), r.real("radius"));
  if (variant == "box") return SetSpec::box(r.vec("lo"), r.vec("hi"));
  if (variant == "halfspace") return SetSpec::halfspace(r.vec("normal"), r.real("offset"));
  if (variant == "complement_of_ball")
    return SetSpec::complement_of_ball(r.vec("center"), r.real("radius"));
  if (variant == "union") {
    std::vector<SetSpec> parts;
    for (const auto& m : members) parts.push_back(parse_convex_member(SectionReader(m)));
    if (parts.size() < 2)
      throw ConfigParseError("section [set]: union needs at least two [member] sections");
    return SetSpec::union_of(std::move(parts), r.real("gap"));
  }
  throw ConfigParseError("section [set]: unknown variant '" + variant + "'");
}

Path parse_input(const SectionReader& r, const std::string& base_dir) {
  if (r.has("file")) {
    const std::filesystem::path p(r.require("file"));
    return load_path_csv(p.is_absolute() ? p.string()
                                         : (std::filesystem::path(base_dir) / p).string());
  }
  if (r.has("inline_times")) {
    const std::vector<double> times = r.reals("inline_times");
    const std::vector<double> flat = r.reals("inline_values");
    if (flat.size() % times.size() != 0)
      throw ConfigParseError(
          "section [input]: inline_values length must be a multiple of inline_times length");
    const std::size_t d = flat.size() / times.size();
    std::vector<Vec> values;
    values.reserve(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
      Vec v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = flat[k * d + i];
      values.push_back(std::move(v));
    }
    return Path(times, std::move(values));
  }
  const std::string preset = r.require("preset");
  const double T = r.real("T", 1.0);
  const int samples = r.integer("samples", 65);
  if (preset == "ramp") return preset_ramp(T, samples);
  if (preset == "zigzag")
    return preset_zigzag(T, r.real("amplitude", 1.0), r.integer("legs", 4), samples);
  if (preset == "circle_arc") {
    Vec center = r.has("center") ? r.vec("center") : Vec{0.0, 0.0};
    return preset_circle_arc(T, r.real("radius", 1.0), r.real("angle0", 0.0),
                             r.real("angle1", 3.141592653589793), samples, std::move(center));
  }
  if (preset == "lissajous")
    return preset_lissajous(T, r.real("ax", 1.0), r.real("ay", 1.0), r.integer("fx", 1),
                            r.integer("fy", 2), r.real("phase", 0.0), samples);
  throw ConfigParseError("section [input]: unknown preset '" + preset + "'");
}

}  // namespace

std::string ExperimentConfig::get(const std::string& key, const std::string& fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double ExperimentConfig::get_real(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw ConfigParseError("experiment '" + label + "': key '" + key +
                           "': cannot parse number '" + it->second + "'");
  }
}

int ExperimentConfig::get_int(const std::string& key, int fallback) const {
  const double v = get_real(key, static_cast<double>(fallback));
  if (v != std::floor(v))
    throw ConfigParseError("experiment '" + label + "': key '" + key + "' must be an integer");
  return static_cast<int>(v);
}

Scenario parse_scenario(const std::string& text, const std::string& base_dir) {
  const std::vector<Section> sections = parse_sections(text);

  const Section* scenario_sec = nullptr;
  const Section* set_sec = nullptr;
  const Section* input_sec = nullptr;
  const Section* solver_sec = nullptr;
  std::vector<Section> members;
  std::vector<Section> experiments;
  for (const auto& s : sections) {
    if (s.name == "scenario") scenario_sec = &s;
    else if (s.name == "set") set_sec = &s;
    else if (s.name == "member") members.push_back(s);
    else if (s.name == "input") input_sec = &s;
    else if (s.name == "solver") solver_sec = &s;
    else if (s.name == "experiment") experiments.push_back(s);
    else throw ConfigParseError("unknown section [" + s.name + "]");
  }
  if (!scenario_sec) throw ConfigParseError("missing section [scenario]");
  if (!set_sec) throw ConfigParseError("missing section [set]");
  if (!input_sec) throw ConfigParseError("missing section [input]");

  const SectionReader scen(*scenario_sec);
  const SectionReader input(*input_sec);

  SetSpec set = parse_set(SectionReader(*set_sec), members);
  Path u = parse_input(input, base_dir);
  Vec z0 = input.vec("z0");

  if (set.dim() != u.dim())
    throw ConfigParseError("section [input]: input dimension " + std::to_string(u.dim()) +
                           " does not match set dimension " + std::to_string(set.dim()));
  if (z0.dim() != set.dim())
    throw ConfigParseError("section [input]: key 'z0' has dimension " +
                           std::to_string(z0.dim()) + ", expected " +
                           std::to_string(set.dim()));
  if (!contains(set, z0))
    throw InitialConditionViolation(
        "section [input]: z0 violates the initial-condition constraint u(0) - y(0) = z0 "
        "with z0 in the constraint set (distance " +
        std::to_string(distance(set, z0)) + ")");

  SolverOptions opts;
  if (solver_sec) {
    const SectionReader solver(*solver_sec);
    opts.step_fraction = solver.real("step_fraction", opts.step_fraction);
    const double mp = solver.real("max_points", static_cast<double>(opts.max_points));
    if (!(mp >= 2.0)) throw ConfigParseError("section [solver]: max_points must be >= 2");
    opts.max_points = static_cast<std::size_t>(mp);
    opts.residual_targets = solver.integer("residual_targets", opts.residual_targets);
  }

  Scenario sc{scen.require("name"), scen.get("output_dir", "."), std::move(set), std::move(u),
              std::move(z0),        opts,
              {}};
  int ordinal = 0;
  for (const auto& e : experiments) {
    ++ordinal;
    const SectionReader er(e);
    ExperimentConfig cfg;
    cfg.kind = er.require("kind");
    cfg.label = er.get("label", cfg.kind + "_" + std::to_string(ordinal));
    cfg.seed = static_cast<std::uint64_t>(er.real("seed", 1.0));
    for (const auto& [k, v] : er.kv())
      if (k != "kind" && k != "label" && k != "seed") cfg.params[k] = v;
    sc.experiments.push_back(std::move(cfg));
  }
  return sc;
}

Scenario load_scenario(const std::string& filename) {
  const std::filesystem::path p(filename);
  return parse_scenario(read_text_file(filename), p.parent_path().string().empty()
                                                      ? "."
                                                      : p.parent_path().string());
}

}  // namespace ncplay
