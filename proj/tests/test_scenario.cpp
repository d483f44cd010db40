#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "ncplay/bvcalc.hpp"
#include "ncplay/csv.hpp"
#include "ncplay/presets.hpp"
#include "ncplay/runner.hpp"
#include "ncplay/rng.hpp"

using namespace ncplay;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() / ("ncplay_test_" + tag);
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& leaf) const { return (path / leaf).string(); }
};

const char* kScalarScenario = R"(# scalar closed form
[scenario]
name = box_scalar
output_dir = {OUT}

[set]
variant = box
lo = -1
hi = 1

[input]
preset = ramp
T = 2
samples = 33
z0 = 0

[experiment]
kind = rate_independence
phi = id
seed = 1

[experiment]
kind = residuals
tol = 1e-9
seed = 2
)";

std::string with_output_dir(const std::string& tmpl, const std::string& dir) {
  std::string out = tmpl;
  const auto pos = out.find("{OUT}");
  if (pos != std::string::npos) out.replace(pos, 5, dir);
  return out;
}

}  // namespace

TEST_CASE("scenario parsing and defaults") {
  const Scenario sc = parse_scenario(with_output_dir(kScalarScenario, "/tmp/x"));
  CHECK(sc.name == "box_scalar");
  CHECK(sc.set.variant_name() == "Box");
  CHECK(sc.input.size() == 33);
  CHECK(sc.z0.dim() == 1);
  CHECK(sc.solver.step_fraction == 0.25);
  REQUIRE(sc.experiments.size() == 2);
  CHECK(sc.experiments[0].kind == "rate_independence");
  CHECK(sc.experiments[0].label == "rate_independence_1");
  CHECK(sc.experiments[1].seed == 2);
}

TEST_CASE("scenario errors name the offending key") {
  CHECK_THROWS_WITH_AS(parse_scenario("[scenario]\nname = x\n[set]\nvariant = box\nlo = -1\n"
                                      "[input]\npreset = ramp\nz0 = 0\n"),
                       doctest::Contains("'hi'"), ConfigParseError);
  // Missing z0.
  CHECK_THROWS_WITH_AS(parse_scenario("[scenario]\nname = x\n[set]\nvariant = box\nlo = -1\n"
                                      "hi = 1\n[input]\npreset = ramp\n"),
                       doctest::Contains("'z0'"), ConfigParseError);
  // z0 outside the set.
  CHECK_THROWS_AS(parse_scenario("[scenario]\nname = x\n[set]\nvariant = box\nlo = -1\n"
                                 "hi = 1\n[input]\npreset = ramp\nz0 = 3\n"),
                  InitialConditionViolation);
  // Union members closer than the declared gap.
  CHECK_THROWS_WITH_AS(
      parse_scenario("[scenario]\nname = x\n[set]\nvariant = union\ngap = 2\n"
                     "[member]\nvariant = ball\ncenter = -1 0\nradius = 1\n"
                     "[member]\nvariant = ball\ncenter = 1.5 0\nradius = 1\n"
                     "[input]\npreset = ramp\nz0 = 0 0\n"),
      doctest::Contains("members 0 and 1"), Error);
}

TEST_CASE("inline and file inputs") {
  const Scenario sc = parse_scenario(
      "[scenario]\nname = inline\n[set]\nvariant = ball\ncenter = 0 0\nradius = 1\n"
      "[input]\ninline_times = 0 0.5 1\ninline_values = 0 0 0.1 0.2 0.3 0.1\nz0 = 0.5 0\n");
  CHECK(sc.input.size() == 3);
  CHECK(sc.input.dim() == 2);
  CHECK(sc.input.value(1)[0] == 0.1);
  CHECK(sc.input.value(2)[1] == 0.1);

  TempDir tmp("file_input");
  const Path zig = preset_zigzag(1.0, 0.4, 3, 13);
  write_text_file(tmp.file("input.csv"), path_to_csv(zig));
  const Scenario sc2 = parse_scenario(
      "[scenario]\nname = file\n[set]\nvariant = box\nlo = -1\nhi = 1\n"
      "[input]\nfile = input.csv\nz0 = 0\n",
      tmp.path.string());
  CHECK(sc2.input.size() == zig.size());
  CHECK(sup_distance(sc2.input, zig) == 0.0);
}

TEST_CASE("path csv round trip is exact") {
  Rng rng(8, 8);
  std::vector<double> times{0.0, 0.1234567890123456, 0.5, 1.0 / 3.0 + 0.5, 1.0};
  std::vector<Vec> values;
  for (std::size_t k = 0; k < times.size(); ++k)
    values.push_back(Vec{rng.uniform(-1.0, 1.0), rng.normal()});
  const Path p(times, values);
  const Path q = path_from_csv(path_to_csv(p));
  REQUIRE(q.size() == p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    CHECK(q.time(k) == p.time(k));
    CHECK(q.value(k) == p.value(k));
  }
}

TEST_CASE("run writes trajectory and reports with exit code zero") {
  TempDir tmp("run_ok");
  const std::string file = tmp.file("scenario.cfg");
  write_text_file(file, with_output_dir(kScalarScenario, tmp.path.string()));
  std::ostringstream log;
  RunOverrides ov;
  CHECK(run_scenario_file(file, ov, log) == kExitPass);
  CHECK(std::filesystem::exists(tmp.file("box_scalar_trajectory.csv")));
  CHECK(std::filesystem::exists(tmp.file("box_scalar_rate_independence_1_report.txt")));
  CHECK(std::filesystem::exists(tmp.file("box_scalar_residuals_2_report.csv")));

  // Trajectory header matches the documented schema.
  const std::string traj = read_text_file(tmp.file("box_scalar_trajectory.csv"));
  CHECK(traj.rfind("t,u1,y1,x1,w1\n", 0) == 0);
}

TEST_CASE("run is byte-reproducible") {
  TempDir tmp_a("repro_a");
  TempDir tmp_b("repro_b");
  const std::string file = tmp_a.file("scenario.cfg");
  write_text_file(file, with_output_dir(kScalarScenario, tmp_a.path.string()));
  std::ostringstream log;
  RunOverrides ov;
  ov.quiet = true;
  REQUIRE(run_scenario_file(file, ov, log) == kExitPass);
  const std::string first = read_text_file(tmp_a.file("box_scalar_trajectory.csv"));
  const std::string first_rep = read_text_file(tmp_a.file("box_scalar_residuals_2_report.csv"));
  ov.output_dir = tmp_b.path.string();
  REQUIRE(run_scenario_file(file, ov, log) == kExitPass);
  CHECK(read_text_file(tmp_b.file("box_scalar_trajectory.csv")) == first);
  CHECK(read_text_file(tmp_b.file("box_scalar_residuals_2_report.csv")) == first_rep);
}

TEST_CASE("corrupted residual experiment fails with exit code two") {
  TempDir tmp("run_fail");
  const std::string file = tmp.file("scenario.cfg");
  write_text_file(file, with_output_dir(R"([scenario]
name = corrupted
output_dir = {OUT}
[set]
variant = box
lo = -1
hi = 1
[input]
preset = ramp
T = 2
samples = 33
z0 = 0
[experiment]
kind = residuals
corrupt_node = 8
corrupt_delta = 0.1
seed = 3
)",
                                        tmp.path.string()));
  std::ostringstream log;
  RunOverrides ov;
  ov.quiet = true;
  CHECK(run_scenario_file(file, ov, log) == kExitExperimentFailed);
}

TEST_CASE("operational errors exit with code one and cite the constraint") {
  TempDir tmp("run_err");
  const std::string file = tmp.file("scenario.cfg");
  write_text_file(file, "[scenario]\nname = bad\n[set]\nvariant = box\nlo = -1\nhi = 1\n"
                        "[input]\npreset = ramp\nT = 2\nz0 = 7\n");
  std::ostringstream log;
  RunOverrides ov;
  CHECK(run_scenario_file(file, ov, log) == kExitError);
  CHECK(log.str().find("u(0) - y(0) = z0") != std::string::npos);
  CHECK(run_scenario_file(tmp.file("missing.cfg"), ov, log) == kExitError);
}

TEST_CASE("validate prints derived quantities without solving") {
  TempDir tmp("validate");
  const std::string file = tmp.file("scenario.cfg");
  write_text_file(file, with_output_dir(kScalarScenario, tmp.path.string()));
  std::ostringstream log;
  RunOverrides ov;
  CHECK(validate_scenario_file(file, ov, log) == kExitPass);
  const std::string text = log.str();
  CHECK(text.find("prox_radius = infinity") != std::string::npos);
  CHECK(text.find("V(u) = 2") != std::string::npos);
  CHECK(text.find("experiments: 2") != std::string::npos);

  // A union whose members sit closer than the declared gap fails validation
  // naming the pair.
  const std::string bad = tmp.file("bad_union.cfg");
  write_text_file(bad,
                  "[scenario]\nname = bad\n[set]\nvariant = union\ngap = 2\n"
                  "[member]\nvariant = ball\ncenter = -1 0\nradius = 1\n"
                  "[member]\nvariant = ball\ncenter = 1.5 0\nradius = 1\n"
                  "[input]\npreset = ramp\nz0 = 0 0\n");
  std::ostringstream log2;
  CHECK(validate_scenario_file(bad, ov, log2) == kExitError);
  CHECK(log2.str().find("members 0 and 1") != std::string::npos);
}

TEST_CASE("catalog output is stable and names the prox radii") {
  std::ostringstream a, b;
  CHECK(print_catalog(a) == kExitPass);
  CHECK(print_catalog(b) == kExitPass);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("ComplementOfBall: prox_radius = radius") != std::string::npos);
  CHECK(a.str().find("Union") != std::string::npos);
  // Five variants, one line each.
  int lines = 0;
  for (char c : a.str())
    if (c == '\n') ++lines;
  CHECK(lines == 5);
}

TEST_CASE("runner covers the remaining experiment kinds and overrides") {
  TempDir tmp("kinds");
  const std::string file = tmp.file("scenario.cfg");
  write_text_file(file, with_output_dir(R"([scenario]
name = kinds
output_dir = {OUT}
[set]
variant = complement_of_ball
center = 0 0
radius = 1
[input]
inline_times = 0 0.5 1
inline_values = 0 0 -0.4 0.3 -0.8 0.6
z0 = 1 0
[experiment]
kind = normality
levels = 3
seed = 1
[experiment]
kind = convergence
levels = 3
seed = 1
[experiment]
kind = prox_regularity
n_boundary = 32
n_targets = 32
seed = 4
[experiment]
kind = continuity
mode = strict
n_terms = 4
pert_amplitude = 0.02
seed = 5
)",
                                        tmp.path.string()));
  std::ostringstream log;
  RunOverrides ov;
  ov.quiet = true;
  CHECK(run_scenario_file(file, ov, log) == kExitPass);
  CHECK(std::filesystem::exists(tmp.file("kinds_normality_1_report.txt")));
  CHECK(std::filesystem::exists(tmp.file("kinds_convergence_2_report.csv")));
  CHECK(std::filesystem::exists(tmp.file("kinds_prox_regularity_3_report.txt")));
  CHECK(std::filesystem::exists(tmp.file("kinds_continuity_4_report.csv")));

  // Serial policy and level/seed overrides give the same pass and files.
  RunOverrides ov2;
  ov2.quiet = true;
  ov2.policy = ExecPolicy::Serial;
  ov2.levels = 3;
  ov2.seed = 9;
  ov2.output_dir = tmp.file("override");
  CHECK(run_scenario_file(file, ov2, log) == kExitPass);
  CHECK(std::filesystem::exists(tmp.file("override/kinds_normality_1_report.txt")));
}

TEST_CASE("unknown experiment kind is a config error") {
  TempDir tmp("badkind");
  const std::string file = tmp.file("scenario.cfg");
  write_text_file(file, "[scenario]\nname = bad\noutput_dir = " + tmp.path.string() +
                            "\n[set]\nvariant = box\nlo = -1\nhi = 1\n"
                            "[input]\npreset = ramp\nT = 2\nz0 = 0\n[experiment]\nkind = bogus\n");
  std::ostringstream log;
  RunOverrides ov;
  ov.quiet = true;
  CHECK(run_scenario_file(file, ov, log) == kExitError);
  CHECK(log.str().find("bogus") != std::string::npos);
}

TEST_CASE("format_g17 round trips doubles") {
  Rng rng(123, 4);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.normal() * std::exp(rng.uniform(-20.0, 20.0));
    CHECK(std::stod(format_g17(x)) == x);
  }
}
