#include "ncplay/runner.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>

#include "ncplay/bvcalc.hpp"
#include "ncplay/csv.hpp"
#include "ncplay/presets.hpp"
#include "ncplay/propcheck.hpp"
#include "ncplay/residuals.hpp"

namespace ncplay {

namespace {

TimeChange make_time_change(const std::string& name, const Path& u) {
  const double T = u.duration();
  if (name == "id") return time_change_id(T);
  if (name == "quadratic") return time_change_quadratic(T, 33);
  if (name == "remap") return time_change_remap(u.times());
  if (name == "plateau") return time_change_plateau(T);
  throw ConfigParseError("unknown time change preset '" + name + "'");
}

Path make_perturbation(const ExperimentConfig& cfg, const Path& u) {
  const std::string preset = cfg.get("perturbation", "zigzag");
  const double amp = cfg.get_real("pert_amplitude", 0.05);
  const int legs = cfg.get_int("pert_legs", 5);
  if (preset == "zero") {
    std::vector<Vec> vals(2, Vec(u.dim()));
    return Path({0.0, u.duration()}, std::move(vals));
  }
  if (preset == "zigzag") {
    const Path z = preset_zigzag(u.duration(), amp, legs, 2);
    if (u.dim() == 1) return z;
    // Embed the scalar zigzag along the first coordinate.
    std::vector<Vec> vals;
    vals.reserve(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
      Vec v(u.dim());
      v[0] = z.value(k)[0];
      vals.push_back(std::move(v));
    }
    return Path(z.times(), std::move(vals));
  }
  throw ConfigParseError("unknown perturbation preset '" + preset + "'");
}

std::vector<Vec> make_z0_seq(const SetSpec& set, const Vec& z0, const ExperimentConfig& cfg,
                             int n_terms) {
  Vec offset(z0.dim());
  if (cfg.has("z0_offset")) {
    std::istringstream in(cfg.get("z0_offset", ""));
    std::vector<double> vals;
    double x;
    while (in >> x) vals.push_back(x);
    if (vals.size() != z0.dim())
      throw ConfigParseError("experiment '" + cfg.label + "': z0_offset dimension mismatch");
    offset = Vec(std::move(vals));
  }
  std::vector<Vec> seq;
  seq.reserve(static_cast<std::size_t>(n_terms));
  for (int n = 1; n <= n_terms; ++n)
    seq.push_back(project(set, z0 + (1.0 / n) * offset));
  return seq;
}

}  // namespace

PlaySolution with_corrupted_node(PlaySolution sol, std::size_t node, double delta) {
  if (node >= sol.grid.size()) throw Error("corrupted node index out of range");
  sol.y[node][0] += delta;
  sol.x[node][0] -= delta;  // keeps u = x + y
  sol.w[node] = sol.y[node] - sol.x[node];
  if (node > 0) {
    sol.dy[node - 1][0] += delta;
    sol.dx[node - 1][0] -= delta;
  }
  if (node + 1 < sol.grid.size()) {
    sol.dy[node][0] -= delta;
    sol.dx[node][0] += delta;
  }
  return sol;
}

Report run_experiment(const Scenario& sc, const ExperimentConfig& cfg,
                      const PlaySolution& base, const RunOverrides& ov) {
  const std::uint64_t seed = ov.seed.value_or(cfg.seed);
  const auto levels = [&](int fallback) { return ov.levels.value_or(cfg.get_int("levels", fallback)); };

  if (cfg.kind == "rate_independence") {
    const TimeChange phi = make_time_change(cfg.get("phi", "id"), sc.input);
    return check_rate_independence(sc.set, sc.input, sc.z0, phi, sc.solver, levels(3),
                                   cfg.get_real("tol", 1e-6), ov.policy);
  }
  if (cfg.kind == "normality")
    return check_normality(sc.set, sc.input, sc.z0, levels(3), sc.solver, ov.policy);
  if (cfg.kind == "continuity") {
    const std::string mode = cfg.get("mode", "bv");
    if (mode != "bv" && mode != "strict")
      throw ConfigParseError("experiment '" + cfg.label + "': mode must be bv or strict");
    const int n_terms = cfg.get_int("n_terms", 8);
    return continuity_experiment(
        sc.set, sc.input, sc.z0, mode == "bv" ? OutputMetric::BV : OutputMetric::Strict,
        n_terms, make_perturbation(cfg, sc.input), make_z0_seq(sc.set, sc.z0, cfg, n_terms),
        sc.solver, cfg.get_real("grid_tol", 1e-3), cfg.get_real("tol", 10.0), ov.policy);
  }
  if (cfg.kind == "convergence")
    return convergence_order(sc.set, sc.input, sc.z0, levels(4), sc.solver, ov.policy);
  if (cfg.kind == "residuals") {
    const double tol = cfg.get_real("tol", 1e-9);
    PlaySolution sol = base;
    if (cfg.has("corrupt_node"))
      sol = with_corrupted_node(std::move(sol),
                                static_cast<std::size_t>(cfg.get_int("corrupt_node", 0)),
                                cfg.get_real("corrupt_delta", 0.1));
    const double vi = vi_residual(sol, seed, ov.policy);
    const double incl = inclusion_residual(sol, cfg.get_real("probe_fraction", 0.5), ov.policy);
    Report rep;
    rep.name = "residuals";
    rep.tolerance_used = tol;
    Report::Row row;
    row.label = "summary";
    row.values = {{"vi_residual", vi}, {"inclusion_residual", incl}};
    rep.rows.push_back(std::move(row));
    rep.pass = vi <= tol && incl <= tol;
    return rep;
  }
  if (cfg.kind == "prox_regularity") {
    const double r = cfg.get_real("r", sc.set.prox_radius());
    return verify_prox_regularity(sc.set, r, cfg.get_int("n_boundary", 100),
                                  cfg.get_int("n_targets", 100), seed, ov.policy);
  }
  throw ConfigParseError("experiment '" + cfg.label + "': unknown kind '" + cfg.kind + "'");
}

int run_scenario_file(const std::string& filename, const RunOverrides& ov, std::ostream& log) {
  try {
    const Scenario sc = load_scenario(filename);
    const std::string out_dir = ov.output_dir.value_or(sc.output_dir);
    std::filesystem::create_directories(out_dir);
    const auto out_path = [&](const std::string& leaf) {
      return (std::filesystem::path(out_dir) / leaf).string();
    };

    const PlaySolution base = solve_play(sc.set, sc.input, sc.z0, sc.solver);
    write_text_file(out_path(sc.name + "_trajectory.csv"), trajectory_to_csv(base));
    if (!ov.quiet)
      log << sc.name << ": solved " << base.grid.size() << " nodes, V(u) = "
          << format_g17(variation(base.u_path())) << "\n";

    bool all_pass = true;
    for (const auto& cfg : sc.experiments) {
      const Report rep = run_experiment(sc, cfg, base, ov);
      write_text_file(out_path(sc.name + "_" + cfg.label + "_report.txt"),
                      report_to_text(rep));
      write_text_file(out_path(sc.name + "_" + cfg.label + "_report.csv"),
                      report_to_csv(rep));
      if (!ov.quiet)
        log << sc.name << ": experiment " << cfg.label << " ["
            << (rep.pass ? "pass" : "FAIL") << "]\n";
      all_pass = all_pass && rep.pass;
    }
    return all_pass ? kExitPass : kExitExperimentFailed;
  } catch (const std::exception& e) {
    log << "error: " << filename << ": " << e.what() << "\n";
    return kExitError;
  }
}

int validate_scenario_file(const std::string& filename, const RunOverrides& ov,
                           std::ostream& log) {
  try {
    const Scenario sc = load_scenario(filename);
    const double prox = sc.set.prox_radius();
    // Step-control pre-refinement size without running the solver.
    const double max_step = sc.set.convex()
                                ? std::numeric_limits<double>::infinity()
                                : sc.solver.step_fraction * prox;
    std::size_t points = 1;
    for (std::size_t k = 0; k + 1 < sc.input.size(); ++k) {
      const double len = distance(sc.input.value(k + 1), sc.input.value(k));
      points += (std::isfinite(max_step) && len > max_step)
                    ? static_cast<std::size_t>(std::ceil(len / max_step))
                    : 1;
    }
    if (!ov.quiet) {
      log << "scenario: " << sc.name << "\n";
      log << "set: " << sc.set.variant_name() << " (dim " << sc.set.dim()
          << ", prox_radius = " << (std::isinf(prox) ? "infinity" : format_g17(prox))
          << ")\n";
      log << "input: " << sc.input.size() << " nodes on [0, " << format_g17(sc.input.duration())
          << "], V(u) = " << format_g17(variation(sc.input)) << "\n";
      log << "solver: step_fraction = " << format_g17(sc.solver.step_fraction)
          << ", grid after step control = " << points << " nodes\n";
      log << "experiments: " << sc.experiments.size() << "\n";
    }
    return kExitPass;
  } catch (const std::exception& e) {
    log << "error: " << filename << ": " << e.what() << "\n";
    return kExitError;
  }
}

int print_catalog(std::ostream& out) {
  out << "Ball: center c (d reals), radius R > 0; prox_radius = infinity (convex)\n"
         "Box: lo <= hi componentwise; prox_radius = infinity (convex)\n"
         "Halfspace: unit normal n, offset b, set {x : <n, x> <= b}; prox_radius = infinity "
         "(convex)\n"
         "ComplementOfBall: prox_radius = radius\n"
         "Union: convex members with pairwise distance >= gap; prox_radius = gap/2\n";
  return kExitPass;
}

}  // namespace ncplay
