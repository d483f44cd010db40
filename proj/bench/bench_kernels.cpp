// Times the data-parallel kernels against their serial reference and checks
// that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncplay/presets.hpp"
#include "ncplay/propcheck.hpp"
#include "ncplay/residuals.hpp"

using namespace ncplay;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "identical" : "RESULTS DIFFER");
}

Path pressing_input(int samples) {
  std::vector<double> t(static_cast<std::size_t>(samples));
  std::vector<Vec> v(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double tk = static_cast<double>(k) / (samples - 1);
    t[static_cast<std::size_t>(k)] = tk;
    v[static_cast<std::size_t>(k)] = Vec{-0.8 * tk, 0.6 * tk};
  }
  return Path(std::move(t), std::move(v));
}

}  // namespace

int main(int argc, char** argv) {
  const int scale = argc > 1 ? std::atoi(argv[1]) : 1;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  const SetSpec set = SetSpec::complement_of_ball(Vec{0.0, 0.0}, 1.0);
  const PlaySolution sol = solve_play(set, pressing_input(20000 * scale + 1), Vec{1.0, 0.0});

  {
    double rs = 0.0, rp = 0.0;
    const double s = time_ms([&] { rs = vi_residual(sol, 7, ExecPolicy::Serial); }, 3);
    const double p = time_ms([&] { rp = vi_residual(sol, 7, ExecPolicy::Parallel); }, 3);
    row("vi_residual", s, p, rs == rp);
  }
  {
    double rs = 0.0, rp = 0.0;
    const double s = time_ms([&] { rs = inclusion_residual(sol, 0.5, ExecPolicy::Serial); }, 5);
    const double p =
        time_ms([&] { rp = inclusion_residual(sol, 0.5, ExecPolicy::Parallel); }, 5);
    row("inclusion_residual", s, p, rs == rp);
  }
  {
    Report rs, rp;
    const double s = time_ms(
        [&] { rs = verify_prox_regularity(set, 1.0, 400 * scale, 400, 3, ExecPolicy::Serial); },
        3);
    const double p = time_ms(
        [&] {
          rp = verify_prox_regularity(set, 1.0, 400 * scale, 400, 3, ExecPolicy::Parallel);
        },
        3);
    row("verify_prox_regularity", s, p,
        rs.find("summary")->get("max_violation") == rp.find("summary")->get("max_violation"));
  }
  {
    const Path u = pressing_input(257);
    Report rs, rp;
    const double s = time_ms(
        [&] { rs = check_normality(set, u, Vec{1.0, 0.0}, 6, {}, ExecPolicy::Serial); }, 2);
    const double p = time_ms(
        [&] { rp = check_normality(set, u, Vec{1.0, 0.0}, 6, {}, ExecPolicy::Parallel); }, 2);
    bool equal = rs.rows.size() == rp.rows.size();
    for (std::size_t i = 0; equal && i < rs.rows.size(); ++i)
      for (std::size_t j = 0; j < rs.rows[i].values.size(); ++j)
        equal = equal && rs.rows[i].values[j].second == rp.rows[i].values[j].second;
    row("check_normality rows", s, p, equal);
  }
  return 0;
}
