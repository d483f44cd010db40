#include "ncplay/bvcalc.hpp"

#include <algorithm>
#include <cmath>

#include "ncplay/errors.hpp"

namespace ncplay {

double variation(const Path& f, double a, double b) {
  if (!(0.0 <= a) || !(a <= b) || !(b <= f.duration() * (1.0 + 1e-15)))
    throw BadInterval("variation requires 0 <= a <= b <= T");
  if (a == b) return 0.0;
  double acc = 0.0;
  Vec prev = f.eval(a);
  const std::size_t first = f.segment_index(a) + 1;
  for (std::size_t k = first; k < f.size() && f.time(k) < b; ++k) {
    acc += distance(f.value(k), prev);
    prev = f.value(k);
  }
  acc += distance(f.eval(b), prev);
  return acc;
}

double variation(const Path& f) {
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < f.size(); ++k) acc += distance(f.value(k + 1), f.value(k));
  return acc;
}

double sup_distance(const Path& f, const Path& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("path dimensions differ");
  if (f.duration() != g.duration()) throw BadInterval("paths live on different intervals");
  double best = 0.0;
  for (double t : union_grid(f, g)) best = std::max(best, distance(f.eval(t), g.eval(t)));
  return best;
}

double bv_distance(const Path& f, const Path& g) {
  return sup_distance(f, g) + variation(path_difference(f, g));
}

double strict_distance(const Path& f, const Path& g) {
  return sup_distance(f, g) + std::abs(variation(f) - variation(g));
}

TimeChange arc_length_profile(const Path& f) {
  const double T = f.duration();
  std::vector<double> cum(f.size(), 0.0);
  for (std::size_t k = 1; k < f.size(); ++k)
    cum[k] = cum[k - 1] + distance(f.value(k), f.value(k - 1));
  const double total = cum.back();
  std::vector<double> ell(f.size(), 0.0);
  if (total > 0.0) {
    for (std::size_t k = 0; k < f.size(); ++k) ell[k] = T * (cum[k] / total);
    ell.back() = T;
  }
  return TimeChange(scalar_path(f.times(), std::move(ell)));
}

Reparametrization reparametrize_by_arclength(const Path& f) {
  const double total = variation(f);
  if (total == 0.0)
    throw DegenerateVariation("constant path has no arc-length reparametrization");
  const double T = f.duration();
  TimeChange ell = arc_length_profile(f);
  // Collapse duplicate arc-length samples: f is constant across a plateau of
  // ell, so keeping the left value loses nothing.
  const double dup_tol = 1e-14 * T;
  std::vector<double> sigma;
  std::vector<Vec> values;
  sigma.reserve(f.size());
  values.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double s = ell.path().value(k)[0];
    if (!sigma.empty() && s - sigma.back() <= dup_tol) continue;
    sigma.push_back(s);
    values.push_back(f.value(k));
  }
  if (sigma.back() != T) {
    sigma.back() = T;
    values.back() = f.value(f.size() - 1);
  }
  return Reparametrization{std::move(ell), Path(std::move(sigma), std::move(values))};
}

Path compose_time_change(const Path& f, const TimeChange& phi) {
  if (phi.duration() != f.duration())
    throw BadInterval("time change must live on the path's interval");
  const Path& p = phi.path();
  std::vector<double> times;
  std::vector<Vec> values;
  times.reserve(p.size() + f.size());
  values.reserve(p.size() + f.size());

  auto push = [&](double t, const Vec& v) {
    if (!times.empty() && t <= times.back()) return;
    times.push_back(t);
    values.push_back(v);
  };

  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    const double t0 = p.time(j), t1 = p.time(j + 1);
    const double s0 = p.value(j)[0], s1 = p.value(j + 1)[0];
    push(t0, f.eval(s0));
    if (s1 > s0) {
      // Insert the preimages of f's breakpoints interior to [s0, s1] so the
      // composition stays an exact polyline.
      std::size_t k = f.segment_index(s0) + 1;
      for (; k < f.size() && f.time(k) < s1; ++k) {
        const double s = f.time(k);
        if (s <= s0) continue;
        const double t = t0 + (s - s0) / (s1 - s0) * (t1 - t0);
        push(t, f.value(k));
      }
    }
  }
  push(p.time(p.size() - 1), f.eval(p.value(p.size() - 1)[0]));
  return Path(std::move(times), std::move(values));
}

}  // namespace ncplay
