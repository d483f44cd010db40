#pragma once

#include <cmath>
#include <cstdint>

#include "ncplay/vec.hpp"

namespace ncplay {

/// splitmix64 step; used both as a generator and to derive stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Small deterministic generator (xoshiro-style mix over splitmix64 output).
/// Each (seed, stream) pair is an independent stream, so loop iterations can
/// draw from their own stream and produce identical samples no matter how the
/// loop is scheduled across threads.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= 0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = splitmix64(s);
    state_ = a ^ (b + 0x2545f4914f6cdd1dULL);
    if (state_ == 0) state_ = 0x853c49e6748fea9bULL;
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller (two uniforms per pair, cached).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  /// Uniform point in the axis-aligned cube [center - h, center + h]^d.
  Vec uniform_in_cube(const Vec& center, double halfwidth) {
    Vec p(center.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
      p[i] = center[i] + uniform(-halfwidth, halfwidth);
    return p;
  }

  /// Uniform direction on the unit sphere.
  Vec unit_direction(std::size_t dim) {
    Vec v(dim);
    double n2 = 0.0;
    do {
      for (std::size_t i = 0; i < dim; ++i) v[i] = normal();
      n2 = norm2(v);
    } while (n2 < 1e-30);
    return (1.0 / std::sqrt(n2)) * v;
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace ncplay
