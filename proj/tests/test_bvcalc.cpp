#include <doctest.h>

#include <cmath>

#include "ncplay/bvcalc.hpp"
#include "ncplay/presets.hpp"
#include "ncplay/rng.hpp"

using namespace ncplay;

namespace {

Path random_polyline(Rng& rng, std::size_t dim, int nodes, double T = 1.0) {
  std::vector<double> times(static_cast<std::size_t>(nodes));
  times.front() = 0.0;
  for (int k = 1; k < nodes; ++k)
    times[static_cast<std::size_t>(k)] =
        times[static_cast<std::size_t>(k - 1)] + rng.uniform(0.05, 1.0);
  const double s = T / times.back();
  for (auto& t : times) t *= s;
  times.back() = T;
  std::vector<Vec> values;
  values.reserve(times.size());
  for (int k = 0; k < nodes; ++k) values.push_back(rng.uniform_in_cube(Vec(dim), 1.0));
  return Path(std::move(times), std::move(values));
}

}  // namespace

TEST_CASE("variation of simple polylines") {
  const Path two_units(
      {0.0, 1.0, 2.0}, {Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{1.0, 1.0}});
  CHECK(variation(two_units) == doctest::Approx(2.0).epsilon(1e-15));

  const Path constant({0.0, 1.0}, {Vec{0.3}, Vec{0.3}});
  CHECK(variation(constant) == 0.0);

  const Path zigzag = scalar_path({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
  CHECK(variation(zigzag, 0.5, 1.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(variation(zigzag, 0.0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(variation(zigzag, 1.5, 0.5), BadInterval);
}

TEST_CASE("variation is additive over subintervals") {
  Rng rng(31, 0);
  for (int rep = 0; rep < 25; ++rep) {
    const Path f = random_polyline(rng, 2, 9);
    const double T = f.duration();
    for (int i = 0; i < 10; ++i) {
      double a = rng.uniform(0.0, T), b = rng.uniform(0.0, T), c = rng.uniform(0.0, T);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      CHECK(std::abs(variation(f, a, b) + variation(f, b, c) - variation(f, a, c)) <= 1e-12);
    }
  }
}

TEST_CASE("sup distance on matching and mismatched grids") {
  const Path f = scalar_path({0.0, 1.0}, {0.0, 1.0});
  const Path g = scalar_path({0.0, 1.0}, {0.0, 2.0});
  CHECK(sup_distance(f, f) == 0.0);
  CHECK(sup_distance(f, g) == doctest::Approx(1.0).epsilon(1e-15));

  // Same interpolant sampled on a different grid.
  const Path f2 = scalar_path({0.0, 0.25, 0.7, 1.0}, {0.0, 0.25, 0.7, 1.0});
  CHECK(sup_distance(f, f2) <= 1e-15);
}

TEST_CASE("bv and strict distances on hand-computed pairs") {
  const Path f = scalar_path({0.0, 0.5, 1.0}, {0.0, 0.1, 0.0});
  const Path g = scalar_path({0.0, 0.5, 1.0}, {0.0, -0.1, 0.0});
  CHECK(bv_distance(f, g) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(strict_distance(f, g) == doctest::Approx(0.2).epsilon(1e-12));

  const Path h = scalar_path({0.0, 1.0}, {0.0, 1.0});
  const Path h2 = scalar_path({0.0, 1.0}, {0.0, 2.0});
  CHECK(strict_distance(h, h2) == doctest::Approx(2.0).epsilon(1e-12));

  // Adding a constant only moves the sup part.
  const Path fc = scalar_path({0.0, 0.5, 1.0}, {0.25, 0.35, 0.25});
  CHECK(bv_distance(f, fc) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("variation difference bound and metric ordering") {
  Rng rng(77, 5);
  for (int rep = 0; rep < 40; ++rep) {
    const Path f = random_polyline(rng, 2, 8);
    const Path g = random_polyline(rng, 2, 6);
    CHECK(std::abs(variation(f) - variation(g)) <= variation(path_difference(f, g)) + 1e-12);
    CHECK(strict_distance(f, g) <= bv_distance(f, g) + 1e-12);
  }
}

TEST_CASE("metrics are refinement invariant") {
  Rng rng(13, 2);
  for (int rep = 0; rep < 20; ++rep) {
    const Path f = random_polyline(rng, 2, 7);
    const Path g = random_polyline(rng, 2, 5);
    const Path fr = refine(f, 2);
    CHECK(std::abs(variation(fr) - variation(f)) <= 1e-12);
    CHECK(std::abs(sup_distance(fr, g) - sup_distance(f, g)) <= 1e-12);
    CHECK(std::abs(bv_distance(fr, g) - bv_distance(f, g)) <= 1e-12);
    CHECK(std::abs(strict_distance(fr, g) - strict_distance(f, g)) <= 1e-12);
  }
}

TEST_CASE("arc length profile") {
  const Path straight({0.0, 1.0}, {Vec{0.0, 0.0}, Vec{1.0, 0.0}});
  const TimeChange l1 = arc_length_profile(straight);
  CHECK(l1.eval(0.3) == doctest::Approx(0.3).epsilon(1e-15));

  const Path skewed = scalar_path({0.0, 0.5, 1.0}, {0.0, 0.9, 1.0});
  const TimeChange l2 = arc_length_profile(skewed);
  CHECK(l2.path().value(1)[0] == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(l2.path().value(2)[0] == 1.0);

  const Path constant({0.0, 2.0}, {Vec{0.5}, Vec{0.5}});
  const TimeChange l3 = arc_length_profile(constant);
  CHECK(l3.path().value(0)[0] == 0.0);
  CHECK(l3.path().value(1)[0] == 0.0);
}

TEST_CASE("metrics vanish on identical paths") {
  const Path f = scalar_path({0.0, 0.5, 1.0}, {0.0, 0.7, 0.2});
  CHECK(bv_distance(f, f) == 0.0);
  CHECK(strict_distance(f, f) == 0.0);
}

TEST_CASE("a unit-speed path reparametrizes to itself") {
  const Path straight({0.0, 0.5, 1.0}, {Vec{0.0, 0.0}, Vec{0.5, 0.0}, Vec{1.0, 0.0}});
  const auto rep = reparametrize_by_arclength(straight);
  CHECK(sup_distance(rep.ftilde, straight) <= 1e-15);
  CHECK(sup_distance(rep.ell.path(), scalar_path({0.0, 0.5, 1.0}, {0.0, 0.5, 1.0})) <= 1e-15);
}

TEST_CASE("arc length reparametrization has constant speed and reproduces f") {
  const Path skewed = scalar_path({0.0, 0.5, 1.0}, {0.0, 0.9, 1.0});
  const auto rep = reparametrize_by_arclength(skewed);
  REQUIRE(rep.ftilde.size() == 3);
  for (std::size_t k = 0; k + 1 < rep.ftilde.size(); ++k) {
    const double speed = distance(rep.ftilde.value(k + 1), rep.ftilde.value(k)) /
                         (rep.ftilde.time(k + 1) - rep.ftilde.time(k));
    CHECK(std::abs(speed - 1.0) <= 1e-9);
  }
  const Path recomposed = compose_time_change(rep.ftilde, rep.ell);
  for (std::size_t k = 0; k < skewed.size(); ++k)
    CHECK(distance(recomposed.eval(skewed.time(k)), skewed.value(k)) <= 1e-12);

  CHECK_THROWS_AS(reparametrize_by_arclength(Path({0.0, 1.0}, {Vec{1.0}, Vec{1.0}})),
                  DegenerateVariation);
}

TEST_CASE("reparametrization removes plateaus but composition still matches") {
  // Constant stretch in the middle.
  const Path f = scalar_path({0.0, 1.0, 2.0, 3.0}, {0.0, 1.0, 1.0, 2.0});
  const auto rep = reparametrize_by_arclength(f);
  const double speed_ref = variation(f) / f.duration();
  for (std::size_t k = 0; k + 1 < rep.ftilde.size(); ++k) {
    const double dt = rep.ftilde.time(k + 1) - rep.ftilde.time(k);
    CHECK(dt > 0.0);
    const double speed = distance(rep.ftilde.value(k + 1), rep.ftilde.value(k)) / dt;
    CHECK(std::abs(speed - speed_ref) <= 1e-9);
  }
  const Path recomposed = compose_time_change(rep.ftilde, rep.ell);
  for (int i = 0; i <= 300; ++i) {
    const double t = 3.0 * i / 300.0;
    CHECK(distance(recomposed.eval(t), f.eval(t)) <= 1e-12);
  }
}

TEST_CASE("random reparametrization identity") {
  Rng rng(2718, 9);
  for (int rep_i = 0; rep_i < 25; ++rep_i) {
    const Path f = random_polyline(rng, 3, 10);
    const auto rep = reparametrize_by_arclength(f);
    CHECK(sup_distance(compose_time_change(rep.ftilde, rep.ell), f) <= 1e-12);
    const double speed_ref = variation(f) / f.duration();
    for (std::size_t k = 0; k + 1 < rep.ftilde.size(); ++k) {
      const double speed = distance(rep.ftilde.value(k + 1), rep.ftilde.value(k)) /
                           (rep.ftilde.time(k + 1) - rep.ftilde.time(k));
      CHECK(std::abs(speed - speed_ref) <= 1e-9 * (1.0 + speed_ref));
    }
  }
}

TEST_CASE("compose with identity, plateau and quadratic time changes") {
  const Path f = scalar_path({0.0, 0.5, 1.0}, {0.0, 1.0, 0.25});

  const Path id_composed = compose_time_change(f, time_change_id(1.0));
  CHECK(sup_distance(id_composed, f) <= 1e-15);

  const TimeChange plateau = time_change_plateau(1.0);
  const Path pc = compose_time_change(f, plateau);
  // Constant on the plateau [T/3, 2T/3].
  CHECK(distance(pc.eval(1.0 / 3.0), pc.eval(0.5)) <= 1e-15);
  CHECK(distance(pc.eval(0.5), pc.eval(2.0 / 3.0)) <= 1e-15);

  const Path ramp = scalar_path({0.0, 1.0}, {0.0, 1.0});
  const TimeChange quad = time_change_quadratic(1.0, 5);
  const Path qc = compose_time_change(ramp, quad);
  for (std::size_t k = 0; k < qc.size(); ++k) {
    const double t = qc.time(k);
    CHECK(qc.value(k)[0] == doctest::Approx(t * t).epsilon(1e-14));
  }
}

TEST_CASE("refine keeps endpoints and interpolant") {
  const Path two({0.0, 1.0}, {Vec{0.0}, Vec{1.0}});
  CHECK(refine(two, 0).size() == 2);
  const Path r3 = refine(two, 3);
  CHECK(r3.size() == 9);
  CHECK(r3.time(0) == 0.0);
  CHECK(r3.time(8) == 1.0);

  const Path zig = preset_zigzag(2.0, 1.0, 4, 2);
  CHECK(std::abs(variation(refine(zig, 3)) - variation(zig)) <= 1e-12);
}

TEST_CASE("path validation") {
  CHECK_THROWS(Path({0.0}, {Vec{1.0}}));
  CHECK_THROWS(Path({0.0, 0.0}, {Vec{1.0}, Vec{2.0}}));
  CHECK_THROWS(Path({0.5, 1.0}, {Vec{1.0}, Vec{2.0}}));  // must start at 0
  CHECK_THROWS(TimeChange(scalar_path({0.0, 1.0}, {0.0, 0.5})));   // phi(T) != T
  CHECK_THROWS(TimeChange(scalar_path({0.0, 0.5, 1.0}, {0.0, 0.8, 0.5})));  // decreasing
}
