#include "ncplay/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncplay {

namespace {

void require_dim(const SetSpec& set, const Vec& p) {
  if (set.dim() != p.dim())
    throw DimensionMismatch("point dimension " + std::to_string(p.dim()) +
                            " does not match set dimension " + std::to_string(set.dim()));
}

void require_finite(const Vec& v, const char* what) {
  if (!v.finite()) throw Error(std::string(what) + " has non-finite coordinates");
}

double ball_scale(const Vec& center, double radius) { return norm(center) + radius; }

/// Raw (un-snapped) distance to the set.
double raw_distance(const SetSpec& set, const Vec& p);

double raw_distance_impl(const BallSpec& s, const Vec& p) {
  return std::max(0.0, distance(p, s.center) - s.radius);
}

double raw_distance_impl(const BoxSpec& s, const Vec& p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double d = std::max({s.lo[i] - p[i], p[i] - s.hi[i], 0.0});
    acc += d * d;
  }
  return std::sqrt(acc);
}

double raw_distance_impl(const HalfspaceSpec& s, const Vec& p) {
  return std::max(0.0, dot(s.normal, p) - s.offset);
}

double raw_distance_impl(const ComplementOfBallSpec& s, const Vec& p) {
  return std::max(0.0, s.radius - distance(p, s.center));
}

double raw_distance_impl(const UnionSpec& s, const Vec& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : s.members) best = std::min(best, raw_distance(m, p));
  return best;
}

double raw_distance(const SetSpec& set, const Vec& p) {
  if (const auto* b = set.as_ball()) return raw_distance_impl(*b, p);
  if (const auto* b = set.as_box()) return raw_distance_impl(*b, p);
  if (const auto* h = set.as_halfspace()) return raw_distance_impl(*h, p);
  if (const auto* c = set.as_complement()) return raw_distance_impl(*c, p);
  return raw_distance_impl(*set.as_union(), p);
}

}  // namespace

SetSpec SetSpec::ball(Vec center, double radius) {
  require_finite(center, "ball center");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw Error("ball radius must be positive");
  const std::size_t d = center.dim();
  const double scale = ball_scale(center, radius);
  return SetSpec(BallSpec{std::move(center), radius}, kInfiniteProxRadius, d, scale);
}

SetSpec SetSpec::box(Vec lo, Vec hi) {
  require_same_dim(lo, hi);
  require_finite(lo, "box lo");
  require_finite(hi, "box hi");
  double scale = 1.0;
  for (std::size_t i = 0; i < lo.dim(); ++i) {
    if (lo[i] > hi[i]) throw Error("box requires lo <= hi componentwise");
    scale = std::max({scale, std::abs(lo[i]), std::abs(hi[i])});
  }
  const std::size_t d = lo.dim();
  return SetSpec(BoxSpec{std::move(lo), std::move(hi)}, kInfiniteProxRadius, d, scale);
}

SetSpec SetSpec::halfspace(Vec normal, double offset) {
  require_finite(normal, "halfspace normal");
  if (!std::isfinite(offset)) throw Error("halfspace offset must be finite");
  if (std::abs(norm(normal) - 1.0) > 1e-12)
    throw Error("halfspace normal must have unit norm within 1e-12");
  const std::size_t d = normal.dim();
  const double scale = std::max(1.0, std::abs(offset));
  return SetSpec(HalfspaceSpec{std::move(normal), offset}, kInfiniteProxRadius, d, scale);
}

SetSpec SetSpec::complement_of_ball(Vec center, double radius) {
  require_finite(center, "ball center");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw Error("complement-of-ball radius must be positive");
  const std::size_t d = center.dim();
  const double scale = ball_scale(center, radius);
  return SetSpec(ComplementOfBallSpec{std::move(center), radius}, radius, d, scale);
}

SetSpec SetSpec::union_of(std::vector<SetSpec> members, double gap) {
  if (members.size() < 2) throw Error("union needs at least two members");
  if (!(gap > 0.0) || !std::isfinite(gap)) throw Error("union gap must be positive");
  const std::size_t d = members.front().dim();
  double scale = gap;
  for (const auto& m : members) {
    if (m.dim() != d) throw DimensionMismatch("union members must share one dimension");
    if (!m.convex() || m.as_union())
      throw Error("union members must be convex variants (ball, box, halfspace)");
    scale = std::max(scale, m.scale());
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const double dij = convex_pair_distance(members[i], members[j]);
      if (dij < gap - kGeometricTol * (1.0 + scale)) {
        std::ostringstream msg;
        msg << "union members " << i << " and " << j << " are at sampled distance " << dij
            << " which is below the declared gap " << gap;
        throw Error(msg.str());
      }
    }
  return SetSpec(UnionSpec{std::move(members), gap}, gap / 2.0, d, scale);
}

std::string SetSpec::variant_name() const {
  if (as_ball()) return "Ball";
  if (as_box()) return "Box";
  if (as_halfspace()) return "Halfspace";
  if (as_complement()) return "ComplementOfBall";
  return "Union";
}

double distance(const SetSpec& set, const Vec& p) {
  require_dim(set, p);
  const double raw = raw_distance(set, p);
  return raw <= set.membership_tol() ? 0.0 : raw;
}

bool contains(const SetSpec& set, const Vec& p) { return distance(set, p) == 0.0; }

namespace {

Vec project_impl(const SetSpec&, const BallSpec& s, const Vec& p) {
  const double d = distance(p, s.center);
  if (d <= s.radius) return p;
  return s.center + (s.radius / d) * (p - s.center);
}

Vec project_impl(const SetSpec&, const BoxSpec& s, const Vec& p) {
  Vec q = p;
  for (std::size_t i = 0; i < p.dim(); ++i) q[i] = std::clamp(p[i], s.lo[i], s.hi[i]);
  return q;
}

Vec project_impl(const SetSpec&, const HalfspaceSpec& s, const Vec& p) {
  const double excess = dot(s.normal, p) - s.offset;
  if (excess <= 0.0) return p;
  return p - excess * s.normal;
}

Vec project_impl(const SetSpec& set, const ComplementOfBallSpec& s, const Vec& p) {
  const double d = distance(p, s.center);
  if (d >= s.radius) return p;
  if (d <= set.membership_tol())
    throw AmbiguousProjection(
        "projection onto a ball complement is undefined at the center: every boundary "
        "point is equidistant");
  return s.center + (s.radius / d) * (p - s.center);
}

Vec project_impl(const SetSpec& set, const UnionSpec& s, const Vec& p) {
  double best = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    const double di = distance(s.members[i], p);
    if (di < best) {
      second = best;
      best = di;
      best_i = i;
    } else {
      second = std::min(second, di);
    }
  }
  if (best > 0.0 && second - best <= set.membership_tol())
    throw AmbiguousProjection("point is equidistant to two union members");
  if (best >= set.prox_radius())
    throw OutsideProxNeighborhood("point is at distance " + std::to_string(best) +
                                  " from the union, beyond its prox radius " +
                                  std::to_string(set.prox_radius()));
  return project(s.members[best_i], p);
}

}  // namespace

Vec project(const SetSpec& set, const Vec& p) {
  require_dim(set, p);
  if (const auto* b = set.as_ball()) return project_impl(set, *b, p);
  if (const auto* b = set.as_box()) return project_impl(set, *b, p);
  if (const auto* h = set.as_halfspace()) return project_impl(set, *h, p);
  if (const auto* c = set.as_complement()) return project_impl(set, *c, p);
  return project_impl(set, *set.as_union(), p);
}

double boundary_depth(const SetSpec& set, const Vec& x) {
  require_dim(set, x);
  if (const auto* b = set.as_ball()) return std::max(0.0, b->radius - distance(x, b->center));
  if (const auto* b = set.as_box()) {
    double depth = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.dim(); ++i)
      depth = std::min({depth, x[i] - b->lo[i], b->hi[i] - x[i]});
    return std::max(0.0, depth);
  }
  if (const auto* h = set.as_halfspace())
    return std::max(0.0, h->offset - dot(h->normal, x));
  if (const auto* c = set.as_complement())
    return std::max(0.0, distance(x, c->center) - c->radius);
  const auto* u = set.as_union();
  double depth = 0.0;
  for (const auto& m : u->members)
    if (contains(m, x)) depth = std::max(depth, boundary_depth(m, x));
  return depth;
}

double extent_hint(const SetSpec& set) {
  if (const auto* b = set.as_ball()) return 2.0 * b->radius;
  if (const auto* b = set.as_box()) return distance(b->hi, b->lo);
  if (const auto* h = set.as_halfspace()) return 2.0 * (1.0 + std::abs(h->offset));
  if (const auto* c = set.as_complement()) return 2.0 * c->radius;
  const auto* u = set.as_union();
  double ext = u->gap;
  for (std::size_t i = 0; i < u->members.size(); ++i) {
    ext = std::max(ext, extent_hint(u->members[i]));
    for (std::size_t j = i + 1; j < u->members.size(); ++j)
      ext = std::max(ext, distance(anchor_point(u->members[i]), anchor_point(u->members[j])) +
                              extent_hint(u->members[i]) + extent_hint(u->members[j]));
  }
  return ext;
}

Vec anchor_point(const SetSpec& set) {
  if (const auto* b = set.as_ball()) return b->center;
  if (const auto* b = set.as_box()) return 0.5 * (b->lo + b->hi);
  if (const auto* h = set.as_halfspace()) return h->offset * h->normal;
  if (const auto* c = set.as_complement()) {
    Vec x = c->center;
    x[0] += c->radius;
    return x;
  }
  return anchor_point(set.as_union()->members.front());
}

namespace {

std::vector<Vec> proximal_normal_impl(const SetSpec&, const BallSpec& s, const Vec& x) {
  return {normalized(x - s.center)};
}

std::vector<Vec> proximal_normal_impl(const SetSpec& set, const BoxSpec& s, const Vec& x) {
  // Extreme rays of the normal cone: one axis direction per active face.
  std::vector<Vec> rays;
  const double tol = kGeometricTol * (1.0 + set.scale());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (s.hi[i] - x[i] <= tol) {
      Vec e(x.dim());
      e[i] = 1.0;
      rays.push_back(e);
    }
    if (x[i] - s.lo[i] <= tol) {
      Vec e(x.dim());
      e[i] = -1.0;
      rays.push_back(e);
    }
  }
  return rays;
}

std::vector<Vec> proximal_normal_impl(const SetSpec&, const HalfspaceSpec& s, const Vec&) {
  return {s.normal};
}

std::vector<Vec> proximal_normal_impl(const SetSpec&, const ComplementOfBallSpec& s,
                                      const Vec& x) {
  // Outward normal of the complement points into the excluded ball.
  return {normalized(s.center - x)};
}

std::vector<Vec> proximal_normal_impl(const SetSpec&, const UnionSpec& s, const Vec& x,
                                      double probe) {
  for (const auto& m : s.members)
    if (contains(m, x)) return proximal_normal(m, x, probe);
  return {};
}

}  // namespace

std::vector<Vec> proximal_normal(const SetSpec& set, const Vec& x, double probe) {
  require_dim(set, x);
  if (!contains(set, x))
    throw NotMember("proximal_normal requires a member of the set");
  if (!(probe > 0.0) || probe >= set.prox_radius())
    throw Error("probe must lie in (0, prox_radius)");
  if (boundary_depth(set, x) > kGeometricTol * (1.0 + set.scale())) return {};  // interior
  if (const auto* b = set.as_ball()) return proximal_normal_impl(set, *b, x);
  if (const auto* b = set.as_box()) return proximal_normal_impl(set, *b, x);
  if (const auto* h = set.as_halfspace()) return proximal_normal_impl(set, *h, x);
  if (const auto* c = set.as_complement()) return proximal_normal_impl(set, *c, x);
  return proximal_normal_impl(set, *set.as_union(), x, probe);
}

Vec sample_boundary(const SetSpec& set, Rng& rng) {
  if (const auto* b = set.as_ball()) return b->center + b->radius * rng.unit_direction(set.dim());
  if (const auto* c = set.as_complement())
    return c->center + c->radius * rng.unit_direction(set.dim());
  if (const auto* b = set.as_box()) {
    Vec x(set.dim());
    for (std::size_t i = 0; i < set.dim(); ++i) x[i] = rng.uniform(b->lo[i], b->hi[i]);
    // Push one coordinate onto a uniformly chosen face.
    const std::size_t face = static_cast<std::size_t>(rng.next_u64() % (2 * set.dim()));
    const std::size_t axis = face / 2;
    x[axis] = (face % 2 == 0) ? b->hi[axis] : b->lo[axis];
    return x;
  }
  if (const auto* h = set.as_halfspace()) {
    const double span = 2.0 * (1.0 + std::abs(h->offset));
    Vec x = rng.uniform_in_cube(Vec(set.dim()), span);
    return x + (h->offset - dot(h->normal, x)) * h->normal;
  }
  const auto* u = set.as_union();
  const std::size_t i = static_cast<std::size_t>(rng.next_u64() % u->members.size());
  return sample_boundary(u->members[i], rng);
}

Vec sample_member_near(const SetSpec& set, const Vec& x0, double halfwidth, Rng& rng,
                       int max_attempts) {
  for (int a = 0; a < max_attempts; ++a) {
    Vec p = rng.uniform_in_cube(x0, halfwidth);
    if (contains(set, p)) return p;
  }
  throw SamplerExhausted("no set member found in the cube of halfwidth " +
                         std::to_string(halfwidth) + " after " + std::to_string(max_attempts) +
                         " attempts");
}

std::vector<Vec> extreme_members(const SetSpec& set, const Vec& x) {
  std::vector<Vec> out;
  if (const auto* b = set.as_ball()) {
    out.push_back(b->center);
    const double d = distance(x, b->center);
    if (d > 0.0) {
      const Vec dir = (1.0 / d) * (x - b->center);
      out.push_back(b->center - b->radius * dir);  // far boundary point
      out.push_back(b->center + b->radius * dir);
    }
  } else if (const auto* b = set.as_box()) {
    // Corner farthest from x plus the nearest corner.
    Vec far(set.dim()), near(set.dim());
    for (std::size_t i = 0; i < set.dim(); ++i) {
      const double mid = 0.5 * (b->lo[i] + b->hi[i]);
      far[i] = (x[i] >= mid) ? b->lo[i] : b->hi[i];
      near[i] = (x[i] >= mid) ? b->hi[i] : b->lo[i];
    }
    out.push_back(far);
    out.push_back(near);
  } else if (const auto* h = set.as_halfspace()) {
    const Vec foot = x - (dot(h->normal, x) - h->offset) * h->normal;
    const double span = 2.0 * (1.0 + std::abs(h->offset)) + norm(x);
    out.push_back(foot - span * h->normal);  // deep interior point
    if (set.dim() >= 2) {
      // A tangential far point: offset the foot along a direction in the plane.
      Vec t(set.dim());
      std::size_t k = 0;
      double best = -1.0;
      for (std::size_t i = 0; i < set.dim(); ++i)
        if (std::abs(h->normal[i]) > best) {
          best = std::abs(h->normal[i]);
          k = i;
        }
      const std::size_t j = (k + 1) % set.dim();
      t[j] = 1.0;
      t -= dot(t, h->normal) * h->normal;
      if (norm(t) > 1e-12) out.push_back(foot + span * normalized(t));
    }
  } else if (const auto* c = set.as_complement()) {
    const double d = distance(x, c->center);
    if (d > 0.0) {
      const Vec dir = (1.0 / d) * (x - c->center);
      out.push_back(c->center - c->radius * dir);  // antipodal boundary point
      if (set.dim() >= 2) {
        // A point a quarter turn around the sphere.
        std::size_t k = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < set.dim(); ++i)
          if (std::abs(dir[i]) > best) {
            best = std::abs(dir[i]);
            k = i;
          }
        Vec t(set.dim());
        t[(k + 1) % set.dim()] = 1.0;
        t -= dot(t, dir) * dir;
        if (norm(t) > 1e-12) out.push_back(c->center + c->radius * normalized(t));
      }
    }
  } else if (const auto* u = set.as_union()) {
    for (const auto& m : u->members) {
      out.push_back(anchor_point(m));
      for (const auto& e : extreme_members(m, x)) out.push_back(e);
    }
  }
  // Keep only genuine members (the constructions above may drift by rounding).
  std::vector<Vec> members;
  for (auto& p : out)
    if (p.dim() == set.dim() && contains(set, p)) members.push_back(std::move(p));
  return members;
}

double convex_pair_distance(const SetSpec& a, const SetSpec& b, int iterations) {
  Vec p = anchor_point(a);
  Vec q = project(b, p);
  for (int i = 0; i < iterations; ++i) {
    p = project(a, q);
    q = project(b, p);
  }
  return distance(p, q);
}

namespace {

struct ProxWitness {
  double violation = -std::numeric_limits<double>::infinity();
  long index = -1;  // boundary sample index, for deterministic tie-breaks
  Vec x, n, z;
};

void merge(ProxWitness& into, const ProxWitness& other) {
  if (other.violation > into.violation ||
      (other.violation == into.violation && other.index >= 0 &&
       (into.index < 0 || other.index < into.index)))
    into = other;
}

ProxWitness prox_check_one(const SetSpec& set, double r, int n_targets, std::uint64_t seed,
                           long b) {
  Rng rng(seed, static_cast<std::uint64_t>(b));
  const Vec x = sample_boundary(set, rng);
  const double probe =
      0.5 * std::min(set.prox_radius(), std::max(set.scale(), 1.0));
  const std::vector<Vec> normals = proximal_normal(set, x, probe);

  std::vector<Vec> targets;
  targets.reserve(static_cast<std::size_t>(n_targets) + 4);
  const double halfwidth = extent_hint(set);
  for (int t = 0; t < n_targets; ++t)
    targets.push_back(sample_member_near(set, x, halfwidth, rng));
  for (auto& e : extreme_members(set, x)) targets.push_back(std::move(e));

  ProxWitness w;
  w.index = b;
  w.x = x;
  for (const auto& n : normals) {
    for (const auto& z : targets) {
      const Vec zx = z - x;
      const double quad = std::isinf(r) ? 0.0 : norm2(zx) / (2.0 * r);
      const double v = dot(n, zx) - quad;
      if (v > w.violation) {
        w.violation = v;
        w.n = n;
        w.z = z;
      }
    }
  }
  if (normals.empty() || targets.empty()) w.violation = 0.0;
  return w;
}

void append_vec(Report::Row& row, const std::string& prefix, const Vec& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    row.values.emplace_back(prefix + std::to_string(i + 1), v[i]);
}

}  // namespace

Report verify_prox_regularity(const SetSpec& set, double r, int n_boundary, int n_targets,
                              std::uint64_t seed, ExecPolicy policy) {
  if (n_boundary < 1 || n_targets < 1)
    throw Error("verify_prox_regularity requires counts >= 1");
  if (!(r > 0.0)) throw Error("verify_prox_regularity requires r > 0");

  ProxWitness best;
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel
    {
      ProxWitness local;
#pragma omp for nowait schedule(static)
      for (long b = 0; b < n_boundary; ++b)
        merge(local, prox_check_one(set, r, n_targets, seed, b));
#pragma omp critical(ncplay_prox_merge)
      merge(best, local);
    }
  } else {
    for (long b = 0; b < n_boundary; ++b) merge(best, prox_check_one(set, r, n_targets, seed, b));
  }

  const double max_violation = std::max(0.0, best.violation);
  Report rep;
  rep.name = "prox_regularity";
  rep.tolerance_used = kGeometricTol;
  rep.pass = max_violation <= rep.tolerance_used;

  Report::Row summary;
  summary.label = "summary";
  summary.values = {{"r", r},
                    {"max_violation", max_violation},
                    {"boundary_samples", static_cast<double>(n_boundary)},
                    {"targets_per_sample", static_cast<double>(n_targets)}};
  rep.rows.push_back(std::move(summary));

  if (best.index >= 0 && best.x.dim() > 0) {
    Report::Row witness;
    witness.label = "witness";
    witness.values = {{"violation", max_violation}};
    append_vec(witness, "x", best.x);
    if (best.n.dim() > 0) append_vec(witness, "n", best.n);
    if (best.z.dim() > 0) append_vec(witness, "z", best.z);
    rep.rows.push_back(std::move(witness));
  }
  return rep;
}

}  // namespace ncplay
