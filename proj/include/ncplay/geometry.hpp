#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "ncplay/report.hpp"
#include "ncplay/rng.hpp"
#include "ncplay/vec.hpp"

namespace ncplay {

/// Default comparison tolerances. Geometric decisions (boundary detection)
/// use 1e-9; algebraic identities (membership snap, projection residuals)
/// use 1e-12, scaled by the set's characteristic length.
inline constexpr double kGeometricTol = 1e-9;
inline constexpr double kAlgebraicTol = 1e-12;

inline constexpr double kInfiniteProxRadius = std::numeric_limits<double>::infinity();

class SetSpec;

struct BallSpec {
  Vec center;
  double radius;
};

struct BoxSpec {
  Vec lo;
  Vec hi;
};

/// Halfspace {x : <normal, x> <= offset} with unit normal.
struct HalfspaceSpec {
  Vec normal;
  double offset;
};

/// Closure of the complement of an open ball: {x : |x - center| >= radius}.
struct ComplementOfBallSpec {
  Vec center;
  double radius;
};

/// Disjoint union of convex members with a declared pairwise distance >= gap.
struct UnionSpec {
  std::vector<SetSpec> members;
  double gap;
};

/// Characteristic constraint set with an exact projection and a declared
/// prox-regularity radius: infinity for the convex variants, radius for a
/// ball complement, gap/2 for a union (two members both realizing a distance
/// below gap/2 would contradict the declared member separation).
class SetSpec {
 public:
  static SetSpec ball(Vec center, double radius);
  static SetSpec box(Vec lo, Vec hi);
  static SetSpec halfspace(Vec normal, double offset);
  static SetSpec complement_of_ball(Vec center, double radius);
  /// Members must be convex variants; validates the declared gap by sampled
  /// projection between each pair.
  static SetSpec union_of(std::vector<SetSpec> members, double gap);

  std::size_t dim() const { return dim_; }
  double prox_radius() const { return prox_radius_; }
  bool convex() const { return prox_radius_ == kInfiniteProxRadius; }
  /// Characteristic length used to scale tolerances and samplers.
  double scale() const { return scale_; }

  const BallSpec* as_ball() const { return std::get_if<BallSpec>(&v_); }
  const BoxSpec* as_box() const { return std::get_if<BoxSpec>(&v_); }
  const HalfspaceSpec* as_halfspace() const { return std::get_if<HalfspaceSpec>(&v_); }
  const ComplementOfBallSpec* as_complement() const {
    return std::get_if<ComplementOfBallSpec>(&v_);
  }
  const UnionSpec* as_union() const { return std::get_if<UnionSpec>(&v_); }

  std::string variant_name() const;

  /// Tolerance below which a raw distance counts as membership.
  double membership_tol() const { return kAlgebraicTol * (1.0 + scale_); }

 private:
  using Variant =
      std::variant<BallSpec, BoxSpec, HalfspaceSpec, ComplementOfBallSpec, UnionSpec>;
  SetSpec(Variant v, double prox_radius, std::size_t dim, double scale)
      : v_(std::move(v)), prox_radius_(prox_radius), dim_(dim), scale_(scale) {}

  Variant v_;
  double prox_radius_;
  std::size_t dim_;
  double scale_;
};

/// Membership test for the closed set (boundary points are members).
bool contains(const SetSpec& set, const Vec& p);

/// Euclidean distance d_Z(p); zero iff contains(set, p).
double distance(const SetSpec& set, const Vec& p);

/// Unique nearest point of Z. Throws AmbiguousProjection when several points
/// realize the distance, OutsideProxNeighborhood when a non-convex set is
/// queried at distance >= prox_radius.
Vec project(const SetSpec& set, const Vec& p);

/// Unit proximal normals at a boundary point x: directions n with
/// x in Proj_Z(x + probe * n). Interior points yield an empty list. At box
/// corners the extreme rays of the normal cone are reported.
std::vector<Vec> proximal_normal(const SetSpec& set, const Vec& x, double probe);

/// Samples boundary points with their proximal normals and member targets z,
/// and reports the worst violation of
///   <n, z - x> <= |n| / (2 r) |z - x|^2
/// together with the witnessing triple. Pass iff max violation <= 1e-9.
Report verify_prox_regularity(const SetSpec& set, double r, int n_boundary, int n_targets,
                              std::uint64_t seed, ExecPolicy policy = ExecPolicy::Parallel);

/// --- sampling helpers shared with the residual evaluators ---

/// Distance from x to the complement of Z; 0 on the boundary and outside.
double boundary_depth(const SetSpec& set, const Vec& x);

/// Diameter proxy for samplers (finite even for unbounded variants).
double extent_hint(const SetSpec& set);

/// Random point on the boundary of Z.
Vec sample_boundary(const SetSpec& set, Rng& rng);

/// Random member of Z inside the cube of the given halfwidth around x0, by
/// rejection. Throws SamplerExhausted after max_attempts rejections.
Vec sample_member_near(const SetSpec& set, const Vec& x0, double halfwidth, Rng& rng,
                       int max_attempts = 4096);

/// Analytically extreme members of Z relative to x (far corners, antipodal
/// boundary points, other union members). Worst-case targets for the
/// prox-regularity inequality live here, not near x.
std::vector<Vec> extreme_members(const SetSpec& set, const Vec& x);

/// Reference point inside the set (center, box midpoint, a boundary point for
/// the complement variant).
Vec anchor_point(const SetSpec& set);

/// Distance between two convex sets estimated by alternating projections.
double convex_pair_distance(const SetSpec& a, const SetSpec& b, int iterations = 200);

}  // namespace ncplay
