#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tcd/graph.hpp"
#include "tcd/projective.hpp"

namespace tcd {

// A map assigning a point of d-dimensional projective space to every merged
// white vertex so that the three neighbors of each black vertex receive
// pairwise distinct collinear points. The graph is owned by value so that
// local moves can rewire it without aliasing.
struct TcdMap {
  BtbGraph g;
  int d = 0;
  std::map<int, ProjPoint> points;  // keyed by representative white id

  const ProjPoint& point(int white_id) const {
    return points.at(g.rep_white(white_id));
  }
  void set_point(int white_id, ProjPoint p) {
    points[g.rep_white(white_id)] = std::move(p);
  }
  // Same ambient dimension and identical point per representative white.
  bool same_points(const TcdMap& o) const { return d == o.d && points == o.points; }
};

// Throws CollinearityViolation if some black vertex sees coincident or
// non-collinear neighbor points, or if a point has the wrong dimension.
void require_valid_map(const TcdMap& m);

// Vector-relation configuration: a nonzero vector per merged white vertex and
// a nonzero weight per edge such that the weighted neighbor vectors of every
// black vertex sum to zero, with each such triple pairwise independent.
struct Vrc {
  int d = 0;
  std::map<int, Vec> vectors;     // representative white id -> vector, len d+1
  std::map<int, Scalar> weights;  // edge id -> weight
};

// Projectivizes a VRC on `g`; throws CircuitViolated when a vector is zero,
// a weight is zero, a black relation does not vanish, or two neighbors of a
// black vertex are projectively equal.
TcdMap from_vrc(const BtbGraph& g, const Vrc& v);

// Affine-gauge VRC of a map: each vector is the lift pairing to 1 against the
// chart covector, so the three weights at every black vertex sum to zero.
// Weights are canonicalized per black vertex (first edge in rotation order
// gets weight 1). Throws NonGenericHyperplane if the chart meets a point.
Vrc vrc_of(const TcdMap& m, const Hyperplane& chart);

// Builds a map of rank exactly `d` (1 <= d <= mrank) by placing spanning
// points at the minimal whites of the perfect-orientation poset and each
// later white on the line of its two predecessor neighbors, then projecting
// from a random admissible center when d < mrank. Deterministic in `seed`.
// Throws RankDeficient for out-of-range d, ConstructionFailed after the
// retry budget (64 attempts) is exhausted.
TcdMap construct(const BtbGraph& g, int d, std::uint64_t seed);

// Projective dimension of the span of the image points.
int rank(const TcdMap& m);

// Extends a rank-r map (ambient dimension must equal its rank) to a rank
// d_target map whose central projection from the span of the appended
// coordinates recovers the input exactly. Throws RankDeficient unless
// rank(m) < d_target <= mrank.
TcdMap lift(const TcdMap& m, int d_target, std::uint64_t seed);

// The canonical center/recovery data for lift(): the span of the appended
// coordinate axes of a lift from ambient dimension r to d_target.
Subspace lift_center(int r, int d_target);

// True iff `center` contains no image point and misses every black line.
bool is_admissible(const TcdMap& m, const Subspace& center, std::string* why = nullptr);

// Pointwise central projection from a T-admissible center; throws
// NotAdmissible with the violated condition otherwise.
TcdMap project(const TcdMap& m, const Subspace& center);

// Random T-admissible center of linear dimension `linear_dim` (projective
// dimension linear_dim - 1). Throws ExhaustedRetries after 64 attempts.
Subspace random_admissible_center(const TcdMap& m, int linear_dim, Rng& rng);

// True iff every triple of whites on a common inner face spans a plane and
// consecutive unglued boundary whites carry distinct points.
bool is_one_generic(const TcdMap& m, std::string* witness = nullptr);

}  // namespace tcd
