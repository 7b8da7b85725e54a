#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcd/linalg.hpp"

namespace tcd {

// Point of d-dimensional projective space over Q, stored as a primitive
// integer homogeneous vector of length d+1 with positive leading entry.
struct ProjPoint {
  Vec h;

  ProjPoint() = default;
  explicit ProjPoint(Vec v);

  int dim() const { return static_cast<int>(h.size()) - 1; }
  bool operator==(const ProjPoint& o) const { return h == o.h; }
  bool operator!=(const ProjPoint& o) const { return h != o.h; }
  std::string str() const;
};

// Hyperplane (affine chart) given by a primitive covector; the chart consists
// of points with <cov, p> != 0, affinized by rescaling so that <cov, p> = 1.
struct Hyperplane {
  Vec cov;

  Hyperplane() = default;
  explicit Hyperplane(Vec c);
  int dim() const { return static_cast<int>(cov.size()) - 1; }
  bool operator==(const Hyperplane& o) const { return cov == o.cov; }
  std::string str() const;
};

// Linear subspace of the homogeneous coordinate space, kept as an RREF basis.
// Used both for projection centers and for section hyperplanes-as-subspaces.
struct Subspace {
  Mat basis;  // rows form an RREF basis; may be empty (zero space)

  Subspace() = default;
  explicit Subspace(Mat rows);
  int linear_dim() const { return static_cast<int>(basis.size()); }
  int ambient() const { return basis.empty() ? -1 : static_cast<int>(basis[0].size()); }
  bool contains(const Vec& v) const;
};

int span_dim(const std::vector<ProjPoint>& pts);  // projective dimension of span
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Affinization: p scaled so that <chart, p> = 1. Throws PointAtInfinity.
Vec affinize(const ProjPoint& p, const Hyperplane& chart);

// Ratio of two parallel vectors a = t*b; throws DegenerateDenominator if b=0,
// Error("NotParallel") if they are not proportional.
Scalar parallel_ratio(const Vec& a, const Vec& b);

// Oriented length ratio (p1-p3)/(p2-p3) of three collinear points in a chart.
Scalar olr(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
           const Hyperplane& chart);

// Multi-ratio of a cyclic tuple (p_1, p_12, p_2, p_23, ..., p_m, p_m1) where
// each p_{i,i+1} is collinear with p_i and p_{i+1}. Input size 2m, m >= 2.
// Chart-independent; a chart avoiding all points is found internally.
Scalar multi_ratio(const std::vector<ProjPoint>& cyc);

// Star ratio prod_i (p_i - z)/(z - q_i) for pairs (p_i, q_i) collinear with z.
Scalar star_ratio(const ProjPoint& z,
                  const std::vector<std::pair<ProjPoint, ProjPoint>>& pairs);

// Central projection away from `center`: quotient by the linear span of the
// center, expressed in the non-pivot coordinates of its RREF basis.
// Throws PointInCenter if p lies in the center.
ProjPoint central_projection(const ProjPoint& p, const Subspace& center);

// The matrix of the quotient map used by central_projection (rows = ambient
// dim minus center dim). Exposed so callers can project whole configurations
// consistently.
Mat projection_matrix(const Subspace& center, int ambient);

// Intersection of the line ab with the hyperplane H (as a point); throws
// Error("LineInHyperplane") if the whole line lies in H.
ProjPoint line_meet_hyperplane(const ProjPoint& a, const ProjPoint& b,
                               const Hyperplane& H);

// Intersection point of two coplanar lines ab and cd; throws
// Error("SkewLines") if they do not meet in a unique point.
ProjPoint line_meet_line(const ProjPoint& a, const ProjPoint& b,
                         const ProjPoint& c, const ProjPoint& d);

// Deterministic random sampling with small integer coordinates.
ProjPoint random_point(int d, Rng& rng);
// Hyperplane avoiding every point in `avoid`; bounded retries (throws
// ExhaustedRetries after 64 attempts).
Hyperplane random_hyperplane(int d, const std::vector<ProjPoint>& avoid, Rng& rng);

// A deterministic chart avoiding all given points (coordinate covectors are
// tried first, then seeded random ones).
Hyperplane chart_avoiding(const std::vector<ProjPoint>& avoid, int d);

// Random invertible (d+1)x(d+1) matrix over Q, for invariance tests.
Mat random_projectivity(int d, Rng& rng);

ProjPoint apply_matrix(const Mat& m, const ProjPoint& p);

}  // namespace tcd
