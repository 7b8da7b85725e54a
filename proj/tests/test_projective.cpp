#include "doctest.h"
#include "tcd/projective.hpp"

using namespace tcd;

namespace {
ProjPoint pt(std::vector<long> v) {
  Vec h;
  for (long x : v) h.push_back(Scalar(x));
  return ProjPoint(h);
}
}  // namespace

TEST_CASE("normalization to primitive integer vectors") {
  ProjPoint p(Vec{Scalar(-2, 3), Scalar(4, 3), Scalar(0)});
  CHECK(p.h == Vec{Scalar(1), Scalar(-2), Scalar(0)});  // first nonzero positive
  CHECK(p == pt({2, -4, 0}));
  CHECK(p.dim() == 2);
}

TEST_CASE("rational serialization round trip") {
  Scalar x(-22, 7);
  CHECK(scalar_to_string(x) == "-22/7");
  CHECK(scalar_from_string("-22/7") == x);
  CHECK(scalar_to_string(Scalar(5)) == "5");
  CHECK_THROWS_AS(scalar_from_string("1/0"), Error);
  CHECK_THROWS_AS(scalar_from_string("abc"), Error);
}

TEST_CASE("collinearity and span dimension") {
  auto a = pt({1, 0, 0}), b = pt({0, 1, 0}), c = pt({1, 1, 0}), d = pt({0, 0, 1});
  CHECK(collinear(a, b, c));
  CHECK(!collinear(a, b, d));
  CHECK(span_dim({a, b, c}) == 1);
  CHECK(span_dim({a, b, d}) == 2);
}

TEST_CASE("oriented length ratio in a chart") {
  Hyperplane chart(Vec{Scalar(0), Scalar(0), Scalar(1)});
  // Points (0,0), (1,0), (3,0) on the x-axis: (p1-p3)/(p2-p3) = (-3)/(-2).
  auto p1 = pt({0, 0, 1}), p2 = pt({1, 0, 1}), p3 = pt({3, 0, 1});
  CHECK(olr(p1, p2, p3, chart) == Scalar(3, 2));
  CHECK_THROWS_AS(affinize(pt({1, 0, 0}), chart), Error);
}

TEST_CASE("multi-ratio is chart independent and projectively invariant") {
  Rng rng(7);
  // Triangle a,b,c with points on its edges: the classical Menelaus 6-tuple.
  auto a = pt({1, 0, 0}), b = pt({0, 1, 0}), c = pt({0, 0, 1});
  auto ab = pt({1, 2, 0}), bc = pt({0, 1, 3}), ca = pt({5, 0, 1});
  std::vector<ProjPoint> cyc{a, ab, b, bc, c, ca};
  Scalar m = multi_ratio(cyc);
  CHECK(m != 0);
  for (int t = 0; t < 20; ++t) {
    Mat g = random_projectivity(2, rng);
    std::vector<ProjPoint> img;
    for (const auto& p : cyc) img.push_back(apply_matrix(g, p));
    CHECK(multi_ratio(img) == m);
  }
}

TEST_CASE("multi-ratio requires collinear triples") {
  auto a = pt({1, 0, 0}), b = pt({0, 1, 0}), c = pt({0, 0, 1});
  std::vector<ProjPoint> cyc{a, pt({1, 2, 1}), b, pt({0, 1, 3}), c, pt({5, 0, 1})};
  CHECK_THROWS_WITH_AS(multi_ratio(cyc), doctest::Contains("IncidenceViolated"), Error);
}

TEST_CASE("central projection and projection matrix") {
  // Project P^3 -> P^2 from the point (1,1,1,1).
  Subspace center(Mat{Vec{Scalar(1), Scalar(1), Scalar(1), Scalar(1)}});
  Mat m = projection_matrix(center, 4);
  CHECK(m.size() == 3);
  auto p = pt({1, 2, 3, 4});
  ProjPoint q = central_projection(p, center);
  CHECK(q.dim() == 2);
  CHECK(q == apply_matrix(m, p));
  CHECK_THROWS_WITH_AS(central_projection(pt({2, 2, 2, 2}), center),
                       doctest::Contains("PointInCenter"), Error);
}

TEST_CASE("line meets line and hyperplane") {
  auto p = line_meet_line(pt({0, 0, 1}), pt({1, 1, 1}), pt({1, 0, 1}), pt({0, 1, 1}));
  CHECK(p == pt({1, 1, 2}));
  Hyperplane H(Vec{Scalar(1), Scalar(0), Scalar(0)});
  auto q = line_meet_hyperplane(pt({1, 1, 1}), pt({2, 1, 1}), H);
  CHECK(q == pt({0, 1, 1}));
}

TEST_CASE("chart avoiding points and random hyperplanes") {
  std::vector<ProjPoint> avoid{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
  Hyperplane h = chart_avoiding(avoid, 2);
  for (const auto& p : avoid) CHECK(dot(h.cov, p.h) != 0);
  Rng rng(3);
  Hyperplane r = random_hyperplane(2, avoid, rng);
  for (const auto& p : avoid) CHECK(dot(r.cov, p.h) != 0);
}
