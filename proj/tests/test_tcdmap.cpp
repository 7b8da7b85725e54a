#include "doctest.h"

#include <set>

#include "tcd/tcdmap.hpp"
#include "tcd/tiling.hpp"

using namespace tcd;

namespace {

// Single trivalent black: boundary whites at positions 1..3, one black.
BtbGraph triangle() {
  BtbGraph g;
  g.n = 3;
  int w1 = g.add_white(1), w2 = g.add_white(2), w3 = g.add_white(3);
  int b = g.add_black();
  g.add_edge(b, w2);
  g.add_edge(b, w1);
  g.add_edge(b, w3);
  require_valid(g);
  return g;
}

ProjPoint pt(std::vector<long> v) {
  Vec h;
  for (long x : v) h.push_back(Scalar(x));
  return ProjPoint(h);
}

}  // namespace

TEST_CASE("map validity on a single black vertex") {
  BtbGraph g = triangle();
  TcdMap m;
  m.g = g;
  m.d = 1;
  m.set_point(g.white_at(1), pt({0, 1}));
  m.set_point(g.white_at(2), pt({1, 1}));
  m.set_point(g.white_at(3), pt({3, 1}));
  CHECK_NOTHROW(require_valid_map(m));
  CHECK(rank(m) == 1);

  m.set_point(g.white_at(3), pt({1, 1}));  // coincides with position 2
  CHECK_THROWS_WITH_AS(require_valid_map(m), doctest::Contains("coincident"), Error);

  m.d = 2;
  m.set_point(g.white_at(1), pt({0, 0, 1}));
  m.set_point(g.white_at(2), pt({1, 0, 1}));
  m.set_point(g.white_at(3), pt({0, 1, 1}));
  try {
    require_valid_map(m);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "CollinearityViolation");
  }
}

TEST_CASE("affine-gauge relation coefficients for points 0,1,3") {
  BtbGraph g = triangle();
  TcdMap m;
  m.g = g;
  m.d = 1;
  // Affine line coordinates 0, 1, 3 in rotation order of the black vertex.
  auto order = g.black(g.blacks.begin()->first).edges;
  m.points[g.rep_white(g.edge(order[0]).white)] = pt({0, 1});
  m.points[g.rep_white(g.edge(order[1]).white)] = pt({1, 1});
  m.points[g.rep_white(g.edge(order[2]).white)] = pt({3, 1});

  Hyperplane chart(Vec{Scalar(0), Scalar(1)});
  Vrc v = vrc_of(m, chart);
  CHECK(v.weights.at(order[0]) == Scalar(1));          // canonical gauge
  CHECK(v.weights.at(order[1]) == Scalar(-3, 2));      // (2,-3,1) rescaled
  CHECK(v.weights.at(order[2]) == Scalar(1, 2));
  Scalar sum = v.weights.at(order[0]) + v.weights.at(order[1]) + v.weights.at(order[2]);
  CHECK(sum == 0);

  TcdMap back = from_vrc(g, v);
  CHECK(back.same_points(m));

  // Gauge rescaling the black relation leaves the projectivization unchanged.
  Vrc w = v;
  for (int e : order) w.weights[e] *= Scalar(7, 3);
  CHECK(from_vrc(g, w).same_points(m));

  // A chart through one of the points is rejected.
  Hyperplane bad(Vec{Scalar(1), Scalar(0)});  // contains (0:1)
  CHECK_THROWS_AS(vrc_of(m, bad), Error);
}

TEST_CASE("from_vrc rejects broken relations and circuits") {
  BtbGraph g = triangle();
  auto order = g.black(g.blacks.begin()->first).edges;
  Vrc v;
  v.d = 1;
  v.vectors[g.rep_white(g.edge(order[0]).white)] = {Scalar(0), Scalar(1)};
  v.vectors[g.rep_white(g.edge(order[1]).white)] = {Scalar(1), Scalar(1)};
  v.vectors[g.rep_white(g.edge(order[2]).white)] = {Scalar(3), Scalar(1)};
  v.weights[order[0]] = 1;
  v.weights[order[1]] = 1;  // does not vanish
  v.weights[order[2]] = 1;
  try {
    from_vrc(g, v);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "CircuitViolated");
  }
  // Projectively equal neighbors: relation can vanish but circuit fails.
  v.vectors[g.rep_white(g.edge(order[2]).white)] = {Scalar(-2), Scalar(-2)};
  v.weights[order[0]] = 2;
  v.weights[order[1]] = 2;
  v.weights[order[2]] = 2;
  CHECK_THROWS_AS(from_vrc(g, v), Error);
}

TEST_CASE("construct reaches the requested rank on grassmannian graphs") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {4, 5}, {3, 6}}) {
    BtbGraph g = grassmannian_graph(k, n).g;
    int mr = g.mrank();
    for (int d = 1; d <= mr; ++d) {
      TcdMap m = construct(g, d, 1000 * k + 10 * n + d);
      CHECK(m.d == d);
      CHECK(rank(m) == d);
      CHECK_NOTHROW(require_valid_map(m));
    }
    CHECK_THROWS_AS(construct(g, mr + 1, 7), Error);
    CHECK_THROWS_AS(construct(g, 0, 7), Error);
  }
}

TEST_CASE("one-genericity of generic constructions") {
  BtbGraph g = grassmannian_graph(3, 6).g;
  TcdMap m = construct(g, g.mrank(), 42);
  std::string why;
  CHECK(is_one_generic(m, &why));

  TcdMap flat = construct(g, 1, 43);
  CHECK(!is_one_generic(flat, &why));  // no plane inside a line
  CHECK(!why.empty());
}

TEST_CASE("lift then project is the exact identity") {
  BtbGraph g = grassmannian_graph(3, 6).g;  // mrank 2
  TcdMap low = construct(g, 1, 5);
  TcdMap high = lift(low, 2, 6);
  CHECK(rank(high) == 2);
  CHECK_NOTHROW(require_valid_map(high));
  TcdMap back = project(high, lift_center(1, 2));
  CHECK(back.same_points(low));

  // Lifting past mrank or below the current rank is rejected.
  CHECK_THROWS_AS(lift(high, 3, 7), Error);
  CHECK_THROWS_AS(lift(low, 1, 7), Error);
}

TEST_CASE("lift preserves multi-ratios of black point chains") {
  BtbGraph g = grassmannian_graph(4, 6).g;  // mrank 3
  TcdMap low = construct(g, 1, 11);
  TcdMap high = lift(low, 3, 12);
  // Compare a 6-tuple multi-ratio built from two blacks sharing structure.
  std::vector<int> ws;
  for (const auto& [wid, p] : low.points) ws.push_back(wid);
  REQUIRE(ws.size() >= 6);
  auto tuple_of = [&](const TcdMap& m) {
    // Use the three collinear points of two black vertices as chain stand-ins
    // only when rank 1 (all points collinear), otherwise skip.
    std::vector<ProjPoint> t;
    for (int i = 0; i < 6; ++i) t.push_back(m.points.at(ws[i]));
    return t;
  };
  auto lowT = tuple_of(low);
  auto highT = tuple_of(high);
  bool low_ok = true, high_ok = true;
  Scalar a, b;
  try { a = multi_ratio(lowT); } catch (const Error&) { low_ok = false; }
  try { b = multi_ratio(highT); } catch (const Error&) { high_ok = false; }
  if (low_ok && high_ok) CHECK(a == b);
  CHECK(low_ok);  // rank-1: all collinear, multi-ratio defined
}

TEST_CASE("projection admissibility violations are reported") {
  BtbGraph g = grassmannian_graph(3, 6).g;
  TcdMap m = construct(g, 2, 21);
  // Center through one of the points.
  int w0 = m.points.begin()->first;
  Subspace through(Mat{m.points.at(w0).h});
  try {
    project(m, through);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "NotAdmissible");
    CHECK(e.witness().find("point") != std::string::npos);
  }
  // Center meeting a black line but no point: take the line through two
  // neighbors of a black, pick a combination distinct from all points.
  int bid = m.g.blacks.begin()->first;
  std::vector<int> ws;
  for (int e : m.g.black(bid).edges) ws.push_back(m.g.rep_white(m.g.edge(e).white));
  Vec c = add(m.points.at(ws[0]).h, scale(Scalar(5), m.points.at(ws[1]).h));
  bool hits_point = false;
  for (const auto& [wid, p] : m.points)
    if (ProjPoint(c) == p) hits_point = true;
  if (!hits_point) {
    try {
      project(m, Subspace(Mat{c}));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == "NotAdmissible");
      CHECK(e.witness().find("line") != std::string::npos);
    }
  }
  // A random admissible center works and drops the rank by one.
  Rng rng(3);
  TcdMap pr = project(m, random_admissible_center(m, 1, rng));
  CHECK(pr.d == 1);
  CHECK(rank(pr) == 1);
  CHECK_NOTHROW(require_valid_map(pr));
}

TEST_CASE("vrc round trip on a constructed map") {
  BtbGraph g = grassmannian_graph(2, 5).g;
  TcdMap m = construct(g, g.mrank(), 99);
  std::vector<ProjPoint> pts;
  for (const auto& [wid, p] : m.points) pts.push_back(p);
  Hyperplane chart = chart_avoiding(pts, m.d);
  Vrc v = vrc_of(m, chart);
  // Relation sums vanish in the affine gauge.
  for (const auto& [bid, b] : m.g.blacks) {
    Scalar s = 0;
    for (int e : b.edges) s += v.weights.at(e);
    CHECK(s == 0);
    CHECK(v.weights.at(b.edges[0]) == 1);
  }
  CHECK(from_vrc(g, v).same_points(m));
}
