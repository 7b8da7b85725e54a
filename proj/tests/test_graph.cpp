#include <algorithm>

#include "doctest.h"
#include "tcd/graph.hpp"

using namespace tcd;

namespace {

// Single triple crossing: one black, three boundary whites.  With positions
// placed clockwise, the CCW rotation at the black is (w2, w1, w3).
BtbGraph triangle() {
  BtbGraph g;
  g.n = 3;
  int w1 = g.add_white(1), w2 = g.add_white(2), w3 = g.add_white(3);
  int b = g.add_black();
  g.add_edge(b, w2);
  g.add_edge(b, w1);
  g.add_edge(b, w3);
  return g;
}

std::vector<int> ones(std::initializer_list<int> idx, int n) {
  std::vector<int> v(n, 0);
  for (int i : idx) v[i - 1] = 1;
  return v;
}

}  // namespace

TEST_CASE("triangle graph: strands, minimality, validity") {
  BtbGraph g = triangle();
  CHECK(validate(g).valid);
  CHECK(g.mrank() == 1);
  StrandData sd = strands(g);
  CHECK(sd.perm == std::vector<int>{3, 1, 2});  // i -> i+2 (mod 3)
  CHECK(is_minimal(g).minimal);
  auto faces = trace_faces(g);
  CHECK(faces.size() == 3);  // Euler: 1 + n + E - V = 1+3+3-4
  for (const auto& f : faces) CHECK(f.is_boundary());
}

TEST_CASE("triangle graph: strand-side labels") {
  BtbGraph g = triangle();
  BanLabels bl = ban_labels(g);
  CHECK(bl.k == 2);
  // Boundary white at position t carries the interval label {t-1}.
  CHECK(bl.whiteAn.at(g.white_at(1)) == ones({3}, 3));
  CHECK(bl.whiteAn.at(g.white_at(2)) == ones({1}, 3));
  CHECK(bl.whiteAn.at(g.white_at(3)) == ones({2}, 3));
  // Faces carry 2-element labels, the black's an is full and its ban empty.
  for (const auto& fa : bl.faceAn)
    CHECK(std::count(fa.begin(), fa.end(), 1) == 2);
  for (const auto& [id, an] : bl.blackAn) CHECK(an == ones({1, 2, 3}, 3));
  for (const auto& [id, ban] : bl.blackBan) CHECK(ban == ones({}, 3));
}

TEST_CASE("triangle graph: perfect orientation") {
  BtbGraph g = triangle();
  PerfectOrientation po = perfect_orientation(g);
  // Sources: boundary positions p with C^{-1}(p) >= p, here {1,2}.
  CHECK(po.sources == std::vector<int>{1, 2});
  CHECK(po.sources.size() == static_cast<size_t>(g.mrank() + 1));
  CHECK(po.topo_whites.size() == 3);
}

TEST_CASE("single boundary white with no edges") {
  BtbGraph g;
  g.n = 1;
  g.add_white(1);
  CHECK(validate(g).valid);
  CHECK(strands(g).perm == std::vector<int>{1});
  CHECK(trace_faces(g).size() == 1);
  CHECK(is_minimal(g).minimal);
  PerfectOrientation po = perfect_orientation(g);
  CHECK(po.sources == std::vector<int>{1});
}

TEST_CASE("fully glued edgeless cactus gives the cyclic shift") {
  for (int n : {2, 3, 5}) {
    BtbGraph g;
    g.n = n;
    std::vector<int> block;
    for (int p = 1; p <= n; ++p) {
      g.add_white(p);
      block.push_back(p);
    }
    g.cactus.push_back(block);
    CHECK(validate(g).valid);
    StrandData sd = strands(g);
    for (int i = 1; i <= n; ++i) CHECK(sd.perm[i - 1] == i % n + 1);
    CHECK(g.mrank() == 0);
    CHECK(trace_faces(g).size() == 1);
  }
}

TEST_CASE("isolated unglued corner is a strand fixed point") {
  BtbGraph g;
  g.n = 4;
  int w1 = g.add_white(1), w2 = g.add_white(2), w3 = g.add_white(3);
  g.add_white(4);
  int b = g.add_black();
  g.add_edge(b, w2);
  g.add_edge(b, w1);
  g.add_edge(b, w3);
  ValidationReport rep = validate(g);
  CHECK(rep.valid);
  StrandData sd = strands(g);
  CHECK(sd.perm == std::vector<int>{3, 1, 2, 4});
  CHECK(is_minimal(g).minimal);
}

TEST_CASE("validation rejects malformed graphs") {
  SUBCASE("black of wrong degree") {
    BtbGraph g;
    g.n = 2;
    int w1 = g.add_white(1), w2 = g.add_white(2);
    int b = g.add_black();
    g.add_edge(b, w1);
    g.add_edge(b, w2);
    CHECK(!validate(g).valid);
    CHECK_THROWS_AS(require_valid(g), Error);
  }
  SUBCASE("crossing cactus blocks") {
    BtbGraph g;
    g.n = 4;
    for (int p = 1; p <= 4; ++p) g.add_white(p);
    g.cactus = {{1, 3}, {2, 4}};
    CHECK(!validate(g).valid);
  }
  SUBCASE("duplicate boundary position") {
    BtbGraph g;
    g.n = 2;
    g.add_white(1);
    g.add_white(1);
    CHECK(!validate(g).valid);
  }
  SUBCASE("nonplanar rotation data") {
    BtbGraph g = triangle();
    // Reversing the rotation at the black while keeping the boundary order
    // describes an embedding that does not fit in the disk; the Euler count
    // of inner faces catches this.
    std::reverse(g.black_mut(g.blacks.begin()->first).edges.begin(),
                 g.black_mut(g.blacks.begin()->first).edges.end());
    CHECK(!validate(g).valid);
  }
}

TEST_CASE("canonical encoding is invariant under relabeling") {
  BtbGraph g = triangle();
  BtbGraph h;
  h.n = 3;
  h.next_id = 100;
  int w3 = h.add_white(3), w1 = h.add_white(1), w2 = h.add_white(2);
  int b = h.add_black();
  h.add_edge(b, w2);
  h.add_edge(b, w1);
  h.add_edge(b, w3);
  CHECK(canonical_encoding(g) == canonical_encoding(h));
  // The mirrored triangle encodes differently.
  BtbGraph m = triangle();
  std::reverse(m.black_mut(m.blacks.begin()->first).edges.begin(),
               m.black_mut(m.blacks.begin()->first).edges.end());
  CHECK(canonical_encoding(g) != canonical_encoding(m));
  std::vector<int> wo;
  canonical_encoding(g, &wo);
  CHECK(wo.size() == 3);
}
