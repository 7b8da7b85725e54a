#include "doctest.h"
#include "tcd/lattice.hpp"
#include "tcd/moves.hpp"

#include <algorithm>

using namespace tcd;

namespace {

LatticeLabel from_subset(const std::vector<int>& s, int n) {
  LatticeLabel z(n, 0);
  for (int x : s) z[x - 1] = 1;
  return z;
}

std::vector<LatticeLabel> white_labels(const BtbGraph& g) {
  BanLabels lb = ban_labels(g);
  std::vector<LatticeLabel> out;
  for (const auto& [w, lab] : lb.whiteAn) out.push_back(lab);
  return out;
}

}  // namespace

TEST_CASE("weak separation of lattice labels") {
  LatticeLabel a = {1, 1, 0, 0}, b = {0, 1, 1, 0}, c = {1, 0, 1, 0}, d = {0, 1, 0, 1};
  CHECK(weakly_separated(a, a));
  CHECK(weakly_separated(a, b));
  CHECK(weakly_separated(b, a));
  CHECK_FALSE(weakly_separated(c, d));
  CHECK_FALSE(weakly_separated(d, c));
  CHECK_THROWS_WITH_AS(static_cast<void>(weakly_separated(a, LatticeLabel{1, 1, 1, 0})),
                       doctest::Contains("LevelMismatch"), Error);
  CHECK_THROWS_WITH_AS(static_cast<void>(weakly_separated(a, LatticeLabel{1, 1, 0})),
                       doctest::Contains("LevelMismatch"), Error);
  // general integer vectors: face-level labels of a graph against each other
  CHECK(weakly_separated(LatticeLabel{2, 1, 0, 0}, LatticeLabel{1, 1, 1, 0}));
  CHECK_FALSE(weakly_separated(LatticeLabel{2, 0, 1, 0}, LatticeLabel{1, 1, 0, 1}));
}

TEST_CASE("white labels of minimal graphs are pairwise weakly separated") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 6}, {4, 5}, {2, 5}, {4, 6}}) {
    BtbGraph g = graph_from_grassmannian(k, n);
    // also a move variant of each
    auto sites = find_move_sites(g);
    REQUIRE(!sites.empty());
    for (const BtbGraph& h : {g, apply_move(g, sites.front())}) {
      auto labs = white_labels(h);
      for (size_t a = 0; a < labs.size(); ++a)
        for (size_t b = a + 1; b < labs.size(); ++b) CHECK(weakly_separated(labs[a], labs[b]));
    }
  }
}

TEST_CASE("plabic tiling reconstructs a move-equivalent graph") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 6}, {4, 5}, {2, 5}}) {
    GrassmannianGraph gg = grassmannian_graph(k, n);
    PlabicTiling t = plabic_tiling(white_labels(gg.g));
    CHECK(t.n == n);
    CHECK(t.level == k - 1);
    CHECK(static_cast<int>(t.labels.size()) == (k - 1) * (n - k + 1) + 1);
    // reconstructed graph has the original strand permutation and labels
    StrandData s1 = strands(gg.g), s2 = strands(t.graph.g);
    CHECK(s1.perm == s2.perm);
    CHECK(t.graph.g.whites.size() == gg.g.whites.size());
    // the reconstruction is spider-equivalent to the original (same white
    // label set, so no resplits separate them)
    MoveGraph mg = explore(gg.g, 5000);
    CHECK(mg.index_of(canonical_encoding(t.graph.g)) >= 0);
    // cliques partition consistency: every clique boundary lists member labels
    for (const auto& c : t.cliques) {
      CHECK(c.boundary.size() >= 3);
      for (const auto& z : c.boundary)
        CHECK(std::find(t.labels.begin(), t.labels.end(), z) != t.labels.end());
    }
  }
}

TEST_CASE("plabic tiling rejects bad collections") {
  // non-maximal: drop an internal label of the (3,6) collection
  GrassmannianGraph gg = grassmannian_graph(3, 6);
  auto labs = white_labels(gg.g);
  labs.pop_back();
  std::vector<LatticeLabel> dropped(labs.begin(), labs.end() - 0);
  // drop a non-boundary label: find one whose support is not a cyclic interval
  auto full = white_labels(gg.g);
  std::vector<LatticeLabel> nonmax;
  bool removed = false;
  for (const auto& z : full) {
    if (!removed && z[0] == 1 && z[2] == 1) {  // {1,3}: not an interval
      removed = true;
      continue;
    }
    nonmax.push_back(z);
  }
  REQUIRE(removed);
  CHECK_THROWS_WITH_AS(static_cast<void>(plabic_tiling(nonmax)),
                       doctest::Contains("NotMaximal"), Error);

  // not weakly separated: {1,3} and {2,4} together
  std::vector<LatticeLabel> bad = {from_subset({1, 2}, 4), from_subset({2, 3}, 4),
                                   from_subset({3, 4}, 4), from_subset({1, 4}, 4),
                                   from_subset({1, 3}, 4), from_subset({2, 4}, 4)};
  CHECK_THROWS_WITH_AS(static_cast<void>(plabic_tiling(bad)),
                       doctest::Contains("NotWeaklySeparated"), Error);
}

TEST_CASE("label table accumulates consistently over a move family") {
  BtbGraph g = graph_from_grassmannian(3, 5);
  TcdMap m = construct(g, 2, 5);
  MoveGraph mg = explore(m, 5000);
  REQUIRE(mg.has_maps);
  LabelTable t = collect_labels(mg);
  // the family realizes every 2-subset of [5]: ten labels, ten points
  CHECK(t.entries.size() == 10);
  // graph-only move graphs are rejected
  MoveGraph bare = explore(g, 5000);
  CHECK_THROWS_WITH_AS(static_cast<void>(collect_labels(bare)),
                       doctest::Contains("PreconditionViolated"), Error);
}

TEST_CASE("Desargues collinearity holds across the family") {
  BtbGraph g = graph_from_grassmannian(3, 5);
  TcdMap m = construct(g, 2, 5);
  LabelTable t = collect_labels(explore(m, 5000));
  LatticeReport rep = verify_desargues_map(t);
  CHECK(rep.checked > 0);
  CHECK(rep.ok());

  // perturbing one point breaks exactly the triples through it
  LabelTable bad = t;
  auto it = bad.entries.begin();
  Vec v = it->second.point.h;
  v[0] = v[0] + Scalar(12345);
  v[1] = v[1] + Scalar(7);
  it->second.point = ProjPoint(v);
  LatticeReport rep2 = verify_desargues_map(bad);
  CHECK_FALSE(rep2.ok());
  CHECK(rep2.checked == rep.checked);
}

TEST_CASE("rank-1 families satisfy the lattice multi-ratio identity") {
  for (auto [k, n, seed] : std::vector<std::array<int, 3>>{{3, 5, 5}, {3, 6, 8}, {4, 5, 9}}) {
    BtbGraph g = graph_from_grassmannian(k, n);
    TcdMap m = construct(g, 1, static_cast<std::uint64_t>(seed));
    LabelTable t = collect_labels(explore(m, 20000));
    LatticeReport rep = verify_dskp_lattice(t);
    CHECK(rep.checked > 0);
    CHECK(rep.ok());
  }
}

TEST_CASE("octahedra with missing vertices are reported incomplete") {
  BtbGraph g = graph_from_grassmannian(3, 5);
  TcdMap m = construct(g, 1, 5);
  LabelTable t = collect_labels(explore(m, 20000));
  REQUIRE(t.entries.size() == 10);
  LatticeReport full = verify_dskp_lattice(t);
  CHECK(full.checked == 5);  // one octahedron per 4-subset of [5]
  CHECK(full.incomplete == 0);
  LabelTable partial = t;
  partial.entries.erase(partial.entries.begin());
  LatticeReport rep = verify_dskp_lattice(partial);
  CHECK(rep.checked < full.checked);
  CHECK(rep.incomplete > 0);
  CHECK(rep.ok());
}

TEST_CASE("higher-rank tables are rejected by the rank-1 verifier") {
  BtbGraph g = graph_from_grassmannian(3, 5);
  TcdMap m = construct(g, 2, 5);
  LabelTable t = collect_labels(explore(m, 5000));
  CHECK_THROWS_WITH_AS(static_cast<void>(verify_dskp_lattice(t)),
                       doctest::Contains("PreconditionViolated"), Error);
}
