#include "doctest.h"

#include "tcd/io.hpp"
#include "tcd/lattice.hpp"
#include "tcd/moves.hpp"
#include "tcd/tiling.hpp"

using namespace tcd;

namespace {

size_t count_sub(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("graph json round trip is bit-exact and structure preserving") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}, {3, 6}, {4, 6}}) {
    BtbGraph g = graph_from_grassmannian(k, n);
    std::string s1 = graph_to_json(g);
    BtbGraph h = graph_from_json(s1);
    CHECK(graph_to_json(h) == s1);
    CHECK(h.n == g.n);
    CHECK(h.cactus == g.cactus);
    CHECK(canonical_encoding(h) == canonical_encoding(g));
    require_valid(h);
  }
}

TEST_CASE("graph json round trip survives a move") {
  BtbGraph g = graph_from_grassmannian(3, 6);
  g = apply_move(g, find_move_sites(g).front());
  BtbGraph h = graph_from_json(graph_to_json(g));
  CHECK(canonical_encoding(h) == canonical_encoding(g));
}

TEST_CASE("graph json rejects malformed documents") {
  CHECK_THROWS_WITH_AS(graph_from_json("{nope"), doctest::Contains("not valid JSON"), Error);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 3}"), Error);
  // black naming an unknown white
  CHECK_THROWS_AS(graph_from_json(R"({"n":1,"whites":[{"id":1,"boundary":1,"nbrs":[]}],
                                      "blacks":[{"id":2,"nbrs":[9]}]})"),
                  Error);
  // white rotation not matching black rotation
  CHECK_THROWS_AS(graph_from_json(R"({"n":1,"whites":[{"id":1,"boundary":1,"nbrs":[2,2]}],
                                      "blacks":[{"id":2,"nbrs":[1]}]})"),
                  Error);
  // duplicate id across colors
  CHECK_THROWS_AS(graph_from_json(R"({"n":1,"whites":[{"id":1,"boundary":1,"nbrs":[]}],
                                      "blacks":[{"id":1,"nbrs":[]}]})"),
                  Error);
}

TEST_CASE("map json round trip keeps exact points and extras") {
  BtbGraph g = graph_from_grassmannian(3, 6);
  TcdMap m = construct(g, 2, 77);
  Hyperplane hp({Scalar(1), Scalar(-2, 3), Scalar(5)});
  std::string s1 = map_to_json(m, hp, 424242);
  MapDocument doc = map_from_json(s1);
  CHECK(map_to_json(doc.map, doc.hyperplane, doc.seed) == s1);
  CHECK(doc.map.d == m.d);
  CHECK(doc.map.same_points(m));
  REQUIRE(doc.hyperplane.has_value());
  CHECK(doc.hyperplane->cov == hp.cov);
  REQUIRE(doc.seed.has_value());
  CHECK(*doc.seed == 424242);
  // optional fields absent stay absent
  MapDocument bare = map_from_json(map_to_json(m));
  CHECK_FALSE(bare.hyperplane.has_value());
  CHECK_FALSE(bare.seed.has_value());
}

TEST_CASE("map json rejects malformed documents") {
  BtbGraph g = graph_from_grassmannian(2, 4);
  TcdMap m = construct(g, 1, 5);
  std::string s = map_to_json(m);
  CHECK_THROWS_AS(map_from_json("[]"), Error);
  {
    std::string t = s;
    t.replace(t.find("\"d\": 1"), 6, "\"d\": 2");
    CHECK_THROWS_WITH_AS(map_from_json(t), doctest::Contains("coordinates"), Error);
  }
  {
    std::string t = s;
    size_t at = t.find("\"graph\"");
    t.replace(at, t.find(',', t.find('}', at)) - at, "\"graph\": \"/nonexistent.json\"");
    CHECK_THROWS_AS(map_from_json(t), Error);
  }
  // bad rational strings surface as BadRational
  std::string bad = s;
  bad.replace(bad.find("points") - 1, 0, "");
  CHECK_THROWS_AS(scalar_from_string("1/0"), Error);
}

TEST_CASE("error json carries code, message, witness") {
  std::string s = error_to_json(Error("BadDocument", "broken", "w17"));
  CHECK(count_sub(s, "\"code\": \"BadDocument\"") == 1);
  CHECK(count_sub(s, "\"message\": \"broken\"") == 1);
  CHECK(count_sub(s, "\"witness\": \"w17\"") == 1);
}

TEST_CASE("graph svg has one marker per vertex and per edge") {
  BtbGraph g = graph_from_grassmannian(3, 5);
  std::string svg = render_svg(g);
  CHECK(svg.find("<svg") == 0);
  size_t reps = 0;
  for (const auto& [id, w] : g.whites)
    if (g.rep_white(id) == id) ++reps;
  // one frame circle + one per black + one per merged white
  CHECK(count_sub(svg, "<circle") == 1 + g.blacks.size() + reps);
  CHECK(count_sub(svg, "<line") == g.edges.size());
  // with a map attached, labels carry homogeneous coordinates
  TcdMap m = construct(g, 2, 9);
  std::string annotated = render_svg(g, &m);
  CHECK(annotated.find(m.point(g.white_at(1)).str()) != std::string::npos);
}

TEST_CASE("tiling svg places every label and clique") {
  GrassmannianGraph gg = grassmannian_graph(3, 5);
  std::vector<LatticeLabel> labels;
  for (const auto& [w, lab] : gg.labels) {
    std::vector<int> v(5, 0);
    for (int i : lab) v[i - 1] = 1;
    labels.push_back(v);
  }
  PlabicTiling t = plabic_tiling(labels);
  std::string svg = render_tiling_svg(t);
  CHECK(count_sub(svg, "<circle") == t.labels.size());
  CHECK(count_sub(svg, "<polygon") == t.cliques.size());
  CHECK(count_sub(svg, "<text") == t.labels.size());
}
