#pragma once

#include <map>
#include <vector>

#include "tcd/cluster.hpp"
#include "tcd/tcdmap.hpp"

namespace tcd {

// Star graph of a BTB graph: a bipartite planar map with one white vertex per
// black of the boundary-completed graph (including one boundary white per
// boundary arc) and one black vertex per face. Blacks are not trivalent in
// general, so `g` is only structurally a BtbGraph (rotation data is valid,
// trivalence is not).
struct StarGraph {
  BtbGraph g;
  std::map<int, int> black_of;     // star white id -> black id of the input (0 = boundary)
  std::map<int, int> face_of;      // star black id -> face index of the input
  std::map<int, int> boundary_at;  // arc position p -> star white id
};

// Builds the star graph. Requires a valid, minimal input; throws
// UnsupportedGraph when two consecutive boundary whites are glued (the
// pinched boundary disks would have to be erased).
StarGraph star_graph(const BtbGraph& g);

// The section graph: star graph with every black of degree > 3 split into a
// fan of trivalent blacks and every degree-2 black contracted (contractions
// may glue boundary whites into a cactus). `tree_choice` rotates the fan
// anchor away from the default lowest-id neighbor; different choices give
// graphs related by edge resplits.
BtbGraph section_graph(const BtbGraph& g, int tree_choice = 0);

struct SectionResult {
  BtbGraph sigma_graph;
  TcdMap sigma_map;                 // rank one less, mapped into the chart hyperplane
  std::map<int, int> face_of_white; // rep white id of the input -> face index of sigma_graph
  int tree_choice = 0;
};

// Geometric section: every white of the section graph gets the intersection
// of the line spanned by the points at its incident faces with `plane`,
// expressed in coordinates of the hyperplane. Throws NotOneGeneric,
// NonGenericHyperplane, SpanNotLine.
SectionResult section_map(const TcdMap& m, const Hyperplane& plane, int tree_choice = 0);

// Chain of sections, one per chart, each dropping the rank by one.
std::vector<SectionResult> iterated_sections(const TcdMap& m,
                                             const std::vector<Hyperplane>& charts);

// Side-by-side comparison of the affine cluster structure of `m` (quiver on
// whites, star-ratio variables) with the projective cluster structure of its
// section (quiver on faces, multi-ratio variables) under the white <-> face
// bijection.
struct ClusterComparison {
  struct Entry {
    int white = 0;  // rep white id of the input
    int face = 0;   // face index of the section graph
    bool frozen = false;
    Scalar affine_value;      // defined for mutable entries only
    Scalar projective_value;  // defined for mutable entries only
    bool value_ok = true;
    bool arrows_ok = true;
  };
  std::vector<Entry> entries;
  bool ok = true;
};

ClusterComparison compare_cluster_structures(const TcdMap& m, const Hyperplane& plane,
                                             int tree_choice = 0);

}  // namespace tcd
