#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tcd/tcdmap.hpp"

namespace tcd {

// A 2-2 move location: an internal degree-2 white vertex (resplit) or an
// internal quadrilateral face, addressed by its inner-face index (spider).
struct MoveSite {
  enum class Kind { Resplit, Spider };
  Kind kind = Kind::Resplit;
  int target = 0;

  bool operator<(const MoveSite& o) const {
    return std::tie(kind, target) < std::tie(o.kind, o.target);
  }
  bool operator==(const MoveSite& o) const {
    return kind == o.kind && target == o.target;
  }
  std::string str() const;
};

// All resplit sites (internal degree-2 whites joining two distinct blacks)
// and spider sites (internal quad faces with two distinct blacks and two
// distinct whites), in deterministic order.
std::vector<MoveSite> find_move_sites(const BtbGraph& g);

// Graph-level rewirings; `new_white` (resplit) receives the id of the fresh
// internal white. Throw NotMutable when the site preconditions fail.
BtbGraph resplit_graph(const BtbGraph& g, int w0, int* new_white = nullptr);
BtbGraph spider_graph(const BtbGraph& g, int face_index);

// Resplit on a map: rewires the graph and places the new point by the
// weighted vector formula; all other points are unchanged. When requested,
// `dskp_tuple` receives the six involved points in the cyclic order whose
// multi-ratio is -1, and `new_white` the fresh white id. Throws
// IndeterminateMove when the two outer point pairs coincide.
TcdMap resplit(const TcdMap& m, int w0, std::vector<ProjPoint>* dskp_tuple = nullptr,
               int* new_white = nullptr);

// Spider move on a map: points unchanged, graph rewired. Throws
// IndeterminateMove when the two whites off the face carry the same point
// (equivalently, the face's exchange variable is -1).
TcdMap spider(const TcdMap& m, int face_index);

TcdMap apply_move(const TcdMap& m, const MoveSite& s);
BtbGraph apply_move(const BtbGraph& g, const MoveSite& s);

// True iff the cyclic multi-ratio of the six points is exactly -1.
bool dskp_check(const std::vector<ProjPoint>& six);

// Breadth-first closure of a graph (optionally with an attached map) under
// all 2-2 moves, with nodes identified by canonical encoding.
struct MoveGraph {
  struct Arrow {
    int from = 0;
    MoveSite site;  // applied in graphs[from]'s labelling
    int to = 0;
  };
  std::vector<std::string> keys;    // canonical encodings, BFS order
  std::vector<BtbGraph> graphs;     // representative per node
  std::vector<TcdMap> maps;         // parallel to keys when has_maps
  bool has_maps = false;
  int root = 0;
  std::vector<Arrow> arrows;

  int index_of(const std::string& key) const;
  std::set<std::pair<int, int>> undirected_edges() const;
};

// Throws NodeLimitExceeded past max_nodes; with a map attached, every
// rediscovery of a node checks exact point equality under the canonical
// white correspondence and throws ConsistencyViolation on mismatch.
MoveGraph explore(const BtbGraph& g, int max_nodes = 100000);
MoveGraph explore(const TcdMap& m, int max_nodes = 100000);

// Image points listed in canonical white order, for cross-labelling
// comparison of maps on encoding-equal graphs.
std::vector<ProjPoint> canonical_points(const TcdMap& m);

// Explores the move graph (asserting path-independent transport throughout)
// and reports, for every undirected move-graph edge, the length of the
// shortest cycle through it.
struct CycleReport {
  int nodes = 0;
  int edge_count = 0;
  std::set<int> cycle_lengths;
};

CycleReport verify_elementary_cycles(const TcdMap& m, int max_nodes = 100000);

}  // namespace tcd
