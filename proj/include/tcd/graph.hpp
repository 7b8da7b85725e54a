#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tcd/error.hpp"

namespace tcd {

// Planar bipartite graph embedded in a disk (or a cactus of disks glued at
// boundary white vertices), with every black vertex trivalent.
//
// The graph is stored in "disk form": every boundary position p in 1..n has
// its own white record, even when the cactus partition glues several
// positions into one vertex. Rotations at internal vertices are cyclic
// counterclockwise lists of edge ids; at a boundary white the list is linear
// in counterclockwise order, starting at the edge nearest the
// counterclockwise-previous boundary arc (the "sink side", toward w_{p-1})
// and ending at the edge nearest the clockwise-next arc (the "source side",
// toward w_{p+1}).
struct BtbGraph {
  struct White {
    int id = 0;
    int boundary = 0;  // position in 1..n, or 0 for internal whites
    std::vector<int> edges;
  };
  struct Black {
    int id = 0;
    std::vector<int> edges;  // cyclic CCW, exactly 3 when valid
  };
  struct Edge {
    int id = 0;
    int black = 0;
    int white = 0;
  };

  int n = 0;
  std::map<int, White> whites;
  std::map<int, Black> blacks;
  std::map<int, Edge> edges;
  std::vector<std::vector<int>> cactus;  // nontrivial blocks (size >= 2)
  int next_id = 1;

  int fresh_id() { return next_id++; }
  int add_white(int boundary_pos);
  int add_black();
  int add_edge(int black, int white);  // appends to both rotations

  const White& white(int id) const;
  const Black& black(int id) const;
  const Edge& edge(int id) const;
  White& white_mut(int id);
  Black& black_mut(int id);

  bool is_white(int vertex_id) const { return whites.count(vertex_id) > 0; }
  int white_at(int pos) const;          // record id at boundary position
  int other_end(int edge_id, int vertex_id) const;

  // Cactus helpers. rep_position(p) is the smallest position glued to p;
  // rep_white(w) the record at that position (identity for internal whites).
  bool glued(int pos) const;
  std::vector<int> block_of(int pos) const;  // sorted positions, incl. pos
  int rep_white(int white_id) const;
  int merged_white_count() const;

  int mrank() const;  // merged |W| - |B| - 1
};

// -------------------------------------------------------------------------
// Faces.

struct FaceCorner {
  int vertex = 0;       // white or black record id; 0 for arc traversals
  int edge_in = 0;      // edge (or -arc position) by which the walk arrives
  int edge_out = 0;     // edge (or -arc position) by which it leaves
};

struct Face {
  int index = 0;
  std::vector<FaceCorner> corners;
  std::vector<int> arcs;      // boundary arc positions p (arc from w_p to w_{p+1})
  std::vector<int> whitesOn;  // white record ids in walk order (may repeat)
  std::vector<int> blacksOn;
  std::vector<int> edgesOn;   // graph edge ids in walk order (may repeat)
  bool is_boundary() const { return !arcs.empty(); }
};

// All inner faces of the embedded graph (outer orbits through the reversed
// boundary arcs are discarded). Throws MalformedEmbedding on inconsistent
// rotation data.
std::vector<Face> trace_faces(const BtbGraph& g);

// -------------------------------------------------------------------------
// Zigzag strands.

struct StrandTurn {
  int vertex = 0;
  bool at_white = false;
  int edge_in = 0;
  int edge_out = 0;
};

struct Strand {
  int source = 0;  // boundary position i (strand starts at source i)
  int sink = 0;    // C(i)
  std::vector<int> edgesCrossed;  // in traversal order
  std::vector<StrandTurn> turns;
};

struct StrandData {
  std::vector<Strand> strands;  // indexed by source position - 1
  std::vector<int> perm;        // perm[i-1] = C(i)
};

StrandData strands(const BtbGraph& g);

struct MinimalityReport {
  bool minimal = true;
  std::string reason;   // empty when minimal
  std::string witness;
};

MinimalityReport is_minimal(const BtbGraph& g);

// -------------------------------------------------------------------------
// Validation.

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;  // non-fatal flags (e.g. glued empty corners)
};

ValidationReport validate(const BtbGraph& g);
void require_valid(const BtbGraph& g);  // throws InvalidGraph

// -------------------------------------------------------------------------
// Strand-side labels.

// 0/1 (left-of-strand) vectors for every white record, black, and face,
// plus the zeroed variant at blacks.
struct BanLabels {
  int n = 0;
  int k = 0;                                  // mrank + 1
  std::map<int, std::vector<int>> whiteAn;    // key: white record id
  std::map<int, std::vector<int>> blackAn;    // key: black id
  std::vector<std::vector<int>> faceAn;       // by face index of trace_faces
  std::map<int, std::vector<int>> blackBan;   // an with incident strands zeroed
};

BanLabels ban_labels(const BtbGraph& g);

std::string label_str(const std::vector<int>& z);  // e.g. "135" / {1,3,5}

// -------------------------------------------------------------------------
// Perfect orientation.

struct PerfectOrientation {
  // For each edge id: true if oriented black -> white.
  std::map<int, bool> black_to_white;
  std::vector<int> sources;            // boundary positions that are sources
  std::vector<int> topo_whites;        // white record ids in a linear
                                       // extension of the orientation poset
                                       // (Kahn, smallest id first)
};

PerfectOrientation perfect_orientation(const BtbGraph& g);

// -------------------------------------------------------------------------
// Canonical encoding (boundary-anchored) used for move-graph deduplication.
// Also returns the white record ids in canonical discovery order.
std::string canonical_encoding(const BtbGraph& g, std::vector<int>* white_order = nullptr);

// Minimal BTB graph with strand permutation i -> i+k mod n.
BtbGraph graph_from_grassmannian(int k, int n);

}  // namespace tcd
