#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tcd/moves.hpp"
#include "tcd/tiling.hpp"

namespace tcd {

// Integer vector indexed by strand 1..n; white records live at coordinate
// sum k-1, faces at k, blacks at k-2 (k = mrank+1).
using LatticeLabel = std::vector<int>;

// Symmetric weak separation of two equal-sum integer vectors: the sign
// sequence of z1-z2 (zeros dropped) must not alternate four times.
// Throws LevelMismatch when the coordinate sums differ.
bool weakly_separated(const LatticeLabel& z1, const LatticeLabel& z2);

// Plabic tiling of a maximal weakly separated collection: vertices at exact
// planar positions, clique 2-cells, and the bipartite graph reconstructed by
// triangulating the black cliques.
struct PlabicTiling {
  int n = 0;
  int level = 0;  // common label size
  std::vector<std::vector<int>> labels;  // sorted subsets, lex order
  struct Clique {
    bool black = false;                      // black clique vs face clique
    std::vector<int> key;                    // shared (level-1)- or (level+1)-subset
    std::vector<std::vector<int>> boundary;  // member labels in convex cyclic order
  };
  std::vector<Clique> cliques;  // all cliques with >= 3 members
  GrassmannianGraph graph;      // whites in bijection with the labels

  // Exact planar position of a label: sum of the anchors (3i, -3i^2).
  static std::array<long long, 2> position(const std::vector<int>& z);
};

// Labels as 0/1 lattice vectors, all of one level.  Throws
// NotWeaklySeparated / NotMaximal when the collection fails the
// preconditions.
PlabicTiling plabic_tiling(const std::vector<LatticeLabel>& labels);

// Accumulated label -> point table over a move-graph family of maps.
// Inserts assert single-valuedness (multi-dimensional consistency).
struct LabelTable {
  int n = 0;
  struct Entry {
    ProjPoint point;
    int node = 0;   // move-graph node of first insertion
    int white = 0;  // white record id at that node
  };
  std::map<LatticeLabel, Entry> entries;
};

LabelTable collect_labels(const MoveGraph& mg);

struct LatticeReport {
  int checked = 0;     // complete configurations verified
  int incomplete = 0;  // configurations with a missing vertex, skipped
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Exact collinearity of every black triple {z+e_i, z+e_j, z+e_l} whose three
// labels are all present in the table.
LatticeReport verify_desargues_map(const LabelTable& table);

// For a rank-1 family: every octahedron {z+e_i+e_j : i<j in I}, |I|=4, fully
// present in the table satisfies the six-point multi-ratio identity
// mr(...) = -1 in the frozen vertex order (see dskp_octahedron_order).
LatticeReport verify_dskp_lattice(const LabelTable& table);

// Octahedron vertex order used by verify_dskp_lattice, as index pairs into
// the sorted 4-set I.  Derived from live two-two moves: the six points of a
// move in multi-ratio order occupy these octahedron vertices.
extern const std::array<std::pair<int, int>, 6> dskp_octahedron_order;

}  // namespace tcd
