#pragma once

#include <map>
#include <vector>

#include "tcd/graph.hpp"

namespace tcd {

// Combinatorics behind graph_from_grassmannian: maximal weakly separated
// collections of j-subsets of [n] and the bipartite graph of their tiling.

// Weak separation of two same-size subsets of the cyclically ordered [n]:
// the symmetric-difference halves must not interleave around the circle.
bool weakly_separated(const std::vector<int>& A, const std::vector<int>& B, int n);

// A maximal weakly separated collection of j-subsets containing all n cyclic
// intervals, built greedily over the lexicographic enumeration.  Its size is
// always j(n-j)+1.  Throws NotWeaklySeparated/NotMaximal on internal errors.
std::vector<std::vector<int>> maximal_ws_collection(int j, int n);

struct GrassmannianGraph {
  BtbGraph g;
  std::map<int, std::vector<int>> labels;  // white record id -> sorted subset
};

// Minimal graph with strand permutation i -> i+k (mod n), together with the
// subset label attached to each white by the tiling construction.
GrassmannianGraph grassmannian_graph(int k, int n);

// Graph of the plabic tiling of an arbitrary maximal weakly separated
// collection of j-subsets of [n] (must contain all cyclic intervals; they
// become the boundary whites). Postconditions as for grassmannian_graph
// with k = j+1.
GrassmannianGraph tiling_graph(const std::vector<std::vector<int>>& coll, int j, int n);

}  // namespace tcd
