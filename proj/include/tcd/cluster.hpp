#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tcd/tcdmap.hpp"

namespace tcd {

// Quiver without self-loops or oriented 2-cycles, encoded by the antisymmetric
// arrow form nu. Vertex ids are external tags (inner-face indices for the
// projective quiver, white record ids for the affine quiver).
struct Quiver {
  std::set<int> vertices;
  std::set<int> frozen;
  std::map<std::pair<int, int>, int> arrows;  // keyed (u, v) with u < v: net u -> v
  std::map<int, Scalar> values;               // mutable vertices only (may be empty)

  int nu(int u, int v) const;
  void add_arrow(int u, int v, int mult = 1);  // accumulates, cancels 2-cycles
  int degree(int v) const;                     // sum of |nu(v, .)|
  bool same_shape(const Quiver& o) const {
    return vertices == o.vertices && frozen == o.frozen && arrows == o.arrows;
  }
};

// Oriented dual of the graph: a mutable vertex per inner face (face index
// from trace_faces), a frozen vertex per boundary face; one arrow across each
// edge, oriented counterclockwise around the black endpoint.
Quiver projective_quiver(const BtbGraph& g);

// A mutable vertex per internal white, frozen per merged boundary white;
// a clockwise triangle of arrows around each black vertex and one boundary
// arrow per gap, with 2-cycles cancelled.
Quiver affine_quiver(const BtbGraph& g);

// Exchange variable of each inner face, computed from any VRC of the map
// (gauge-invariant alternating weight ratio).
std::map<int, Scalar> x_variables(const TcdMap& m);

// Affine exchange variable of each internal white in the affine gauge of
// `chart`. Throws NonGenericHyperplane.
std::map<int, Scalar> y_variables(const TcdMap& m, const Hyperplane& chart);

// Quiver mutation at a degree-4 mutable vertex, updating nu by the standard
// rule and the values by the exchange relation. Throws NotMutable (frozen or
// unknown vertex), UnsupportedDegree (degree != 4), MutationSingular
// (value -1 at the mutation vertex).
Quiver mutate(const Quiver& q, int v);

// -------------------------------------------------------------------------
// Planar dual-bipartite (PDB) quivers with an explicit embedding, and the
// bridge from point assignments on them to maps on a bipartite graph.

struct EmbeddedQuiver {
  Quiver q;
  std::map<int, std::vector<int>> rot;  // CCW neighbor cycle per vertex
                                        // (linear at boundary vertices)
  std::vector<int> boundary;            // frozen vertices, boundary order
  std::vector<std::vector<int>> cw_faces;  // clockwise faces as CW vertex cycles
};

// The affine quiver of `g` together with its inherited planar embedding;
// clockwise faces are the black triangles. Throws NotPDB when arrow
// cancellations make the embedding inconsistent (parallel quiver edges).
EmbeddedQuiver embedded_affine_quiver(const BtbGraph& g);

// Triangulates every clockwise face (fan from its lowest-id vertex) and
// replaces each triangle by a trivalent black vertex; whites keep the quiver
// vertex ids, so affine_quiver of the result reproduces q. Throws NotPDB.
BtbGraph t_graph_from_quiver(const EmbeddedQuiver& eq);

// Star-ratio value at a mutable vertex of a point assignment on the quiver:
// -prod lambda(t(v_i), t(v'_i), t(v)) over the CCW-paired incoming/outgoing
// neighbors. Throws NotPDB when the arrows at v do not alternate.
Scalar t_variable(const EmbeddedQuiver& eq, int v, const std::map<int, ProjPoint>& t,
                  const Hyperplane& chart);

}  // namespace tcd
