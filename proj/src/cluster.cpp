#include "tcd/cluster.hpp"

#include <algorithm>

namespace tcd {

namespace {

std::string itos(int v) { return std::to_string(v); }

// The three neighbor rep whites of black `b` with the rotation anchored at
// the edge to `w` first: returns (w_i, w'_i) so that CCW order is (w, w_i, w'_i).
std::pair<int, int> flanks(const BtbGraph& g, int b, int edge_to_w) {
  auto rot = g.black(b).edges;
  while (rot[0] != edge_to_w) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  return {g.rep_white(g.edge(rot[1]).white), g.rep_white(g.edge(rot[2]).white)};
}

Vrc some_vrc(const TcdMap& m) {
  std::vector<ProjPoint> pts;
  for (const auto& [wid, p] : m.points) pts.push_back(p);
  return vrc_of(m, chart_avoiding(pts, m.d));
}

}  // namespace

int Quiver::nu(int u, int v) const {
  if (u == v) return 0;
  auto it = arrows.find({std::min(u, v), std::max(u, v)});
  if (it == arrows.end()) return 0;
  return u < v ? it->second : -it->second;
}

void Quiver::add_arrow(int u, int v, int mult) {
  if (u == v) return;  // self-loops dropped
  int& slot = arrows[{std::min(u, v), std::max(u, v)}];
  slot += (u < v ? mult : -mult);
  if (slot == 0) arrows.erase({std::min(u, v), std::max(u, v)});
}

int Quiver::degree(int v) const {
  int d = 0;
  for (const auto& [key, val] : arrows)
    if (key.first == v || key.second == v) d += std::abs(val);
  return d;
}

Quiver projective_quiver(const BtbGraph& g) {
  auto faces = trace_faces(g);
  Quiver q;
  for (const Face& f : faces) {
    q.vertices.insert(f.index);
    if (f.is_boundary()) q.frozen.insert(f.index);
  }
  // face index at the corner of a black vertex, keyed by the arriving edge
  std::map<std::pair<int, int>, int> corner;
  for (const Face& f : faces)
    for (const FaceCorner& c : f.corners)
      if (c.vertex != 0 && !g.is_white(c.vertex)) corner[{c.vertex, c.edge_in}] = f.index;
  // Around a black with CCW edges (e0,e1,e2) the faces in CCW order are
  // F_i = corner(b, e_i); the dual arrow across e_{i+1} goes F_i -> F_{i+1}.
  for (const auto& [bid, b] : g.blacks) {
    for (int i = 0; i < 3; ++i) {
      int from = corner.at({bid, b.edges[(i + 1) % 3]});
      int to = corner.at({bid, b.edges[i]});
      q.add_arrow(from, to);
    }
  }
  return q;
}

Quiver affine_quiver(const BtbGraph& g) {
  Quiver q;
  for (const auto& [wid, w] : g.whites) {
    if (g.rep_white(wid) != wid) continue;
    q.vertices.insert(wid);
    if (w.boundary != 0) q.frozen.insert(wid);
  }
  // Clockwise triangle around each black: CCW reps (a, b, c) give arrows
  // a -> c -> b -> a.
  for (const auto& [bid, b] : g.blacks) {
    int a = g.rep_white(g.edge(b.edges[0]).white);
    int m = g.rep_white(g.edge(b.edges[1]).white);
    int c = g.rep_white(g.edge(b.edges[2]).white);
    q.add_arrow(a, c);
    q.add_arrow(c, m);
    q.add_arrow(m, a);
  }
  for (int p = 1; p <= g.n; ++p) {
    int from = g.rep_white(g.white_at(p % g.n + 1));
    int to = g.rep_white(g.white_at(p));
    q.add_arrow(from, to);
  }
  return q;
}

std::map<int, Scalar> x_variables(const TcdMap& m) {
  Vrc v = some_vrc(m);
  std::map<int, Scalar> out;
  for (const Face& f : trace_faces(m.g)) {
    if (f.is_boundary()) continue;
    Scalar x = 1;
    int blacks = 0;
    for (const FaceCorner& c : f.corners) {
      if (m.g.is_white(c.vertex)) continue;
      x *= v.weights.at(c.edge_out) / v.weights.at(c.edge_in);
      ++blacks;
    }
    if (blacks % 2 == 0) x = -x;  // (-1)^(m+1)
    out[f.index] = x;
  }
  return out;
}

std::map<int, Scalar> y_variables(const TcdMap& m, const Hyperplane& chart) {
  Vrc v = vrc_of(m, chart);
  std::map<int, Scalar> out;
  for (const auto& [wid, w] : m.g.whites) {
    if (w.boundary != 0) continue;
    Scalar y = 1;
    for (int e : w.edges) {
      int b = m.g.edge(e).black;
      auto rot = m.g.black(b).edges;
      while (rot[0] != e) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      y *= v.weights.at(rot[2]) / v.weights.at(rot[1]);
    }
    if (w.edges.size() % 2 == 0) y = -y;  // (-1)^(m+1)
    out[wid] = y;
  }
  return out;
}

Quiver mutate(const Quiver& q, int v) {
  if (!q.vertices.count(v) || q.frozen.count(v))
    throw Error("NotMutable", "mutation vertex is frozen or absent", "vertex " + itos(v));
  if (q.degree(v) != 4)
    throw Error("UnsupportedDegree",
                "mutation is only supported at degree-4 vertices, got degree " +
                    itos(q.degree(v)),
                "vertex " + itos(v));
  Quiver out;
  out.vertices = q.vertices;
  out.frozen = q.frozen;
  std::vector<int> verts(q.vertices.begin(), q.vertices.end());
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      int a = verts[i], b = verts[j];
      int nv;
      if (a == v || b == v) {
        nv = -q.nu(a, b);
      } else {
        nv = q.nu(a, b) + std::max(0, q.nu(a, v)) * std::max(0, q.nu(v, b)) -
             std::max(0, q.nu(b, v)) * std::max(0, q.nu(v, a));
      }
      if (nv != 0) out.add_arrow(a, b, nv);
    }
  }
  if (!q.values.empty()) {
    Scalar xv = q.values.at(v);
    if (xv == -1)
      throw Error("MutationSingular", "exchange variable is -1 at the mutation vertex",
                  "vertex " + itos(v));
    for (const auto& [u, xu] : q.values) {
      if (u == v) {
        out.values[u] = 1 / xv;
      } else if (q.nu(v, u) > 0) {
        Scalar f = 1 + xv;
        Scalar r = xu;
        for (int i = 0; i < q.nu(v, u); ++i) r *= f;
        out.values[u] = r;
      } else if (q.nu(u, v) > 0) {
        Scalar f = 1 + 1 / xv;
        Scalar r = xu;
        for (int i = 0; i < q.nu(u, v); ++i) r /= f;
        out.values[u] = r;
      } else {
        out.values[u] = xu;
      }
    }
  }
  return out;
}

EmbeddedQuiver embedded_affine_quiver(const BtbGraph& g) {
  EmbeddedQuiver eq;
  eq.q = affine_quiver(g);
  // Rotations: around each white, the CCW neighbor cycle lists, per incident
  // black in CCW edge order, that black's two remaining whites (w_i, w'_i);
  // boundary whites get the previous/next merged boundary whites at the ends.
  for (const auto& [wid, w] : g.whites) {
    if (g.rep_white(wid) != wid) continue;
    std::vector<int> nb;
    std::vector<int> edges = w.edges;
    if (w.boundary != 0 && g.glued(w.boundary)) {
      // Concatenate the rotations of all records in the block, in position
      // order, to keep every incident black represented once.
      edges.clear();
      for (int pos : g.block_of(w.boundary))
        for (int e : g.white(g.white_at(pos)).edges) edges.push_back(e);
    }
    for (int e : edges) {
      auto [wi, wpi] = flanks(g, g.edge(e).black, e);
      nb.push_back(wi);
      nb.push_back(wpi);
    }
    if (w.boundary != 0) {
      int p = w.boundary;
      nb.insert(nb.begin(), g.rep_white(g.white_at((p + g.n - 2) % g.n + 1)));
      nb.push_back(g.rep_white(g.white_at(p % g.n + 1)));
    }
    eq.rot[wid] = nb;
  }
  for (int p = 1; p <= g.n; ++p) {
    int r = g.rep_white(g.white_at(p));
    if (eq.boundary.empty() || eq.boundary.back() != r) eq.boundary.push_back(r);
  }
  // Clockwise faces: one triangle per black, vertices in CW cyclic order.
  for (const auto& [bid, b] : g.blacks) {
    int a = g.rep_white(g.edge(b.edges[0]).white);
    int m = g.rep_white(g.edge(b.edges[1]).white);
    int c = g.rep_white(g.edge(b.edges[2]).white);
    eq.cw_faces.push_back({a, c, m});
  }
  // The embedding drops cancelled arrows. Cancellations between two frozen
  // vertices are harmless (boundary arrows netting against black triangles),
  // but any cancellation at a mutable vertex (e.g. the diagonal of a
  // quadrilateral face) makes the quiver non-planar-dual-bipartite.
  for (const auto& [wid, nb] : eq.rot) {
    if (eq.q.frozen.count(wid)) continue;
    std::map<int, int> seen;
    for (int u : nb) seen[u]++;
    for (const auto& [u, cnt] : seen) {
      int expect = std::abs(eq.q.nu(wid, u));
      if (cnt != expect)
        throw Error("NotPDB", "embedding has cancelled or parallel quiver arrows",
                    "vertices " + itos(wid) + "," + itos(u));
    }
  }
  return eq;
}

BtbGraph t_graph_from_quiver(const EmbeddedQuiver& eq) {
  BtbGraph g;
  g.n = static_cast<int>(eq.boundary.size());
  std::map<int, int> pos;
  for (int i = 0; i < g.n; ++i) pos[eq.boundary[i]] = i + 1;
  int max_id = 0;
  for (int v : eq.q.vertices) max_id = std::max(max_id, v);
  g.next_id = max_id + 1;
  for (int v : eq.q.vertices)
    g.whites[v] = {v, pos.count(v) ? pos[v] : 0, {}};

  // corner (v, pred, succ) in v's CCW rotation -> black edge ids to insert.
  std::map<std::tuple<int, int, int>, std::vector<int>> corner_edges;
  for (const auto& face : eq.cw_faces) {
    int k = static_cast<int>(face.size());
    if (k < 3) throw Error("NotPDB", "clockwise face with fewer than 3 vertices");
    // Fan triangulation from the lowest-id vertex: rotate it to the front.
    std::vector<int> f = face;
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    std::vector<int> blacks;  // black of triangle (f0, f[j], f[j+1]), j=1..k-2
    for (int j = 1; j + 1 < k; ++j) {
      int b = g.fresh_id();
      g.blacks[b] = {b, {}};
      blacks.push_back(b);
      // The triangle is CW-oriented, so the CCW rotation is reversed.
      for (int wrec : {f[0], f[j + 1], f[j]}) {
        int e = g.fresh_id();
        g.edges[e] = {e, b, wrec};
        g.blacks[b].edges.push_back(e);
      }
    }
    auto edge_of = [&](int b, int wrec) {
      for (int e : g.blacks[b].edges)
        if (g.edges[e].white == wrec) return e;
      throw Error("NotPDB", "internal triangulation error");
    };
    // Corner of the face at each vertex: predecessor/successor in CW walk;
    // in the CCW rotation at the vertex the pair appears as (pred, succ).
    for (int t = 0; t < k; ++t) {
      int v = f[t];
      int pred = f[(t + k - 1) % k];
      int succ = f[(t + 1) % k];
      std::vector<int> es;
      if (t == 0) {
        for (int j = k - 3; j >= 0; --j) es.push_back(edge_of(blacks[j], v));
      } else {
        if (t >= 2) es.push_back(edge_of(blacks[t - 2], v));
        if (t + 1 < k) es.push_back(edge_of(blacks[t - 1], v));
      }
      corner_edges[{v, pred, succ}].insert(corner_edges[{v, pred, succ}].end(), es.begin(),
                                           es.end());
    }
  }

  for (int v : eq.q.vertices) {
    const auto& nb = eq.rot.at(v);
    int len = static_cast<int>(nb.size());
    bool bdry = pos.count(v) > 0;
    std::vector<int> rot;
    int pairs = bdry ? len - 1 : len;  // boundary rotations are linear
    for (int t = 0; t < pairs; ++t) {
      auto it = corner_edges.find({v, nb[t], nb[(t + 1) % len]});
      if (it == corner_edges.end()) continue;
      rot.insert(rot.end(), it->second.begin(), it->second.end());
    }
    g.whites[v].edges = rot;
  }
  require_valid(g);
  return g;
}

Scalar t_variable(const EmbeddedQuiver& eq, int v, const std::map<int, ProjPoint>& t,
                  const Hyperplane& chart) {
  if (eq.q.frozen.count(v))
    throw Error("NotPDB", "star-ratio values are defined at mutable vertices only",
                "vertex " + itos(v));
  const auto& nb = eq.rot.at(v);
  if (nb.empty() || nb.size() % 2 != 0)
    throw Error("NotPDB", "odd neighbor count at a mutable vertex", "vertex " + itos(v));
  // Neighbors must alternate incoming/outgoing in CCW order; rotate so an
  // incoming neighbor leads.
  std::vector<int> cyc = nb;
  if (eq.q.nu(cyc[0], v) <= 0) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
  Scalar y = -1;
  for (size_t i = 0; i < cyc.size(); i += 2) {
    int in = cyc[i], out = cyc[i + 1];
    if (eq.q.nu(in, v) <= 0 || eq.q.nu(v, out) <= 0)
      throw Error("NotPDB", "arrows at a vertex do not alternate", "vertex " + itos(v));
    y *= olr(t.at(in), t.at(out), t.at(v), chart);
  }
  return y;
}

}  // namespace tcd
