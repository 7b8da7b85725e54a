#include "tcd/sections.hpp"

#include <algorithm>
#include <array>

namespace tcd {

namespace {

std::string itos(int v) { return std::to_string(v); }

// Replaces one occurrence of `old_edge` in `rot` by the sequence `repl`.
void splice(std::vector<int>& rot, int old_edge, const std::vector<int>& repl) {
  auto it = std::find(rot.begin(), rot.end(), old_edge);
  if (it == rot.end())
    throw Error("ConsistencyViolation", "edge missing from rotation during section build",
                "edge " + itos(old_edge));
  it = rot.erase(it);
  rot.insert(it, repl.begin(), repl.end());
}

// Merges the cactus blocks containing positions p and q.
void glue_positions(BtbGraph& h, int p, int q) {
  std::vector<int> merged{p, q};
  for (auto it = h.cactus.begin(); it != h.cactus.end();) {
    if (std::count(it->begin(), it->end(), p) || std::count(it->begin(), it->end(), q)) {
      merged.insert(merged.end(), it->begin(), it->end());
      it = h.cactus.erase(it);
    } else {
      ++it;
    }
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  h.cactus.push_back(merged);
}

}  // namespace

StarGraph star_graph(const BtbGraph& g) {
  require_valid(g);
  MinimalityReport min = is_minimal(g);
  if (!min.minimal)
    throw Error("PreconditionViolated", "star graph requires a minimal input: " + min.reason,
                min.witness);
  for (int p = 1; p <= g.n; ++p) {
    int q = p % g.n + 1;
    if (g.rep_white(g.white_at(p)) == g.rep_white(g.white_at(q)))
      throw Error("UnsupportedGraph", "consecutive boundary whites are glued",
                  "positions " + itos(p) + "," + itos(q));
  }

  StarGraph s;
  s.g.n = g.n;
  std::map<int, int> white_of;  // black of g -> star white id
  for (const auto& [bid, b] : g.blacks) {
    int id = s.g.fresh_id();
    s.g.whites[id] = {id, 0, {}};
    white_of[bid] = id;
    s.black_of[id] = bid;
  }
  for (int p = 1; p <= g.n; ++p) {
    int id = s.g.fresh_id();
    s.g.whites[id] = {id, p, {}};
    s.black_of[id] = 0;
    s.boundary_at[p] = id;
  }
  // One star black per face; its rotation lists the face's black corners and
  // boundary arcs in walk order. Star edges are keyed by the corner (black,
  // arriving edge) so that white rotations can be assembled afterwards.
  std::map<std::pair<int, int>, int> corner_edge;
  for (const Face& f : trace_faces(g)) {
    int bid = s.g.fresh_id();
    s.g.blacks[bid] = {bid, {}};
    s.face_of[bid] = f.index;
    for (const FaceCorner& c : f.corners) {
      if (c.edge_in < 0) {
        // the walk traversed boundary arc p; the boundary black of that arc
        // belongs to this face
        int wid = s.boundary_at.at(-c.edge_in);
        int e = s.g.fresh_id();
        s.g.edges[e] = {e, bid, wid};
        s.g.blacks[bid].edges.push_back(e);
        s.g.whites[wid].edges.push_back(e);
      } else if (!g.is_white(c.vertex)) {
        int e = s.g.fresh_id();
        s.g.edges[e] = {e, bid, white_of.at(c.vertex)};
        s.g.blacks[bid].edges.push_back(e);
        corner_edge[{c.vertex, c.edge_in}] = e;
      }
    }
  }
  // Star blacks keep the walk order; star-white rotations are the reversed
  // corner order and boundary positions are relabeled p -> n+1-p below. This
  // orientation (rather than its mirror image) is the one under which the
  // affine cluster structure of a map coincides with the projective cluster
  // structure of its section; the mirror image has the same strand
  // permutation on all rotation-symmetric graphs, so only the cluster
  // comparison distinguishes the two.
  // Rotation at the star white of black b: the corners of b in the reversed
  // order of b's edges.
  for (const auto& [bid, b] : g.blacks) {
    auto& rot = s.g.whites[white_of.at(bid)].edges;
    for (auto it = b.edges.rbegin(); it != b.edges.rend(); ++it)
      rot.push_back(corner_edge.at({bid, *it}));
  }
  // Boundary position relabeling for the flipped orientation. boundary_at
  // stays keyed by the input arc position.
  for (auto& [id, w] : s.g.whites)
    if (w.boundary != 0) w.boundary = s.g.n + 1 - w.boundary;
  return s;
}

BtbGraph section_graph(const BtbGraph& g, int tree_choice) {
  StarGraph s = star_graph(g);
  BtbGraph h = s.g;

  // Split every black of degree > 3 into a caterpillar of trivalent blacks
  // joined through fresh degree-2 whites (the strand-preserving split; the
  // new whites are exactly resplit sites, so different anchors give graphs
  // related by resplits). The caterpillar is anchored at (an offset from)
  // the lowest-id neighbor.
  std::vector<int> black_ids;
  for (const auto& [bid, b] : h.blacks) black_ids.push_back(bid);
  for (int bid : black_ids) {
    int m = static_cast<int>(h.black(bid).edges.size());
    if (m < 2)
      throw Error("UnsupportedGraph", "star black of degree < 2", "black " + itos(bid));
    if (m <= 3) continue;
    std::vector<int> es = h.black(bid).edges;
    int best = 0;
    for (int i = 1; i < m; ++i)
      if (h.edge(es[i]).white < h.edge(es[best]).white) best = i;
    std::rotate(es.begin(), es.begin() + (best + tree_choice % m + m) % m, es.end());
    std::vector<int> u(m);
    for (int i = 0; i < m; ++i) u[i] = h.edge(es[i]).white;

    // blacks c_1..c_{m-2}: c_j is CCW adjacent to (x_{j-1}, u_j, x_j) where
    // x_0 = u_0, x_{m-2} = u_{m-1} and x_1..x_{m-3} are fresh whites
    int prev_white = u[0];
    for (int j = 1; j + 1 < m; ++j) {
      int nb = h.fresh_id();
      int e_prev = h.fresh_id();  // to x_{j-1}
      int e_out = h.fresh_id();   // to u_j
      h.blacks[nb] = {nb, {e_prev, e_out}};
      h.edges[e_prev] = {e_prev, nb, prev_white};
      h.edges[e_out] = {e_out, nb, u[j]};
      if (j == 1) {
        splice(h.white_mut(u[0]).edges, es[0], {e_prev});
      } else {
        h.white_mut(prev_white).edges.push_back(e_prev);
      }
      splice(h.white_mut(u[j]).edges, es[j], {e_out});
      if (j + 2 < m) {
        int x = h.fresh_id();
        h.whites[x] = {x, 0, {}};
        int e_next = h.fresh_id();
        h.edges[e_next] = {e_next, nb, x};
        h.blacks[nb].edges.push_back(e_next);
        h.whites[x].edges.push_back(e_next);
        prev_white = x;
      } else {
        int e_last = h.fresh_id();
        h.edges[e_last] = {e_last, nb, u[m - 1]};
        h.blacks[nb].edges.push_back(e_last);
        splice(h.white_mut(u[m - 1]).edges, es[m - 1], {e_last});
      }
    }
    for (int e : es) h.edges.erase(e);
    h.blacks.erase(bid);
  }

  // Contract every degree-2 black. Interior endpoints are merged by splicing
  // rotations; two boundary endpoints pinch the disk and glue the cactus.
  black_ids.clear();
  for (const auto& [bid, b] : h.blacks) black_ids.push_back(bid);
  for (int bid : black_ids) {
    if (h.black(bid).edges.size() != 2) continue;
    int e1 = h.black(bid).edges[0], e2 = h.black(bid).edges[1];
    int wu = h.edge(e1).white, wv = h.edge(e2).white;
    if (wu == wv)
      throw Error("UnsupportedGraph", "contraction would create a self-loop",
                  "white " + itos(wu));
    bool bu = h.white(wu).boundary != 0, bv = h.white(wv).boundary != 0;
    if (bu && bv) {
      auto& ru = h.white_mut(wu).edges;
      auto& rv = h.white_mut(wv).edges;
      ru.erase(std::find(ru.begin(), ru.end(), e1));
      rv.erase(std::find(rv.begin(), rv.end(), e2));
      glue_positions(h, h.white(wu).boundary, h.white(wv).boundary);
    } else {
      if (bv) {
        std::swap(wu, wv);
        std::swap(e1, e2);
      }
      // splice v's rotation (minus e2, starting after it) into u's slot at e1
      std::vector<int> seq = h.white(wv).edges;
      auto it = std::find(seq.begin(), seq.end(), e2);
      std::rotate(seq.begin(), it, seq.end());
      seq.erase(seq.begin());
      for (int e : seq) h.edges[e].white = wu;
      splice(h.white_mut(wu).edges, e1, seq);
      h.whites.erase(wv);
    }
    h.edges.erase(e1);
    h.edges.erase(e2);
    h.blacks.erase(bid);
  }

  require_valid(h);
  return h;
}

namespace {

// face of the section graph matching each rep white of the input, by strand
// label
std::map<int, int> match_faces(const BtbGraph& g, const BtbGraph& sigma) {
  BanLabels lg = ban_labels(g);
  BanLabels ls = ban_labels(sigma);
  std::map<std::string, int> face_by_label;
  for (size_t i = 0; i < ls.faceAn.size(); ++i) {
    std::string key = label_str(ls.faceAn[i]);
    if (face_by_label.count(key))
      throw Error("ConsistencyViolation", "duplicate face label in section graph", key);
    face_by_label[key] = static_cast<int>(i);
  }
  // The face of the section around input white w carries the white's strand
  // label relabeled by s -> n+2-C(s): the section reverses strands relative
  // to the input, and the strand through positions (s-1, s) of the input
  // corresponds to the section strand ending at C(s)-1.
  StrandData sd = strands(g);
  std::map<int, int> out;
  for (const auto& [wid, w] : g.whites) {
    if (g.rep_white(wid) != wid) continue;
    const std::vector<int>& old = lg.whiteAn.at(wid);
    std::vector<int> lab(g.n, 0);
    for (int s = 1; s <= g.n; ++s)
      if (old[s - 1]) lab[(g.n + 1 - sd.perm[s - 1]) % g.n] = 1;
    std::string key = label_str(lab);
    auto it = face_by_label.find(key);
    if (it == face_by_label.end())
      throw Error("ConsistencyViolation",
                  "white label has no matching face in the section graph",
                  "white " + itos(wid) + " label " + key);
    out[wid] = it->second;
  }
  if (out.size() != ls.faceAn.size())
    throw Error("ConsistencyViolation", "white/face label matching is not a bijection");
  return out;
}

}  // namespace

SectionResult section_map(const TcdMap& m, const Hyperplane& plane, int tree_choice) {
  if (m.d < 2)
    throw Error("NotOneGeneric", "sections require rank at least 2", "d=" + itos(m.d));
  std::string witness;
  if (!is_one_generic(m, &witness))
    throw Error("NotOneGeneric", "map is not 1-generic", witness);
  for (const auto& [wid, p] : m.points)
    if (dot(plane.cov, p.h) == 0)
      throw Error("NonGenericHyperplane", "hyperplane passes through a map point",
                  "white " + itos(wid));

  SectionResult out;
  out.tree_choice = tree_choice;
  out.sigma_graph = section_graph(m.g, tree_choice);
  out.face_of_white = match_faces(m.g, out.sigma_graph);
  std::map<int, int> white_of_face;
  for (const auto& [w, f] : out.face_of_white) white_of_face[f] = w;

  // whites of the input incident to each white of the section graph, via the
  // faces around it
  std::map<int, std::vector<int>> incident;
  for (const Face& f : trace_faces(out.sigma_graph))
    for (int wid : f.whitesOn) {
      auto& lst = incident[out.sigma_graph.rep_white(wid)];
      int w = white_of_face.at(f.index);
      if (std::find(lst.begin(), lst.end(), w) == lst.end()) lst.push_back(w);
    }

  // hyperplane coordinates: the RREF kernel basis of the covector lets us
  // read coordinates off the pivot columns
  Mat basis = kernel(Mat{plane.cov});
  std::vector<int> pivots = rref(basis);

  std::map<int, ProjPoint> pts;
  for (const auto& [wid, w] : out.sigma_graph.whites) {
    if (out.sigma_graph.rep_white(wid) != wid) continue;
    Mat span;
    for (int v : incident.at(wid)) span.push_back(m.point(v).h);
    Mat reduced = span;
    std::vector<int> piv = rref(reduced);
    if (piv.size() != 2)
      throw Error("SpanNotLine", "incident points do not span a line",
                  "section white " + itos(wid) + " spans dimension " + itos(piv.size()));
    const Vec& p1 = reduced[0];
    const Vec& p2 = reduced[1];
    Scalar a = dot(plane.cov, p1), b = dot(plane.cov, p2);
    Vec v = sub(scale(b, p1), scale(a, p2));
    if (is_zero(v))
      throw Error("NonGenericHyperplane", "hyperplane contains a section line",
                  "section white " + itos(wid));
    Vec coords(pivots.size());
    for (size_t i = 0; i < pivots.size(); ++i) coords[i] = v[pivots[i]];
    pts[wid] = ProjPoint(coords);
  }
  out.sigma_map = TcdMap{out.sigma_graph, m.d - 1, pts};
  require_valid_map(out.sigma_map);
  return out;
}

std::vector<SectionResult> iterated_sections(const TcdMap& m,
                                             const std::vector<Hyperplane>& charts) {
  if (static_cast<int>(charts.size()) > m.d - 1)
    throw Error("PreconditionViolated", "at most rank-1 iterated sections exist",
                itos(charts.size()) + " charts for rank " + itos(m.d));
  std::vector<SectionResult> out;
  const TcdMap* cur = &m;
  for (const Hyperplane& h : charts) {
    out.push_back(section_map(*cur, h));
    cur = &out.back().sigma_map;
  }
  return out;
}

ClusterComparison compare_cluster_structures(const TcdMap& m, const Hyperplane& plane,
                                             int tree_choice) {
  SectionResult s = section_map(m, plane, tree_choice);
  Quiver qa = affine_quiver(m.g);
  Quiver qp = projective_quiver(s.sigma_graph);
  std::map<int, Scalar> ys = y_variables(m, plane);
  std::map<int, Scalar> xs = x_variables(s.sigma_map);

  ClusterComparison rep;
  for (int w : qa.vertices) {
    ClusterComparison::Entry e;
    e.white = w;
    e.face = s.face_of_white.at(w);
    e.frozen = qa.frozen.count(w) > 0;
    if (e.frozen != (qp.frozen.count(e.face) > 0)) {
      e.arrows_ok = false;
    } else if (!e.frozen) {
      e.affine_value = ys.at(w);
      e.projective_value = xs.at(e.face);
      e.value_ok = e.affine_value == e.projective_value;
    }
    for (int w2 : qa.vertices)
      if (qa.nu(w, w2) != qp.nu(e.face, s.face_of_white.at(w2))) e.arrows_ok = false;
    if (!e.value_ok || !e.arrows_ok) rep.ok = false;
    rep.entries.push_back(e);
  }
  if (qa.vertices.size() != qp.vertices.size()) rep.ok = false;
  return rep;
}

}  // namespace tcd
