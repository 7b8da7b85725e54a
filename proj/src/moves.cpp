#include "tcd/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <tuple>

namespace tcd {

namespace {

std::string itos(int v) { return std::to_string(v); }

// Rotates a black rotation so that `first` leads; the list stays CCW-cyclic.
std::vector<int> anchored(const std::vector<int>& rot, int first) {
  auto it = std::find(rot.begin(), rot.end(), first);
  std::vector<int> out(it, rot.end());
  out.insert(out.end(), rot.begin(), it);
  return out;
}

// Replaces the single occurrence of `old_edge` in `rot` by `repl` in place.
void splice_rotation(std::vector<int>& rot, int old_edge, const std::vector<int>& repl) {
  auto it = std::find(rot.begin(), rot.end(), old_edge);
  it = rot.erase(it);
  rot.insert(it, repl.begin(), repl.end());
}

// Removes the adjacent pair (e_first, e_second) from a rotation (cyclically
// adjacent in that order) and inserts `repl` at the gap.
void splice_pair(std::vector<int>& rot, int e_first, int e_second, int repl) {
  splice_rotation(rot, e_second, {});
  splice_rotation(rot, e_first, {repl});
}

struct ResplitFrame {
  int b1 = 0, b2 = 0;          // old blacks, b1 < b2
  int e1 = 0, e2 = 0;          // w0-b1 and w0-b2 edges
  int eA = 0, eB = 0;          // b1 CCW from w0: (w0, A, B)
  int eC = 0, eD = 0;          // b2 CCW from w0: (w0, C, D)
  int wA = 0, wB = 0, wC = 0, wD = 0;  // white record ids
  int w_new = 0, nb1 = 0, nb2 = 0;     // fresh vertices
};

BtbGraph resplit_rewire(const BtbGraph& g, int w0, ResplitFrame& fr) {
  const auto& w = g.white(w0);
  if (w.boundary != 0 || w.edges.size() != 2)
    throw Error("NotMutable", "resplit target is not an internal degree-2 white",
                "white " + itos(w0));
  fr.e1 = w.edges[0];
  fr.e2 = w.edges[1];
  fr.b1 = g.edge(fr.e1).black;
  fr.b2 = g.edge(fr.e2).black;
  if (fr.b1 == fr.b2)
    throw Error("NotMutable", "resplit target joins a black vertex to itself",
                "white " + itos(w0));
  if (fr.b1 > fr.b2) {
    std::swap(fr.b1, fr.b2);
    std::swap(fr.e1, fr.e2);
  }
  auto r1 = anchored(g.black(fr.b1).edges, fr.e1);
  auto r2 = anchored(g.black(fr.b2).edges, fr.e2);
  fr.eA = r1[1];
  fr.eB = r1[2];
  fr.eC = r2[1];
  fr.eD = r2[2];
  fr.wA = g.edge(fr.eA).white;
  fr.wB = g.edge(fr.eB).white;
  fr.wC = g.edge(fr.eC).white;
  fr.wD = g.edge(fr.eD).white;

  BtbGraph h = g;
  h.whites.erase(w0);
  h.blacks.erase(fr.b1);
  h.blacks.erase(fr.b2);
  for (int e : {fr.e1, fr.e2, fr.eA, fr.eB, fr.eC, fr.eD}) h.edges.erase(e);

  fr.w_new = h.fresh_id();
  h.whites[fr.w_new] = {fr.w_new, 0, {}};
  fr.nb1 = h.fresh_id();
  fr.nb2 = h.fresh_id();
  h.blacks[fr.nb1] = {fr.nb1, {}};
  h.blacks[fr.nb2] = {fr.nb2, {}};
  auto mk = [&](int b, int wrec) {
    int e = h.fresh_id();
    h.edges[e] = {e, b, wrec};
    return e;
  };
  int n0a = mk(fr.nb1, fr.w_new), nD = mk(fr.nb1, fr.wD), nA = mk(fr.nb1, fr.wA);
  int n0b = mk(fr.nb2, fr.w_new), nB = mk(fr.nb2, fr.wB), nC = mk(fr.nb2, fr.wC);
  h.blacks[fr.nb1].edges = {n0a, nD, nA};
  h.blacks[fr.nb2].edges = {n0b, nB, nC};
  h.whites[fr.w_new].edges = {n0a, n0b};
  splice_rotation(h.white_mut(fr.wA).edges, fr.eA, {nA});
  splice_rotation(h.white_mut(fr.wB).edges, fr.eB, {nB});
  splice_rotation(h.white_mut(fr.wC).edges, fr.eC, {nC});
  splice_rotation(h.white_mut(fr.wD).edges, fr.eD, {nD});
  require_valid(h);
  return h;
}

struct SpiderFrame {
  int b2 = 0, b4 = 0;                  // old blacks on the face
  int e21 = 0, e23 = 0, e22 = 0;       // b2 edges to w1, w3, w2
  int e41 = 0, e43 = 0, e44 = 0;       // b4 edges to w1, w3, w4
  int w1 = 0, w2 = 0, w3 = 0, w4 = 0;  // white record ids
  int nb1 = 0, nb3 = 0;                // fresh blacks
};

BtbGraph spider_rewire(const BtbGraph& g, int face_index, SpiderFrame& fr) {
  auto faces = trace_faces(g);
  if (face_index < 0 || face_index >= static_cast<int>(faces.size()))
    throw Error("NotMutable", "no such inner face", "face " + itos(face_index));
  const Face& f = faces[face_index];
  if (f.is_boundary() || f.corners.size() != 4)
    throw Error("NotMutable", "spider target is not an internal quadrilateral face",
                "face " + itos(face_index));
  std::vector<FaceCorner> blackC;
  for (const FaceCorner& c : f.corners)
    if (!g.is_white(c.vertex)) blackC.push_back(c);
  if (blackC.size() != 2 || blackC[0].vertex == blackC[1].vertex)
    throw Error("NotMutable", "spider face lacks two distinct black vertices",
                "face " + itos(face_index));
  fr.b2 = blackC[0].vertex;
  fr.b4 = blackC[1].vertex;
  fr.e23 = blackC[0].edge_in;   // b2 CCW = (w2, w3, w1)
  fr.e21 = blackC[0].edge_out;
  fr.e41 = blackC[1].edge_in;   // b4 CCW = (w4, w1, w3)
  fr.e43 = blackC[1].edge_out;
  fr.w1 = g.edge(fr.e21).white;
  fr.w3 = g.edge(fr.e23).white;
  if (g.edge(fr.e41).white != fr.w1 || g.edge(fr.e43).white != fr.w3)
    throw Error("NotMutable", "spider face is not delimited by two whites",
                "face " + itos(face_index));
  if (fr.w1 == fr.w3)
    throw Error("NotMutable", "spider face whites coincide", "face " + itos(face_index));
  for (int e : g.black(fr.b2).edges)
    if (e != fr.e21 && e != fr.e23) fr.e22 = e;
  for (int e : g.black(fr.b4).edges)
    if (e != fr.e41 && e != fr.e43) fr.e44 = e;
  fr.w2 = g.edge(fr.e22).white;
  fr.w4 = g.edge(fr.e44).white;

  BtbGraph h = g;
  h.blacks.erase(fr.b2);
  h.blacks.erase(fr.b4);
  for (int e : {fr.e21, fr.e23, fr.e22, fr.e41, fr.e43, fr.e44}) h.edges.erase(e);
  fr.nb1 = h.fresh_id();
  fr.nb3 = h.fresh_id();
  h.blacks[fr.nb1] = {fr.nb1, {}};
  h.blacks[fr.nb3] = {fr.nb3, {}};
  auto mk = [&](int b, int wrec) {
    int e = h.fresh_id();
    h.edges[e] = {e, b, wrec};
    return e;
  };
  int n11 = mk(fr.nb1, fr.w1), n12 = mk(fr.nb1, fr.w2), n14 = mk(fr.nb1, fr.w4);
  int n32 = mk(fr.nb3, fr.w2), n33 = mk(fr.nb3, fr.w3), n34 = mk(fr.nb3, fr.w4);
  h.blacks[fr.nb1].edges = {n11, n12, n14};
  h.blacks[fr.nb3].edges = {n32, n33, n34};
  // The two face edges at w1 are CCW-adjacent as (e21, e41); at w3 as
  // (e43, e23). The off-face whites each gain a second edge in the slot of
  // their old one.
  splice_pair(h.white_mut(fr.w1).edges, fr.e21, fr.e41, n11);
  splice_pair(h.white_mut(fr.w3).edges, fr.e43, fr.e23, n33);
  splice_rotation(h.white_mut(fr.w2).edges, fr.e22, {n32, n12});
  splice_rotation(h.white_mut(fr.w4).edges, fr.e44, {n14, n34});
  require_valid(h);
  return h;
}

}  // namespace

std::string MoveSite::str() const {
  return (kind == Kind::Resplit ? "resplit@white" : "spider@face") + itos(target);
}

std::vector<MoveSite> find_move_sites(const BtbGraph& g) {
  std::vector<MoveSite> out;
  for (const auto& [wid, w] : g.whites) {
    if (w.boundary != 0 || w.edges.size() != 2) continue;
    if (g.edge(w.edges[0]).black == g.edge(w.edges[1]).black) continue;
    out.push_back({MoveSite::Kind::Resplit, wid});
  }
  auto faces = trace_faces(g);
  for (const Face& f : faces) {
    if (f.is_boundary() || f.corners.size() != 4) continue;
    std::set<int> bs, ws;
    for (const FaceCorner& c : f.corners)
      (g.is_white(c.vertex) ? ws : bs).insert(c.vertex);
    if (bs.size() == 2 && ws.size() == 2)
      out.push_back({MoveSite::Kind::Spider, f.index});
  }
  std::sort(out.begin(), out.end());
  return out;
}

BtbGraph resplit_graph(const BtbGraph& g, int w0, int* new_white) {
  ResplitFrame fr;
  BtbGraph h = resplit_rewire(g, w0, fr);
  if (new_white) *new_white = fr.w_new;
  return h;
}

BtbGraph spider_graph(const BtbGraph& g, int face_index) {
  SpiderFrame fr;
  return spider_rewire(g, face_index, fr);
}

TcdMap resplit(const TcdMap& m, int w0, std::vector<ProjPoint>* dskp_tuple, int* new_white) {
  ResplitFrame fr;
  BtbGraph h = resplit_rewire(m.g, w0, fr);
  if (m.point(fr.wA) == m.point(fr.wD))
    throw Error("IndeterminateMove", "resplit outer points coincide",
                "whites " + itos(fr.wA) + "," + itos(fr.wD) + " share " + m.point(fr.wA).str());
  if (m.point(fr.wB) == m.point(fr.wC))
    throw Error("IndeterminateMove", "resplit outer points coincide",
                "whites " + itos(fr.wB) + "," + itos(fr.wC) + " share " + m.point(fr.wB).str());

  std::vector<ProjPoint> pts;
  for (const auto& [wid, p] : m.points) pts.push_back(p);
  Vrc v = vrc_of(m, chart_avoiding(pts, m.d));
  // Gauge with the relation at b1 scaled so the w0 weight is 1 and the
  // relation at b2 scaled so the w0 weight is -1; then the new vector is
  // a v(A) + d v(D) = -b v(B) - c v(C).
  Scalar a = v.weights.at(fr.eA) / v.weights.at(fr.e1);
  Scalar b = v.weights.at(fr.eB) / v.weights.at(fr.e1);
  Scalar c = -v.weights.at(fr.eC) / v.weights.at(fr.e2);
  Scalar d = -v.weights.at(fr.eD) / v.weights.at(fr.e2);
  auto rep = [&](int wrec) { return m.g.rep_white(wrec); };
  Vec vt = add(scale(a, v.vectors.at(rep(fr.wA))), scale(d, v.vectors.at(rep(fr.wD))));
  Vec vt2 = scale(Scalar(-1),
                  add(scale(b, v.vectors.at(rep(fr.wB))), scale(c, v.vectors.at(rep(fr.wC)))));
  if (vt != vt2)
    throw Error("ConsistencyViolation", "the two new-vector expressions disagree",
                "white " + itos(w0));

  TcdMap out;
  out.g = std::move(h);
  out.d = m.d;
  out.points = m.points;
  out.points.erase(w0);
  out.points[fr.w_new] = ProjPoint(vt);
  require_valid_map(out);
  if (dskp_tuple)
    *dskp_tuple = {m.point(fr.wA), m.point(w0),         m.point(fr.wB),
                   m.point(fr.wC), out.points[fr.w_new], m.point(fr.wD)};
  if (new_white) *new_white = fr.w_new;
  return out;
}

TcdMap spider(const TcdMap& m, int face_index) {
  SpiderFrame fr;
  BtbGraph h = spider_rewire(m.g, face_index, fr);
  if (m.point(fr.w2) == m.point(fr.w4))
    throw Error("IndeterminateMove",
                "spider off-face points coincide (face exchange variable is -1)",
                "whites " + itos(fr.w2) + "," + itos(fr.w4) + " share " + m.point(fr.w2).str());
  TcdMap out;
  out.g = std::move(h);
  out.d = m.d;
  out.points = m.points;
  require_valid_map(out);
  return out;
}

TcdMap apply_move(const TcdMap& m, const MoveSite& s) {
  return s.kind == MoveSite::Kind::Resplit ? resplit(m, s.target) : spider(m, s.target);
}

BtbGraph apply_move(const BtbGraph& g, const MoveSite& s) {
  return s.kind == MoveSite::Kind::Resplit ? resplit_graph(g, s.target)
                                           : spider_graph(g, s.target);
}

bool dskp_check(const std::vector<ProjPoint>& six) { return multi_ratio(six) == -1; }

int MoveGraph::index_of(const std::string& key) const {
  auto it = std::find(keys.begin(), keys.end(), key);
  return it == keys.end() ? -1 : static_cast<int>(it - keys.begin());
}

std::set<std::pair<int, int>> MoveGraph::undirected_edges() const {
  std::set<std::pair<int, int>> out;
  for (const Arrow& a : arrows)
    out.insert({std::min(a.from, a.to), std::max(a.from, a.to)});
  return out;
}

std::vector<ProjPoint> canonical_points(const TcdMap& m) {
  std::vector<int> order;
  canonical_encoding(m.g, &order);
  std::vector<ProjPoint> out;
  for (int w : order) out.push_back(m.point(w));
  return out;
}

namespace {

MoveGraph explore_impl(const BtbGraph& g0, const TcdMap* m0, int max_nodes) {
  MoveGraph mg;
  mg.has_maps = m0 != nullptr;
  std::map<std::string, int> index;
  auto add_node = [&](const BtbGraph& g, const TcdMap* m) -> int {
    std::string key = canonical_encoding(g);
    auto it = index.find(key);
    if (it != index.end()) {
      if (m) {
        if (canonical_points(*m) != canonical_points(mg.maps[it->second]) ||
            m->d != mg.maps[it->second].d)
          throw Error("ConsistencyViolation",
                      "two move paths transport the map differently", key);
      }
      return it->second;
    }
    if (static_cast<int>(mg.keys.size()) >= max_nodes)
      throw Error("NodeLimitExceeded",
                  "move graph exceeds " + itos(max_nodes) + " nodes");
    int idx = static_cast<int>(mg.keys.size());
    index[key] = idx;
    mg.keys.push_back(key);
    mg.graphs.push_back(g);
    if (m) mg.maps.push_back(*m);
    return idx;
  };
  mg.root = add_node(g0, m0);
  std::deque<int> q{mg.root};
  std::set<int> seen{mg.root};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    // Copy: the vectors may reallocate while new nodes are appended.
    BtbGraph gu = mg.graphs[u];
    TcdMap mu;
    if (mg.has_maps) mu = mg.maps[u];
    for (const MoveSite& s : find_move_sites(gu)) {
      int v;
      if (mg.has_maps) {
        TcdMap next = apply_move(mu, s);
        v = add_node(next.g, &next);
      } else {
        v = add_node(apply_move(gu, s), nullptr);
      }
      mg.arrows.push_back({u, s, v});
      if (!seen.count(v)) {
        seen.insert(v);
        q.push_back(v);
      }
    }
  }
  return mg;
}

}  // namespace

MoveGraph explore(const BtbGraph& g, int max_nodes) { return explore_impl(g, nullptr, max_nodes); }

MoveGraph explore(const TcdMap& m, int max_nodes) { return explore_impl(m.g, &m, max_nodes); }

CycleReport verify_elementary_cycles(const TcdMap& m, int max_nodes) {
  MoveGraph mg = explore(m, max_nodes);  // asserts path-independent transport
  auto edges = mg.undirected_edges();
  CycleReport rep;
  rep.nodes = static_cast<int>(mg.keys.size());
  rep.edge_count = static_cast<int>(edges.size());
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto [u, v] : edges) {
    // Shortest path u -> v avoiding the edge itself; its length + 1 is the
    // shortest cycle through the edge.
    std::map<int, int> dist{{u, 0}};
    std::deque<int> q{u};
    while (!q.empty() && !dist.count(v)) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x]) {
        if ((x == u && y == v) || (x == v && y == u)) continue;
        if (!dist.count(y)) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
      }
    }
    if (dist.count(v)) rep.cycle_lengths.insert(dist[v] + 1);
  }
  return rep;
}

}  // namespace tcd
