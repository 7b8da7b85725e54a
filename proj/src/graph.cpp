#include "tcd/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>
#include <set>
#include <sstream>

namespace tcd {

namespace {

int index_of(const std::vector<int>& v, int x) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) return static_cast<int>(i);
  throw Error("MalformedEmbedding", "edge missing from rotation list");
}

std::string itos(int x) { return std::to_string(x); }

}  // namespace

// ---------------------------------------------------------------------------
// BtbGraph basics.

int BtbGraph::add_white(int boundary_pos) {
  int id = fresh_id();
  whites[id] = White{id, boundary_pos, {}};
  return id;
}

int BtbGraph::add_black() {
  int id = fresh_id();
  blacks[id] = Black{id, {}};
  return id;
}

int BtbGraph::add_edge(int black, int white) {
  int id = fresh_id();
  edges[id] = Edge{id, black, white};
  blacks.at(black).edges.push_back(id);
  whites.at(white).edges.push_back(id);
  return id;
}

const BtbGraph::White& BtbGraph::white(int id) const {
  auto it = whites.find(id);
  if (it == whites.end()) throw Error("MalformedEmbedding", "unknown white id " + itos(id));
  return it->second;
}

const BtbGraph::Black& BtbGraph::black(int id) const {
  auto it = blacks.find(id);
  if (it == blacks.end()) throw Error("MalformedEmbedding", "unknown black id " + itos(id));
  return it->second;
}

const BtbGraph::Edge& BtbGraph::edge(int id) const {
  auto it = edges.find(id);
  if (it == edges.end()) throw Error("MalformedEmbedding", "unknown edge id " + itos(id));
  return it->second;
}

BtbGraph::White& BtbGraph::white_mut(int id) {
  return const_cast<White&>(white(id));
}

BtbGraph::Black& BtbGraph::black_mut(int id) {
  return const_cast<Black&>(black(id));
}

int BtbGraph::white_at(int pos) const {
  for (const auto& [id, w] : whites)
    if (w.boundary == pos) return id;
  throw Error("MalformedEmbedding", "no white at boundary position " + itos(pos));
}

int BtbGraph::other_end(int edge_id, int vertex_id) const {
  const Edge& e = edge(edge_id);
  if (e.black == vertex_id) return e.white;
  if (e.white == vertex_id) return e.black;
  throw Error("MalformedEmbedding", "vertex not on edge");
}

bool BtbGraph::glued(int pos) const {
  for (const auto& blk : cactus)
    if (std::find(blk.begin(), blk.end(), pos) != blk.end()) return true;
  return false;
}

std::vector<int> BtbGraph::block_of(int pos) const {
  for (const auto& blk : cactus)
    if (std::find(blk.begin(), blk.end(), pos) != blk.end()) {
      std::vector<int> out = blk;
      std::sort(out.begin(), out.end());
      return out;
    }
  return {pos};
}

int BtbGraph::rep_white(int white_id) const {
  const White& w = white(white_id);
  if (w.boundary == 0 || !glued(w.boundary)) return white_id;
  return white_at(block_of(w.boundary).front());
}

int BtbGraph::merged_white_count() const {
  int overlap = 0;
  for (const auto& blk : cactus) overlap += static_cast<int>(blk.size()) - 1;
  return static_cast<int>(whites.size()) - overlap;
}

int BtbGraph::mrank() const {
  return merged_white_count() - static_cast<int>(blacks.size()) - 1;
}

// ---------------------------------------------------------------------------
// Dart-based embedding.
//
// Darts come in twin pairs 2t/2t+1.  For the t-th edge (ids ascending)
// dart 2t runs black->white and 2t+1 white->black.  Boundary arcs are
// treated as edges of the embedding: arc p joins w_p to w_{p+1}; its
// forward dart (w_p -> w_{p+1}) is 2E+2(p-1), the reverse dart 2E+2(p-1)+1.
// The rotation at a boundary white w_p is the cyclic CCW list
//   [ reverse dart of arc_{p-1},  edge darts (stored order),  forward dart of arc_p ].

namespace {

struct Emb {
  const BtbGraph& g;
  std::vector<int> edgeIds;
  std::map<int, int> edgeIdx;
  int E = 0;
  int nDarts = 0;
  std::vector<int> dFrom, dTo, dEdge, dArc;  // dEdge: edge id or 0; dArc: pos or 0
  std::map<int, std::vector<int>> rot;       // vertex -> CCW outgoing darts
  std::map<int, int> rotPos;                 // dart -> index in rot[from]

  explicit Emb(const BtbGraph& graph) : g(graph) {
    for (const auto& [id, e] : g.edges) edgeIds.push_back(id);
    E = static_cast<int>(edgeIds.size());
    for (int t = 0; t < E; ++t) edgeIdx[edgeIds[t]] = t;
    nDarts = 2 * E + 2 * g.n;
    dFrom.assign(nDarts, 0);
    dTo.assign(nDarts, 0);
    dEdge.assign(nDarts, 0);
    dArc.assign(nDarts, 0);
    for (int t = 0; t < E; ++t) {
      const auto& e = g.edge(edgeIds[t]);
      dFrom[2 * t] = e.black;
      dTo[2 * t] = e.white;
      dFrom[2 * t + 1] = e.white;
      dTo[2 * t + 1] = e.black;
      dEdge[2 * t] = dEdge[2 * t + 1] = e.id;
    }
    for (int p = 1; p <= g.n; ++p) {
      int fwd = 2 * E + 2 * (p - 1);
      int wp = g.white_at(p), wq = g.white_at(p % g.n + 1);
      dFrom[fwd] = wp;
      dTo[fwd] = wq;
      dFrom[fwd + 1] = wq;
      dTo[fwd + 1] = wp;
      dArc[fwd] = dArc[fwd + 1] = p;
    }
    for (const auto& [id, b] : g.blacks) {
      auto& r = rot[id];
      for (int e : b.edges) r.push_back(2 * edgeIdx.at(e));
    }
    for (const auto& [id, w] : g.whites) {
      auto& r = rot[id];
      if (w.boundary != 0) {
        int p = w.boundary;
        int prev = (p + g.n - 2) % g.n + 1;  // p-1 wrapping to n
        r.push_back(2 * E + 2 * (prev - 1) + 1);
        for (int e : w.edges) r.push_back(2 * edgeIdx.at(e) + 1);
        r.push_back(2 * E + 2 * (p - 1));
      } else {
        for (int e : w.edges) r.push_back(2 * edgeIdx.at(e) + 1);
      }
    }
    for (auto& [v, r] : rot)
      for (size_t i = 0; i < r.size(); ++i) rotPos[r[i]] = static_cast<int>(i);
  }

  int twin(int d) const { return d ^ 1; }
  int sigma(int d) const {
    const auto& r = rot.at(dFrom[d]);
    int i = rotPos.at(d);
    return r[(i + 1) % r.size()];
  }
  // Successor along the face on the given dart's left.
  int faceNext(int d) const { return sigma(twin(d)); }
  int code(int d) const { return dEdge[d] != 0 ? dEdge[d] : -dArc[d]; }
};

}  // namespace

std::vector<Face> trace_faces(const BtbGraph& g) {
  Emb emb(g);
  std::vector<Face> out;
  std::vector<char> seen(emb.nDarts, 0);
  for (int d0 = 0; d0 < emb.nDarts; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      if (seen[d]) throw Error("MalformedEmbedding", "face walk re-entered a visited dart");
      seen[d] = 1;
      orbit.push_back(d);
      d = emb.faceNext(d);
    } while (d != d0);
    bool outer = false;
    for (int x : orbit)
      if (emb.dArc[x] != 0 && (x & 1)) outer = true;
    if (outer) {
      for (int x : orbit)
        if (emb.dArc[x] == 0 || !(x & 1))
          throw Error("MalformedEmbedding", "outer face walk crossed the graph");
      continue;
    }
    Face f;
    f.index = static_cast<int>(out.size());
    for (int x : orbit) {
      int nd = emb.faceNext(x);
      int v = emb.dTo[x];
      f.corners.push_back(FaceCorner{v, emb.code(x), emb.code(nd)});
      if (g.is_white(v))
        f.whitesOn.push_back(v);
      else
        f.blacksOn.push_back(v);
      if (emb.dEdge[x] != 0)
        f.edgesOn.push_back(emb.dEdge[x]);
      else
        f.arcs.push_back(emb.dArc[x]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zigzag strands.  Turning rules: at a black vertex the strand leaves by the
// CCW-next edge; at a white vertex by the CW-next edge (in the full rotation,
// including boundary arcs, which is why a strand reaching the sink-side end
// of a boundary rotation exits at that position's sink).

StrandData strands(const BtbGraph& g) {
  StrandData out;
  out.perm.assign(g.n, 0);
  for (int i = 1; i <= g.n; ++i) {
    Strand s;
    s.source = i;
    int startEdge = 0;
    const auto& wi = g.white(g.white_at(i));
    if (!wi.edges.empty()) {
      startEdge = wi.edges.back();  // source-side edge
    } else if (!g.glued(i)) {
      s.sink = i;  // lens strand around an isolated unglued corner
      out.perm[i - 1] = i;
      out.strands.push_back(std::move(s));
      continue;
    } else {
      // Glued empty corner: the pinch blocks the corner, so the strand runs
      // clockwise past empty unglued corners until it can enter the graph at
      // a sink-side edge, or exits at the sink of the next pinched corner.
      int q = i;
      for (int step = 0; step < g.n && startEdge == 0; ++step) {
        q = q % g.n + 1;
        const auto& wq = g.white(g.white_at(q));
        if (!wq.edges.empty()) {
          startEdge = wq.edges.front();  // sink-side edge
        } else if (g.glued(q)) {
          s.sink = q;
          break;
        }
      }
      if (startEdge == 0) {
        if (s.sink == 0)
          throw Error("MalformedEmbedding",
                      "strand from source " + itos(i) + " found no entry");
        out.perm[i - 1] = s.sink;
        out.strands.push_back(std::move(s));
        continue;
      }
    }
    int e = startEdge;
    s.edgesCrossed.push_back(e);
    size_t cap = 2 * g.edges.size() + 2;
    for (size_t guard = 0;; ++guard) {
      if (guard > cap)
        throw Error("MalformedEmbedding", "strand tracing did not terminate");
      const auto& b = g.black(g.edge(e).black);
      int bi = index_of(b.edges, e);
      int eo = b.edges[(bi + 1) % b.edges.size()];
      s.turns.push_back(StrandTurn{b.id, false, e, eo});
      s.edgesCrossed.push_back(eo);
      const auto& w = g.white(g.edge(eo).white);
      int wi2 = index_of(w.edges, eo);
      if (w.boundary != 0) {
        if (wi2 == 0) {
          s.sink = w.boundary;
          break;
        }
        int e2 = w.edges[wi2 - 1];
        s.turns.push_back(StrandTurn{w.id, true, eo, e2});
        s.edgesCrossed.push_back(e2);
        e = e2;
      } else {
        int m = static_cast<int>(w.edges.size());
        int e2 = w.edges[(wi2 - 1 + m) % m];
        s.turns.push_back(StrandTurn{w.id, true, eo, e2});
        s.edgesCrossed.push_back(e2);
        e = e2;
      }
    }
    out.perm[i - 1] = s.sink;
    out.strands.push_back(std::move(s));
  }
  return out;
}

MinimalityReport is_minimal(const BtbGraph& g) {
  MinimalityReport rep;
  StrandData sd = strands(g);
  // Self-intersections: a strand crossing the same edge twice.
  for (const Strand& s : sd.strands) {
    std::set<int> seen;
    for (int e : s.edgesCrossed) {
      if (!seen.insert(e).second) {
        rep.minimal = false;
        rep.reason = "self-intersecting strand";
        rep.witness = "strand " + itos(s.source) + " crosses edge " + itos(e) + " twice";
        return rep;
      }
    }
  }
  // Every edge carries exactly two strand passages; fewer means some
  // passages are used up by closed loops.
  std::map<int, int> passes;
  for (const Strand& s : sd.strands)
    for (int e : s.edgesCrossed) passes[e]++;
  for (const auto& [id, e] : g.edges) {
    if (passes[id] != 2) {
      rep.minimal = false;
      rep.reason = "closed strand loop";
      rep.witness = "edge " + itos(id) + " carries " + itos(passes[id]) +
                    " boundary strand passages instead of 2";
      return rep;
    }
  }
  // Parallel bigons: two strands crossing two common edges in the same order.
  for (size_t a = 0; a < sd.strands.size(); ++a) {
    std::map<int, int> posA;
    for (size_t t = 0; t < sd.strands[a].edgesCrossed.size(); ++t)
      posA[sd.strands[a].edgesCrossed[t]] = static_cast<int>(t);
    for (size_t b = a + 1; b < sd.strands.size(); ++b) {
      std::vector<std::pair<int, int>> common;  // (pos in a, pos in b)
      for (size_t t = 0; t < sd.strands[b].edgesCrossed.size(); ++t) {
        auto it = posA.find(sd.strands[b].edgesCrossed[t]);
        if (it != posA.end()) common.push_back({it->second, static_cast<int>(t)});
      }
      // common is sorted by position in strand b.
      for (size_t u = 0; u < common.size(); ++u)
        for (size_t v = u + 1; v < common.size(); ++v)
          if (common[u].first < common[v].first) {
            rep.minimal = false;
            rep.reason = "parallel bigon";
            rep.witness = "strands " + itos(sd.strands[a].source) + " and " +
                          itos(sd.strands[b].source) + " share two co-oriented crossings";
            return rep;
          }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Validation.

namespace {

// True if all elements of b fall in a single cyclic gap of a (no interleaving).
bool noncrossing(const std::vector<int>& a, const std::vector<int>& b, int n) {
  if (a.size() < 2) return true;
  for (size_t i = 0; i < a.size(); ++i) {
    int lo = a[i], hi = a[(i + 1) % a.size()];
    bool all = true;
    for (int x : b) {
      int rel = ((x - lo) % n + n) % n;
      int span = ((hi - lo) % n + n) % n;
      if (!(rel > 0 && rel < span)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

ValidationReport validate(const BtbGraph& g) {
  ValidationReport rep;
  auto bad = [&](const std::string& msg) {
    rep.valid = false;
    rep.violations.push_back(msg);
  };

  if (g.n < 1) bad("boundary size n must be at least 1");

  for (const auto& [id, w] : g.whites)
    if (g.blacks.count(id)) bad("id " + itos(id) + " used for both a white and a black");

  // Boundary positions: exactly one record per position.
  std::map<int, int> posCount;
  for (const auto& [id, w] : g.whites) {
    if (w.boundary < 0 || w.boundary > g.n)
      bad("white " + itos(id) + " has boundary position out of range");
    else if (w.boundary > 0)
      posCount[w.boundary]++;
    if (w.boundary == 0 && w.edges.empty())
      bad("internal white " + itos(id) + " is isolated");
  }
  for (int p = 1; p <= g.n; ++p)
    if (posCount[p] != 1) bad("boundary position " + itos(p) + " has " + itos(posCount[p]) + " whites");

  // Edge / rotation referential integrity.
  std::map<int, int> inWhite, inBlack;
  for (const auto& [id, w] : g.whites) {
    std::set<int> dup;
    for (int e : w.edges) {
      if (!g.edges.count(e)) {
        bad("white " + itos(id) + " lists unknown edge " + itos(e));
        continue;
      }
      if (g.edges.at(e).white != id) bad("edge " + itos(e) + " listed by wrong white");
      if (!dup.insert(e).second) bad("edge " + itos(e) + " repeated in a rotation");
      inWhite[e]++;
    }
  }
  for (const auto& [id, b] : g.blacks) {
    if (b.edges.size() != 3) bad("black " + itos(id) + " has degree " + itos((int)b.edges.size()));
    std::set<int> dup;
    for (int e : b.edges) {
      if (!g.edges.count(e)) {
        bad("black " + itos(id) + " lists unknown edge " + itos(e));
        continue;
      }
      if (g.edges.at(e).black != id) bad("edge " + itos(e) + " listed by wrong black");
      if (!dup.insert(e).second) bad("edge " + itos(e) + " repeated in a rotation");
      inBlack[e]++;
    }
  }
  for (const auto& [id, e] : g.edges) {
    if (!g.whites.count(e.white) || !g.blacks.count(e.black)) {
      bad("edge " + itos(id) + " has a missing endpoint");
      continue;
    }
    if (inWhite[id] != 1 || inBlack[id] != 1)
      bad("edge " + itos(id) + " not listed exactly once at each endpoint");
  }

  // Cactus blocks: size >= 2, sorted, in range, disjoint, noncrossing.
  std::set<int> gluedPos;
  for (const auto& blk : g.cactus) {
    if (blk.size() < 2) bad("cactus block with fewer than 2 positions");
    if (!std::is_sorted(blk.begin(), blk.end())) bad("cactus block not sorted");
    for (int p : blk) {
      if (p < 1 || p > g.n) bad("cactus position out of range");
      if (!gluedPos.insert(p).second) bad("position " + itos(p) + " in two cactus blocks");
    }
  }
  for (size_t i = 0; i < g.cactus.size() && rep.valid; ++i)
    for (size_t j = i + 1; j < g.cactus.size(); ++j)
      if (!noncrossing(g.cactus[i], g.cactus[j], g.n))
        bad("cactus blocks interleave (not noncrossing)");

  if (!rep.valid) return rep;

  // Connectivity: everything must be reachable from the boundary.
  {
    std::set<int> seen;
    std::queue<int> q;
    int start = g.white_at(1);
    seen.insert(start);
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      std::vector<int> adj;
      if (g.is_white(v)) {
        const auto& w = g.white(v);
        for (int e : w.edges) adj.push_back(g.edge(e).black);
        if (w.boundary != 0) {
          adj.push_back(g.white_at(w.boundary % g.n + 1));
          adj.push_back(g.white_at((w.boundary + g.n - 2) % g.n + 1));
        }
      } else {
        for (int e : g.black(v).edges) adj.push_back(g.edge(e).white);
      }
      for (int u : adj)
        if (seen.insert(u).second) q.push(u);
    }
    for (const auto& [id, w] : g.whites)
      if (!seen.count(id)) bad("white " + itos(id) + " not attached to the boundary");
    for (const auto& [id, b] : g.blacks)
      if (!seen.count(id)) bad("black " + itos(id) + " not attached to the boundary");
  }
  if (!rep.valid) return rep;

  // Planarity in the disk via the Euler count of inner faces.
  try {
    auto faces = trace_faces(g);
    int V = static_cast<int>(g.whites.size() + g.blacks.size());
    int E = static_cast<int>(g.edges.size());
    int expect = 1 + g.n + E - V;
    if (static_cast<int>(faces.size()) != expect)
      bad("embedding is not planar in the disk (inner faces " + itos((int)faces.size()) +
          ", expected " + itos(expect) + ")");
  } catch (const Error& err) {
    bad(std::string("face tracing failed: ") + err.message());
  }

  // Strand permutation must be a bijection.
  try {
    StrandData sd = strands(g);
    std::set<int> sinks(sd.perm.begin(), sd.perm.end());
    if (static_cast<int>(sinks.size()) != g.n) bad("strand sinks collide");
    for (int i = 1; i <= g.n; ++i) {
      const auto& w = g.white(g.white_at(i));
      if (w.edges.empty())
        rep.notes.push_back(g.glued(i) ? "glued empty corner at position " + itos(i)
                                       : "fixed point at position " + itos(i));
    }
  } catch (const Error& err) {
    bad(std::string("strand tracing failed: ") + err.message());
  }
  return rep;
}

void require_valid(const BtbGraph& g) {
  ValidationReport rep = validate(g);
  if (!rep.valid) {
    std::string msg;
    for (const auto& v : rep.violations) {
      if (!msg.empty()) msg += "; ";
      msg += v;
    }
    throw Error("MalformedEmbedding", msg);
  }
}

// ---------------------------------------------------------------------------
// Strand-side labels via flood fill on the object-adjacency graph.
//
// Nodes are white records, blacks, and inner faces.  Two objects are
// adjacent when their regions share a corner of the embedding, or when they
// touch along the boundary circle.  Each strand cuts the corners it turns
// through and the two boundary adjacencies at its endpoints; the objects to
// its left are those separated from its source white.

namespace {

struct Flood {
  std::map<long long, int> nodeIdx;  // encoded node -> dense index
  std::vector<long long> nodes;
  std::vector<int> parent;

  static long long vert(int id) { return id; }
  static long long face(int idx) { return -(long long)(idx + 1); }

  int idx(long long key) {
    auto it = nodeIdx.find(key);
    if (it == nodeIdx.end()) {
      int i = static_cast<int>(nodes.size());
      nodeIdx[key] = i;
      nodes.push_back(key);
      parent.push_back(i);
      return i;
    }
    return it->second;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Adjacency edge keys.
struct AdjKey {
  int kind;  // 0 = corner (vertex, face-walk edge_in), 1 = source p, 2 = sink p
  int a = 0, b = 0;
  bool operator<(const AdjKey& o) const {
    return std::tie(kind, a, b) < std::tie(o.kind, o.a, o.b);
  }
};

}  // namespace

BanLabels ban_labels(const BtbGraph& g) {
  BanLabels out;
  out.n = g.n;
  out.k = g.mrank() + 1;
  StrandData sd = strands(g);
  auto faces = trace_faces(g);

  // Collect adjacency edges: key -> (node key, node key).
  std::map<AdjKey, std::pair<long long, long long>> adj;
  for (const Face& f : faces) {
    long long fk = Flood::face(f.index);
    for (const FaceCorner& c : f.corners) {
      if (c.edge_in > 0 && c.edge_out > 0) {
        adj[AdjKey{0, c.vertex, c.edge_in}] = {Flood::vert(c.vertex), fk};
      } else {
        int p = g.white(c.vertex).boundary;
        if (c.edge_in < 0) adj[AdjKey{2, p, 0}] = {fk, Flood::vert(c.vertex)};
        if (c.edge_out < 0) adj[AdjKey{1, p, 0}] = {Flood::vert(c.vertex), fk};
      }
    }
  }

  auto zero = std::vector<int>(g.n, 0);
  for (const auto& [id, w] : g.whites) out.whiteAn[id] = zero;
  for (const auto& [id, b] : g.blacks) out.blackAn[id] = zero;
  out.faceAn.assign(faces.size(), zero);

  for (const Strand& s : sd.strands) {
    std::set<AdjKey> cut;
    cut.insert(AdjKey{1, s.source, 0});
    cut.insert(AdjKey{2, s.sink, 0});
    for (const StrandTurn& t : s.turns)
      cut.insert(AdjKey{0, t.vertex, t.at_white ? t.edge_out : t.edge_in});

    Flood fl;
    for (const auto& [id, w] : g.whites) fl.idx(Flood::vert(id));
    for (const auto& [id, b] : g.blacks) fl.idx(Flood::vert(id));
    for (const Face& f : faces) fl.idx(Flood::face(f.index));
    for (const auto& [key, pr] : adj)
      if (!cut.count(key)) fl.unite(fl.idx(pr.first), fl.idx(pr.second));

    int rightRoot = fl.find(fl.idx(Flood::vert(g.white_at(s.source))));
    std::set<int> roots;
    for (size_t i = 0; i < fl.nodes.size(); ++i) roots.insert(fl.find((int)i));
    if (roots.size() > 2)
      throw Error("MalformedEmbedding",
                  "strand " + itos(s.source) + " does not bisect the disk");
    if (roots.size() == 1) continue;  // degenerate strand with an empty left side

    for (size_t i = 0; i < fl.nodes.size(); ++i) {
      if (fl.find((int)i) == rightRoot) continue;
      long long key = fl.nodes[i];
      if (key > 0) {
        int id = static_cast<int>(key);
        if (g.is_white(id))
          out.whiteAn[id][s.source - 1] = 1;
        else
          out.blackAn[id][s.source - 1] = 1;
      } else {
        out.faceAn[static_cast<size_t>(-key - 1)][s.source - 1] = 1;
      }
    }
  }

  out.blackBan = out.blackAn;
  for (const Strand& s : sd.strands)
    for (const StrandTurn& t : s.turns)
      if (!t.at_white) out.blackBan[t.vertex][s.source - 1] = 0;
  return out;
}

std::string label_str(const std::vector<int>& z) {
  bool big = z.size() > 9;
  std::string out;
  for (size_t i = 0; i < z.size(); ++i)
    if (z[i]) {
      if (big && !out.empty()) out += ",";
      out += itos(static_cast<int>(i + 1));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Perfect orientation.
//
// At each black, model the three CCW edge slots by the plane directions
// (0,1), (-1,-1), (1,-1).  A strand passage in via slot i and out via slot
// i+1 is the chord u_{i+1}-u_i; an edge slot lies to its right when the
// cross product is negative.  An edge is oriented black->white exactly when
// it lies to the right of both the smallest- and largest-labelled of the
// three strands turning at that black.

PerfectOrientation perfect_orientation(const BtbGraph& g) {
  PerfectOrientation out;
  StrandData sd = strands(g);
  std::map<int, std::vector<std::pair<int, std::pair<int, int>>>> turns;  // black -> (label,(in,out))
  for (const Strand& s : sd.strands)
    for (const StrandTurn& t : s.turns)
      if (!t.at_white) turns[t.vertex].push_back({s.source, {t.edge_in, t.edge_out}});

  static const int U[3][2] = {{0, 1}, {-1, -1}, {1, -1}};
  for (const auto& [bid, b] : g.blacks) {
    auto it = turns.find(bid);
    if (it == turns.end() || it->second.size() != 3)
      throw Error("ConstructionFailed", "black " + itos(bid) + " lacks three strand turns");
    auto tr = it->second;
    std::sort(tr.begin(), tr.end());
    int outCount = 0;
    for (int e : b.edges) {
      int re = index_of(b.edges, e);
      bool rightOfBoth = true;
      for (int which : {0, 2}) {
        int ri = index_of(b.edges, tr[which].second.first);
        int ro = index_of(b.edges, tr[which].second.second);
        long long dx = U[ro][0] - U[ri][0], dy = U[ro][1] - U[ri][1];
        long long cr = dx * U[re][1] - dy * U[re][0];
        if (cr >= 0) rightOfBoth = false;
      }
      out.black_to_white[e] = rightOfBoth;
      if (rightOfBoth) ++outCount;
    }
    if (outCount != 1)
      throw Error("ConstructionFailed",
                  "black " + itos(bid) + " has " + itos(outCount) + " outgoing edges");
  }

  // Each internal white must have exactly one incoming edge.  Incoming
  // edges and sources are counted on merged (cactus) whites.
  std::map<int, int> incoming;
  for (const auto& [eid, b2w] : out.black_to_white)
    if (b2w) incoming[g.rep_white(g.edge(eid).white)]++;
  for (const auto& [id, w] : g.whites) {
    if (w.boundary == 0 && incoming[id] != 1)
      throw Error("ConstructionFailed",
                  "internal white " + itos(id) + " has " + itos(incoming[id]) + " incoming edges");
    if (w.boundary != 0 && g.rep_white(id) == id && incoming[id] == 0)
      out.sources.push_back(w.boundary);
  }
  std::sort(out.sources.begin(), out.sources.end());

  // Kahn topological order, smallest vertex id first.
  std::map<int, int> indeg;
  std::map<int, std::vector<int>> succ;
  for (const auto& [id, w] : g.whites) indeg[id];
  for (const auto& [id, b] : g.blacks) indeg[id];
  for (const auto& [eid, b2w] : out.black_to_white) {
    const auto& e = g.edge(eid);
    int from = b2w ? e.black : e.white;
    int to = b2w ? e.white : e.black;
    succ[from].push_back(to);
    indeg[to]++;
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> pq;
  for (const auto& [v, d] : indeg)
    if (d == 0) pq.push(v);
  int popped = 0;
  while (!pq.empty()) {
    int v = pq.top();
    pq.pop();
    ++popped;
    if (g.is_white(v)) out.topo_whites.push_back(v);
    for (int u : succ[v])
      if (--indeg[u] == 0) pq.push(u);
  }
  if (popped != static_cast<int>(g.whites.size() + g.blacks.size()))
    throw Error("ConstructionFailed", "perfect orientation has a directed cycle");
  return out;
}

// ---------------------------------------------------------------------------
// Canonical encoding: breadth-first relabelling anchored at the boundary
// (positions 1..n in order), with neighbor lists read from the rotation
// anchored at the discovery edge.

std::string canonical_encoding(const BtbGraph& g, std::vector<int>* white_order) {
  std::map<int, int> cid;        // vertex id -> canonical id
  std::map<int, int> parentEdge;
  std::vector<int> order;
  std::queue<int> q;
  auto discover = [&](int v, int via) {
    if (cid.count(v)) return;
    cid[v] = static_cast<int>(order.size());
    parentEdge[v] = via;
    order.push_back(v);
    q.push(v);
  };
  for (int p = 1; p <= g.n; ++p) discover(g.white_at(p), 0);

  auto neighbor_edges = [&](int v) {
    std::vector<int> es;
    if (g.is_white(v)) {
      const auto& w = g.white(v);
      if (w.boundary != 0) return w.edges;  // linear list is already anchored
      es = w.edges;
    } else {
      es = g.black(v).edges;
    }
    int anchor = index_of(es, parentEdge.at(v));
    std::rotate(es.begin(), es.begin() + anchor, es.end());
    return es;
  };

  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : neighbor_edges(v)) discover(g.other_end(e, v), e);
  }
  if (cid.size() != g.whites.size() + g.blacks.size())
    throw Error("MalformedEmbedding", "graph is not connected");

  std::ostringstream os;
  os << "n" << g.n << ";";
  std::vector<std::vector<int>> blocks = g.cactus;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  for (const auto& b : blocks) {
    os << "c";
    for (int p : b) os << p << ",";
    os << ";";
  }
  for (int v : order) {
    if (g.is_white(v))
      os << "W" << g.white(v).boundary << "[";
    else
      os << "B[";
    for (int e : neighbor_edges(v)) os << cid.at(g.other_end(e, v)) << ",";
    os << "]";
  }
  if (white_order) {
    white_order->clear();
    for (int v : order)
      if (g.is_white(v)) white_order->push_back(v);
  }
  return os.str();
}

}  // namespace tcd
