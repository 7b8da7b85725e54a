#include "tcd/tcdmap.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

namespace tcd {

namespace {

std::string itos(int v) { return std::to_string(v); }

// The three neighbor representative whites of a black, in rotation order.
std::vector<int> black_whites(const BtbGraph& g, int bid) {
  std::vector<int> ws;
  for (int e : g.black(bid).edges) ws.push_back(g.rep_white(g.edge(e).white));
  return ws;
}

}  // namespace

void require_valid_map(const TcdMap& m) {
  for (const auto& [wid, w] : m.g.whites) {
    if (m.g.rep_white(wid) != wid) continue;
    auto it = m.points.find(wid);
    if (it == m.points.end())
      throw Error("CollinearityViolation", "white vertex has no point", "white " + itos(wid));
    if (it->second.dim() != m.d)
      throw Error("CollinearityViolation", "point has wrong ambient dimension",
                  "white " + itos(wid));
  }
  for (const auto& [bid, b] : m.g.blacks) {
    if (b.edges.size() != 3)
      throw Error("CollinearityViolation", "black vertex is not trivalent", "black " + itos(bid));
    auto ws = black_whites(m.g, bid);
    const ProjPoint& p1 = m.points.at(ws[0]);
    const ProjPoint& p2 = m.points.at(ws[1]);
    const ProjPoint& p3 = m.points.at(ws[2]);
    if (p1 == p2 || p1 == p3 || p2 == p3)
      throw Error("CollinearityViolation", "coincident neighbor points at a black vertex",
                  "black " + itos(bid));
    if (!collinear(p1, p2, p3))
      throw Error("CollinearityViolation", "neighbor points of a black vertex are not collinear",
                  "black " + itos(bid));
  }
}

TcdMap from_vrc(const BtbGraph& g, const Vrc& v) {
  TcdMap m;
  m.g = g;
  m.d = v.d;
  for (const auto& [wid, vec] : v.vectors) {
    if (is_zero(vec))
      throw Error("CircuitViolated", "zero vector at a white vertex", "white " + itos(wid));
    m.points[wid] = ProjPoint(vec);
  }
  for (const auto& [bid, b] : g.blacks) {
    Vec sum(static_cast<size_t>(v.d) + 1, Scalar(0));
    for (int e : b.edges) {
      auto wt = v.weights.find(e);
      if (wt == v.weights.end() || wt->second == 0)
        throw Error("CircuitViolated", "missing or zero edge weight", "edge " + itos(e));
      sum = add(sum, scale(wt->second, v.vectors.at(g.rep_white(g.edge(e).white))));
    }
    if (!is_zero(sum))
      throw Error("CircuitViolated", "weighted relation does not vanish at a black vertex",
                  "black " + itos(bid));
    auto ws = black_whites(g, bid);
    if (ws.size() != 3)
      throw Error("CircuitViolated", "black vertex is not trivalent", "black " + itos(bid));
    for (int i = 0; i < 3; ++i)
      if (m.points.at(ws[i]) == m.points.at(ws[(i + 1) % 3]))
        throw Error("CircuitViolated",
                    "projectively equal neighbor vectors at a black vertex",
                    "black " + itos(bid));
  }
  require_valid_map(m);
  return m;
}

Vrc vrc_of(const TcdMap& m, const Hyperplane& chart) {
  require_valid_map(m);
  Vrc v;
  v.d = m.d;
  for (const auto& [wid, p] : m.points) {
    if (dot(chart.cov, p.h) == 0)
      throw Error("NonGenericHyperplane", "chart hyperplane contains an image point",
                  "white " + itos(wid) + " at " + p.str());
    v.vectors[wid] = affinize(p, chart);
  }
  for (const auto& [bid, b] : m.g.blacks) {
    auto ws = black_whites(m.g, bid);
    // Kernel of the (d+1) x 3 matrix with neighbor vectors as columns.
    Mat rows;
    for (int r = 0; r <= m.d; ++r)
      rows.push_back({v.vectors.at(ws[0])[r], v.vectors.at(ws[1])[r], v.vectors.at(ws[2])[r]});
    Mat ker = kernel(rows);
    if (ker.size() != 1)
      throw Error("CircuitViolated", "relation space at a black vertex is not a line",
                  "black " + itos(bid));
    Vec alpha = ker[0];
    if (alpha[0] == 0 || alpha[1] == 0 || alpha[2] == 0)
      throw Error("CircuitViolated", "degenerate relation at a black vertex",
                  "black " + itos(bid));
    // Canonical gauge: first incident weight in rotation order equals 1.
    for (int i = 2; i >= 0; --i) alpha[i] /= alpha[0];
    for (int i = 0; i < 3; ++i) v.weights[b.edges[i]] = alpha[i];
  }
  return v;
}

int rank(const TcdMap& m) {
  Mat rows;
  for (const auto& [wid, p] : m.points) rows.push_back(p.h);
  return tcd::rank(rows) - 1;
}

namespace {

// Kahn order of merged whites under the perfect orientation, together with
// the unique incoming edge of each non-minimal merged white.
struct BuildOrder {
  std::vector<int> order;            // representative white ids, topologically
  std::map<int, int> incoming_edge;  // rep white id -> edge id (absent: minimal)
};

BuildOrder build_order(const BtbGraph& g, const PerfectOrientation& po) {
  BuildOrder bo;
  std::map<int, int> indeg;
  std::map<int, std::vector<int>> succ;
  for (const auto& [wid, w] : g.whites)
    if (g.rep_white(wid) == wid) indeg[wid];
  for (const auto& [bid, b] : g.blacks) indeg[bid];
  for (const auto& [eid, b2w] : po.black_to_white) {
    const auto& e = g.edge(eid);
    int w = g.rep_white(e.white);
    int from = b2w ? e.black : w;
    int to = b2w ? w : e.black;
    succ[from].push_back(to);
    indeg[to]++;
    if (b2w) bo.incoming_edge[w] = eid;
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> pq;
  for (const auto& [v, deg] : indeg)
    if (deg == 0) pq.push(v);
  size_t popped = 0;
  while (!pq.empty()) {
    int v = pq.top();
    pq.pop();
    ++popped;
    if (g.is_white(v)) bo.order.push_back(v);
    for (int u : succ[v])
      if (--indeg[u] == 0) pq.push(u);
  }
  if (popped != indeg.size())
    throw Error("ConstructionFailed", "perfect orientation is cyclic on merged vertices");
  return bo;
}

// One attempt at the maximal-rank construction; returns false on the
// coincident-predecessor failure case.
bool try_construct_maximal(const BtbGraph& g, const BuildOrder& bo, Rng& rng, TcdMap& out) {
  int d = g.mrank();
  out.g = g;
  out.d = d;
  out.points.clear();
  Mat span_rows;
  for (int w : bo.order) {
    auto in = bo.incoming_edge.find(w);
    if (in == bo.incoming_edge.end()) {
      ProjPoint p = random_point(d, rng);
      out.points[w] = p;
      span_rows.push_back(p.h);
      continue;
    }
    int b = g.edge(in->second).black;
    std::vector<int> others;
    for (int e : g.black(b).edges)
      if (e != in->second) others.push_back(g.rep_white(g.edge(e).white));
    const ProjPoint& p2 = out.points.at(others[0]);
    const ProjPoint& p3 = out.points.at(others[1]);
    if (p2 == p3) return false;
    // Any nonzero combination coefficient keeps the new point off p2 and p3.
    out.points[w] = ProjPoint(add(p2.h, scale(rng.smallNonzero(), p3.h)));
  }
  if (tcd::rank(span_rows) != d + 1) return false;  // minimal points must span
  return true;
}

}  // namespace

bool is_admissible(const TcdMap& m, const Subspace& center, std::string* why) {
  for (const auto& [wid, p] : m.points) {
    if (center.contains(p.h)) {
      if (why) *why = "center contains the point of white " + itos(wid);
      return false;
    }
  }
  for (const auto& [bid, b] : m.g.blacks) {
    auto ws = black_whites(m.g, bid);
    Mat span = center.basis;
    span.push_back(m.points.at(ws[0]).h);
    span.push_back(m.points.at(ws[1]).h);
    if (tcd::rank(span) != center.linear_dim() + 2) {
      if (why) *why = "center meets the line of black " + itos(bid);
      return false;
    }
  }
  return true;
}

TcdMap project(const TcdMap& m, const Subspace& center) {
  std::string why;
  if (!is_admissible(m, center, &why))
    throw Error("NotAdmissible", "projection center is not admissible for this map", why);
  Mat q = projection_matrix(center, m.d + 1);
  TcdMap out;
  out.g = m.g;
  out.d = m.d - center.linear_dim();
  for (const auto& [wid, p] : m.points) out.points[wid] = apply_matrix(q, p);
  require_valid_map(out);
  return out;
}

Subspace random_admissible_center(const TcdMap& m, int linear_dim, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat rows;
    for (int i = 0; i < linear_dim; ++i) {
      Vec row;
      for (int j = 0; j <= m.d; ++j) row.push_back(rng.smallRational());
      rows.push_back(row);
    }
    if (tcd::rank(rows) != linear_dim) continue;
    Subspace s(std::move(rows));
    if (is_admissible(m, s)) return s;
  }
  throw Error("ExhaustedRetries", "no admissible projection center found in 64 attempts");
}

TcdMap construct(const BtbGraph& g, int d, std::uint64_t seed) {
  int mr = g.mrank();
  if (d < 1 || d > mr)
    throw Error("RankDeficient",
                "requested rank " + itos(d) + " outside [1, " + itos(mr) + "]");
  PerfectOrientation po = perfect_orientation(g);
  BuildOrder bo = build_order(g, po);
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    TcdMap m;
    if (!try_construct_maximal(g, bo, rng, m)) continue;
    require_valid_map(m);
    if (d == mr) {
      if (rank(m) != mr) continue;
      return m;
    }
    try {
      TcdMap low = project(m, random_admissible_center(m, mr - d, rng));
      if (rank(low) != d) continue;
      return low;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error("ConstructionFailed", "construction retry budget exhausted");
}

Subspace lift_center(int r, int d_target) {
  Mat rows;
  for (int c = r + 1; c <= d_target; ++c) {
    Vec row(static_cast<size_t>(d_target) + 1, Scalar(0));
    row[c] = 1;
    rows.push_back(row);
  }
  return Subspace(std::move(rows));
}

TcdMap lift(const TcdMap& m, int d_target, std::uint64_t seed) {
  int r = rank(m);
  if (!(r < d_target && d_target <= m.g.mrank()))
    throw Error("RankDeficient", "lift target " + itos(d_target) + " outside (" + itos(r) +
                                     ", " + itos(m.g.mrank()) + "]");
  if (m.d != r)
    throw Error("RankDeficient", "lift requires ambient dimension equal to the rank",
                "ambient " + itos(m.d) + ", rank " + itos(r));
  Hyperplane chart = [&] {
    std::vector<ProjPoint> pts;
    for (const auto& [wid, p] : m.points) pts.push_back(p);
    return chart_avoiding(pts, m.d);
  }();
  Vrc v = vrc_of(m, chart);
  PerfectOrientation po = perfect_orientation(m.g);
  BuildOrder bo = build_order(m.g, po);
  int extra = d_target - r;
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::map<int, Vec> u;  // appended coordinates per rep white
    Mat span_rows;
    for (int w : bo.order) {
      auto in = bo.incoming_edge.find(w);
      if (in == bo.incoming_edge.end()) {
        Vec uw;
        for (int i = 0; i < extra; ++i) uw.push_back(rng.smallRational());
        u[w] = uw;
        Vec full = v.vectors.at(w);
        full.insert(full.end(), uw.begin(), uw.end());
        span_rows.push_back(full);
        continue;
      }
      int b = m.g.edge(in->second).black;
      Scalar a1 = v.weights.at(in->second);
      Vec acc(static_cast<size_t>(extra), Scalar(0));
      for (int e : m.g.black(b).edges) {
        if (e == in->second) continue;
        acc = add(acc, scale(v.weights.at(e), u.at(m.g.rep_white(m.g.edge(e).white))));
      }
      u[w] = scale(Scalar(-1) / a1, acc);
    }
    if (tcd::rank(span_rows) != d_target + 1) continue;
    TcdMap out;
    out.g = m.g;
    out.d = d_target;
    for (const auto& [wid, vec] : v.vectors) {
      Vec full = vec;
      full.insert(full.end(), u.at(wid).begin(), u.at(wid).end());
      out.points[wid] = ProjPoint(full);
    }
    require_valid_map(out);
    return out;
  }
  throw Error("ExhaustedRetries", "no spanning lift vectors found in 64 attempts");
}

bool is_one_generic(const TcdMap& m, std::string* witness) {
  for (const Face& f : trace_faces(m.g)) {
    std::set<int> reps;
    for (int w : f.whitesOn) reps.insert(m.g.rep_white(w));
    std::vector<int> ws(reps.begin(), reps.end());
    for (size_t i = 0; i < ws.size(); ++i)
      for (size_t j = i + 1; j < ws.size(); ++j)
        for (size_t k = j + 1; k < ws.size(); ++k) {
          if (span_dim({m.points.at(ws[i]), m.points.at(ws[j]), m.points.at(ws[k])}) != 2) {
            if (witness)
              *witness = "whites " + itos(ws[i]) + "," + itos(ws[j]) + "," + itos(ws[k]) +
                         " on face " + itos(f.index) + " do not span a plane";
            return false;
          }
        }
  }
  for (int p = 1; p <= m.g.n; ++p) {
    int q = p % m.g.n + 1;
    if (p == q || m.g.glued(p) || m.g.glued(q)) continue;
    if (m.point(m.g.white_at(p)) == m.point(m.g.white_at(q))) {
      if (witness)
        *witness = "boundary whites at positions " + itos(p) + "," + itos(q) +
                   " carry the same point";
      return false;
    }
  }
  return true;
}

}  // namespace tcd
