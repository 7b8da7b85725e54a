#include "tcd/tiling.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace tcd {

namespace {

std::string label_to_string(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// Cyclic interval {t-j, ..., t-1} reduced to 1..n.
std::vector<int> interval_label(int t, int j, int n) {
  std::vector<int> s;
  for (int d = j; d >= 1; --d) s.push_back(((t - d - 1) % n + n) % n + 1);
  std::sort(s.begin(), s.end());
  return s;
}

void enumerate_subsets(int j, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(j);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == j) {
      fn(cur);
      return;
    }
    for (int x = start; x <= n - (j - depth - 1); ++x) {
      cur[depth] = x;
      rec(x + 1, depth + 1);
    }
  };
  if (j == 0)
    fn({});
  else
    rec(1, 0);
}

// Exact CCW angle comparison of nonzero integer vectors, angles in [0, 2pi)
// measured from the +x axis.
struct Dir {
  long long x = 0, y = 0;
};

int half(const Dir& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; }

bool ccw_less(const Dir& a, const Dir& b) {
  if (half(a) != half(b)) return half(a) < half(b);
  return a.x * b.y - a.y * b.x > 0;
}

}  // namespace

bool weakly_separated(const std::vector<int>& A, const std::vector<int>& B, int n) {
  std::set<int> sa(A.begin(), A.end()), sb(B.begin(), B.end());
  std::vector<int> type;  // membership pattern of the symmetric difference
  for (int x = 1; x <= n; ++x) {
    bool ina = sa.count(x), inb = sb.count(x);
    if (ina && !inb) type.push_back(0);
    if (inb && !ina) type.push_back(1);
  }
  if (type.size() < 4) return true;
  int blocks = 0;
  for (size_t i = 0; i < type.size(); ++i)
    if (type[i] != type[(i + 1) % type.size()]) ++blocks;
  return blocks <= 2;
}

std::vector<std::vector<int>> maximal_ws_collection(int j, int n) {
  if (j < 0 || j > n) throw Error("NotWeaklySeparated", "subset size out of range");
  std::vector<std::vector<int>> coll;
  auto member = [&](const std::vector<int>& s) {
    return std::find(coll.begin(), coll.end(), s) != coll.end();
  };
  for (int t = 1; t <= n; ++t) {
    auto s = interval_label(t, j, n);
    if (!member(s)) coll.push_back(s);
  }
  for (const auto& a : coll)
    for (const auto& b : coll)
      if (!weakly_separated(a, b, n))
        throw Error("NotWeaklySeparated", "seed intervals conflict");
  enumerate_subsets(j, n, [&](const std::vector<int>& s) {
    if (member(s)) return;
    for (const auto& c : coll)
      if (!weakly_separated(s, c, n)) return;
    coll.push_back(s);
  });
  int expect = j * (n - j) + 1;
  if (static_cast<int>(coll.size()) != expect)
    throw Error("NotMaximal", "collection has " + std::to_string(coll.size()) +
                                  " labels, expected " + std::to_string(expect));
  return coll;
}

GrassmannianGraph tiling_graph(const std::vector<std::vector<int>>& collection, int j, int n) {
  GrassmannianGraph out;
  out.g.n = n;
  int k = j + 1;
  std::vector<std::vector<int>> coll = collection;

  // Exact coordinates: boundary anchors on a downward parabola put the
  // positions 1..n in clockwise order; each label sits at the vector sum of
  // its anchors, each triangle at (three times) its centroid.
  auto point = [&](const std::vector<int>& s) {
    Dir p;
    for (int i : s) {
      p.x += 3LL * i;
      p.y -= 3LL * i * i;
    }
    return p;
  };

  // Whites: one per label; boundary positions at the cyclic intervals.
  std::map<std::vector<int>, int> whiteOf;
  std::map<std::vector<int>, int> posOf;
  for (int t = 1; t <= n; ++t) posOf[interval_label(t, j, n)] = t;
  for (const auto& [lab, t] : posOf)
    if (std::find(coll.begin(), coll.end(), lab) == coll.end())
      throw Error("NotMaximal", "collection is missing the boundary interval " + label_to_string(lab));
  std::sort(coll.begin(), coll.end());
  for (const auto& s : coll) {
    auto it = posOf.find(s);
    int id = out.g.add_white(it == posOf.end() ? 0 : it->second);
    whiteOf[s] = id;
    out.labels[id] = s;
  }

  // Blacks: fan triangulations of the cliques of labels sharing a common
  // (j-1)-subset, three or more of which always form a convex polygon.
  struct Tri {
    int black;
    std::vector<std::vector<int>> labs;
  };
  std::vector<Tri> tris;
  std::map<std::pair<int, int>, int> edgeOf;  // (black, white) -> edge id
  enumerate_subsets(j - 1, n, [&](const std::vector<int>& key) {
    std::vector<std::vector<int>> clique;
    for (const auto& s : coll)
      if (std::includes(s.begin(), s.end(), key.begin(), key.end())) clique.push_back(s);
    if (clique.size() < 3) return;
    // Cyclic order around the clique centroid.
    Dir c;
    for (const auto& s : clique) {
      Dir p = point(s);
      c.x += p.x;
      c.y += p.y;
    }
    long long m = static_cast<long long>(clique.size());
    std::sort(clique.begin(), clique.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                Dir pa = point(a), pb = point(b);
                return ccw_less(Dir{m * pa.x - c.x, m * pa.y - c.y},
                                Dir{m * pb.x - c.x, m * pb.y - c.y});
              });
    int anchor = 0;
    for (size_t i = 1; i < clique.size(); ++i)
      if (clique[i] < clique[anchor]) anchor = static_cast<int>(i);
    int msz = static_cast<int>(clique.size());
    for (int s = 1; s + 1 < msz; ++s) {
      Tri tri;
      tri.black = out.g.add_black();
      tri.labs = {clique[anchor], clique[(anchor + s) % msz], clique[(anchor + s + 1) % msz]};
      for (const auto& lab : tri.labs)
        edgeOf[{tri.black, whiteOf[lab]}] = out.g.add_edge(tri.black, whiteOf[lab]);
      tris.push_back(std::move(tri));
    }
  });

  // Rewrite every rotation in exact geometric CCW order.
  std::map<int, Dir> blackPt;
  for (const Tri& tri : tris) {
    Dir q;
    for (const auto& lab : tri.labs) {
      Dir p = point(lab);
      q.x += p.x;
      q.y += p.y;
    }
    blackPt[tri.black] = q;  // three times the centroid
    auto& edges = out.g.black_mut(tri.black).edges;
    std::sort(edges.begin(), edges.end(), [&](int ea, int eb) {
      Dir pa = point(out.labels[out.g.edge(ea).white]);
      Dir pb = point(out.labels[out.g.edge(eb).white]);
      return ccw_less(Dir{3 * pa.x - q.x, 3 * pa.y - q.y}, Dir{3 * pb.x - q.x, 3 * pb.y - q.y});
    });
  }
  for (const auto& s : coll) {
    int id = whiteOf[s];
    auto& w = out.g.white_mut(id);
    if (w.edges.empty()) {
      if (w.boundary == 0)
        throw Error("ConstructionFailed", "internal label " + label_to_string(s) + " is isolated");
      continue;
    }
    Dir p = point(s);
    auto dir_of = [&](int e) {
      Dir q = blackPt[out.g.edge(e).black];
      return Dir{q.x - 3 * p.x, q.y - 3 * p.y};
    };
    std::sort(w.edges.begin(), w.edges.end(),
              [&](int ea, int eb) { return ccw_less(dir_of(ea), dir_of(eb)); });
    if (w.boundary != 0) {
      // Insert the two boundary arc directions and rotate the cyclic order so
      // it runs sink side -> source side.
      int t = w.boundary;
      Dir toPrev = point(interval_label((t + n - 2) % n + 1, j, n));
      Dir toNext = point(interval_label(t % n + 1, j, n));
      Dir dsnk{toPrev.x - p.x, toPrev.y - p.y};
      Dir dsrc{toNext.x - p.x, toNext.y - p.y};
      // Edges must all lie strictly CCW-between the sink and source arcs.
      std::vector<std::pair<Dir, int>> all;
      for (int e : w.edges) all.push_back({dir_of(e), e});
      all.push_back({dsnk, -1});
      all.push_back({dsrc, -2});
      std::sort(all.begin(), all.end(),
                [&](const auto& a, const auto& b) { return ccw_less(a.first, b.first); });
      int at = -1;
      for (size_t i = 0; i < all.size(); ++i)
        if (all[i].second == -1) at = static_cast<int>(i);
      std::rotate(all.begin(), all.begin() + at, all.end());
      if (all.back().second != -2)
        throw Error("ConstructionFailed",
                    "boundary rotation at position " + std::to_string(t) + " is inconsistent");
      w.edges.clear();
      for (size_t i = 1; i + 1 < all.size(); ++i) w.edges.push_back(all[i].second);
    }
  }

  require_valid(out.g);
  StrandData sd = strands(out.g);
  for (int i = 1; i <= n; ++i) {
    int want = (i - 1 + k) % n + 1;
    if (sd.perm[i - 1] != want)
      throw Error("ConstructionFailed",
                  "strand permutation mismatch at " + std::to_string(i) + ": got " +
                      std::to_string(sd.perm[i - 1]) + ", want " + std::to_string(want));
  }
  MinimalityReport mr = is_minimal(out.g);
  if (!mr.minimal) throw Error("ConstructionFailed", "tiling graph not minimal: " + mr.reason);
  return out;
}

GrassmannianGraph grassmannian_graph(int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw Error("ConstructionFailed", "grassmannian parameters out of range");

  if (k == 1) {
    // All boundary whites glued into one edgeless vertex.
    GrassmannianGraph out;
    out.g.n = n;
    std::vector<int> block;
    for (int p = 1; p <= n; ++p) {
      int id = out.g.add_white(p);
      out.labels[id] = {};
      block.push_back(p);
    }
    if (n >= 2) out.g.cactus.push_back(block);
    require_valid(out.g);
    return out;
  }

  return tiling_graph(maximal_ws_collection(k - 1, n), k - 1, n);
}

BtbGraph graph_from_grassmannian(int k, int n) { return grassmannian_graph(k, n).g; }

}  // namespace tcd
