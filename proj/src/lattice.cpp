#include "tcd/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "tcd/linalg.hpp"

namespace tcd {

namespace {

std::string itos(int x) { return std::to_string(x); }

std::string subset_str(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string vec_label_str(const LatticeLabel& z) {
  std::string out = "(";
  for (size_t i = 0; i < z.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(z[i]);
  }
  return out + ")";
}

std::vector<int> support(const LatticeLabel& z) {
  std::vector<int> s;
  for (size_t i = 0; i < z.size(); ++i)
    if (z[i] == 1) s.push_back(static_cast<int>(i) + 1);
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

}  // namespace

bool weakly_separated(const LatticeLabel& z1, const LatticeLabel& z2) {
  if (z1.size() != z2.size())
    throw Error("LevelMismatch", "labels have different lengths",
                itos(static_cast<int>(z1.size())) + " vs " + itos(static_cast<int>(z2.size())));
  long long s1 = std::accumulate(z1.begin(), z1.end(), 0LL);
  long long s2 = std::accumulate(z2.begin(), z2.end(), 0LL);
  if (s1 != s2)
    throw Error("LevelMismatch", "labels have different coordinate sums",
                itos(static_cast<int>(s1)) + " vs " + itos(static_cast<int>(s2)));
  int changes = 0, last = 0;
  for (size_t i = 0; i < z1.size(); ++i) {
    int s = (z1[i] > z2[i]) - (z1[i] < z2[i]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes <= 2;
}

std::array<long long, 2> PlabicTiling::position(const std::vector<int>& z) {
  std::array<long long, 2> p{0, 0};
  for (int i : z) {
    p[0] += 3LL * i;
    p[1] -= 3LL * i * i;
  }
  return p;
}

PlabicTiling plabic_tiling(const std::vector<LatticeLabel>& labels) {
  if (labels.empty()) throw Error("NotMaximal", "empty label collection");
  PlabicTiling t;
  t.n = static_cast<int>(labels[0].size());

  std::set<std::vector<int>> subs;
  for (const LatticeLabel& z : labels) {
    for (int x : z)
      if (x != 0 && x != 1)
        throw Error("NotWeaklySeparated", "label is not a 0/1 vector", vec_label_str(z));
    subs.insert(support(z));
  }
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b)
      if (!weakly_separated(labels[a], labels[b]))
        throw Error("NotWeaklySeparated", "labels interleave",
                    vec_label_str(labels[a]) + " vs " + vec_label_str(labels[b]));

  t.level = static_cast<int>(subs.begin()->size());
  int j = t.level, n = t.n;
  int expect = j * (n - j) + 1;
  if (static_cast<int>(subs.size()) != expect)
    throw Error("NotMaximal", "collection has " + itos(static_cast<int>(subs.size())) +
                                  " distinct labels, expected " + itos(expect));
  t.labels.assign(subs.begin(), subs.end());

  // Black cliques share a (j-1)-subset and differ in the added anchor; face
  // cliques share a (j+1)-superset and differ in the removed anchor. Anchors
  // lie convexly on the parabola, so the convex cyclic order is by added
  // anchor (blacks) and by removed anchor reversed (faces).
  auto add_cliques = [&](int key_size, bool black) {
    enumerate_subsets(key_size, n, [&](const std::vector<int>& key) {
      std::vector<std::pair<int, std::vector<int>>> members;  // (anchor, label)
      for (const auto& z : t.labels) {
        if (black) {
          if (!std::includes(z.begin(), z.end(), key.begin(), key.end())) continue;
          std::vector<int> extra;
          std::set_difference(z.begin(), z.end(), key.begin(), key.end(),
                              std::back_inserter(extra));
          members.push_back({extra[0], z});
        } else {
          if (!std::includes(key.begin(), key.end(), z.begin(), z.end())) continue;
          std::vector<int> extra;
          std::set_difference(key.begin(), key.end(), z.begin(), z.end(),
                              std::back_inserter(extra));
          members.push_back({extra[0], z});
        }
      }
      if (members.size() < 3) return;
      std::sort(members.begin(), members.end());
      if (!black) std::reverse(members.begin(), members.end());
      PlabicTiling::Clique c;
      c.black = black;
      c.key = key;
      for (auto& [a, z] : members) c.boundary.push_back(std::move(z));
      t.cliques.push_back(std::move(c));
    });
  };
  add_cliques(j - 1, true);
  add_cliques(j + 1, false);

  t.graph = tiling_graph(t.labels, j, n);
  return t;
}

LabelTable collect_labels(const MoveGraph& mg) {
  if (!mg.has_maps)
    throw Error("PreconditionViolated", "move graph carries no attached maps");
  LabelTable t;
  t.n = mg.graphs.empty() ? 0 : mg.graphs[0].n;
  for (size_t i = 0; i < mg.graphs.size(); ++i) {
    BanLabels lb = ban_labels(mg.graphs[i]);
    for (const auto& [wid, lab] : lb.whiteAn) {
      const ProjPoint& p = mg.maps[i].point(wid);
      auto it = t.entries.find(lab);
      if (it == t.entries.end()) {
        t.entries[lab] = {p, static_cast<int>(i), wid};
      } else if (!(it->second.point == p)) {
        throw Error("ConsistencyViolation", "label maps to two distinct points",
                    "label " + label_str(lab) + ": node " + itos(it->second.node) + " white " +
                        itos(it->second.white) + " vs node " + itos(static_cast<int>(i)) +
                        " white " + itos(wid));
      }
    }
  }
  return t;
}

LatticeReport verify_desargues_map(const LabelTable& table) {
  LatticeReport rep;
  // group labels by base z = label - e_i
  std::map<LatticeLabel, std::vector<std::pair<int, const ProjPoint*>>> bases;
  for (const auto& [lab, e] : table.entries) {
    for (size_t i = 0; i < lab.size(); ++i) {
      if (lab[i] <= 0) continue;
      LatticeLabel base = lab;
      base[i] -= 1;
      bases[base].push_back({static_cast<int>(i) + 1, &e.point});
    }
  }
  for (const auto& [base, pts] : bases) {
    if (pts.size() < 3) continue;
    for (size_t a = 0; a < pts.size(); ++a)
      for (size_t b = a + 1; b < pts.size(); ++b)
        for (size_t c = b + 1; c < pts.size(); ++c) {
          Mat m = {pts[a].second->h, pts[b].second->h, pts[c].second->h};
          ++rep.checked;
          if (rank(m) > 2)
            rep.violations.push_back("black triple at base " + vec_label_str(base) + " + e_{" +
                                     itos(pts[a].first) + "," + itos(pts[b].first) + "," +
                                     itos(pts[c].first) + "} is not collinear");
        }
  }
  return rep;
}

const std::array<std::pair<int, int>, 6> dskp_octahedron_order = {
    {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 3}, {1, 2}}};

LatticeReport verify_dskp_lattice(const LabelTable& table) {
  Mat all;
  for (const auto& [lab, e] : table.entries) all.push_back(e.point.h);
  if (rank(all) > 2)
    throw Error("PreconditionViolated", "table points do not lie on a projective line");

  LatticeReport rep;
  // group by base z = label - e_i - e_j
  std::map<LatticeLabel, std::map<std::pair<int, int>, const ProjPoint*>> bases;
  for (const auto& [lab, e] : table.entries) {
    std::vector<int> sup;
    for (size_t i = 0; i < lab.size(); ++i)
      if (lab[i] > 0) sup.push_back(static_cast<int>(i));
    for (size_t a = 0; a < sup.size(); ++a)
      for (size_t b = a + 1; b < sup.size(); ++b) {
        LatticeLabel base = lab;
        base[sup[a]] -= 1;
        base[sup[b]] -= 1;
        bases[base][{sup[a] + 1, sup[b] + 1}] = &e.point;
      }
  }
  for (const auto& [base, pairs] : bases) {
    std::set<int> idx;
    for (const auto& [pr, p] : pairs) {
      idx.insert(pr.first);
      idx.insert(pr.second);
    }
    std::vector<int> is(idx.begin(), idx.end());
    int m = static_cast<int>(is.size());
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c)
          for (int d = c + 1; d < m; ++d) {
            std::array<int, 4> I = {is[a], is[b], is[c], is[d]};
            int present = 0;
            std::vector<ProjPoint> six;
            bool complete = true;
            for (const auto& [u, v] : dskp_octahedron_order) {
              auto it = pairs.find({std::min(I[u], I[v]), std::max(I[u], I[v])});
              if (it == pairs.end()) {
                complete = false;
              } else {
                ++present;
                if (complete) six.push_back(*it->second);
              }
            }
            if (!complete) {
              if (present >= 5) ++rep.incomplete;
              continue;
            }
            ++rep.checked;
            if (!dskp_check(six))
              rep.violations.push_back("octahedron at base " + vec_label_str(base) + " on I=" +
                                       subset_str({I[0], I[1], I[2], I[3]}) +
                                       " fails the multi-ratio identity");
          }
  }
  return rep;
}

}  // namespace tcd
