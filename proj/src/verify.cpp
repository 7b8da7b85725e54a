#include "tcd/verify.hpp"

#include <map>
#include <set>

#include "tcd/cluster.hpp"
#include "tcd/lattice.hpp"
#include "tcd/moves.hpp"
#include "tcd/sections.hpp"

namespace tcd {

namespace {

Hyperplane default_chart(const std::vector<const TcdMap*>& ms) {
  std::vector<ProjPoint> pts;
  int d = 0;
  for (const TcdMap* m : ms) {
    d = m->d;
    for (const auto& [w, p] : m->points) pts.push_back(p);
  }
  return chart_avoiding(pts, d);
}

// Face correspondence across a move, by strand label; the mutated
// quadrilateral (face index `moved` of g1, or -1 for none) is paired with
// the unique label of g2 absent from g1.
std::map<int, int> face_bijection(const BtbGraph& g1, const BtbGraph& g2, int moved) {
  auto lab1 = ban_labels(g1).faceAn;
  auto lab2 = ban_labels(g2).faceAn;
  std::map<std::string, int> of2;
  for (size_t i = 0; i < lab2.size(); ++i) {
    std::string key = label_str(lab2[i]);
    if (of2.count(key))
      throw Error("ConsistencyViolation", "duplicate face label after move", key);
    of2[key] = static_cast<int>(i);
  }
  std::map<int, int> to2;
  std::set<std::string> used;
  for (size_t i = 0; i < lab1.size(); ++i) {
    if (static_cast<int>(i) == moved) continue;
    std::string key = label_str(lab1[i]);
    auto it = of2.find(key);
    if (it == of2.end())
      throw Error("ConsistencyViolation", "face label lost across move", key);
    to2[static_cast<int>(i)] = it->second;
    used.insert(key);
  }
  if (moved >= 0) {
    int unmatched = -1;
    for (const auto& [key, idx] : of2)
      if (!used.count(key)) {
        if (unmatched != -1)
          throw Error("ConsistencyViolation", "move created two new face labels", key);
        unmatched = idx;
      }
    if (unmatched < 0)
      throw Error("ConsistencyViolation", "move created no new face label", "");
    to2[moved] = unmatched;
  }
  return to2;
}

bool quivers_equal(const Quiver& expected, const Quiver& actual,
                   const std::map<int, int>& to_actual, std::string* why) {
  for (int v : expected.vertices) {
    int v2 = to_actual.at(v);
    if (actual.frozen.count(v2) != expected.frozen.count(v)) {
      *why = "frozen status differs at vertex " + std::to_string(v);
      return false;
    }
    if (!expected.frozen.count(v) && actual.values.at(v2) != expected.values.at(v)) {
      *why = "variable differs at vertex " + std::to_string(v);
      return false;
    }
    for (int u : expected.vertices)
      if (actual.nu(v2, to_actual.at(u)) != expected.nu(v, u)) {
        *why = "arrow multiplicity differs on (" + std::to_string(v) + "," + std::to_string(u) +
               ")";
        return false;
      }
  }
  return true;
}

}  // namespace

SuiteReport verify_dskp(const TcdMap& m) {
  SuiteReport rep{"dskp", {}};
  int sites = 0;
  for (const MoveSite& s : find_move_sites(m.g)) {
    if (s.kind != MoveSite::Kind::Resplit) continue;
    ++sites;
    SuiteReport::Check c{"resplit at white " + std::to_string(s.target), false, ""};
    try {
      std::vector<ProjPoint> six;
      static_cast<void>(resplit(m, s.target, &six));
      c.pass = dskp_check(six);
      c.detail = c.pass ? "multi-ratio -1" : "multi-ratio differs from -1";
    } catch (const Error& e) {
      c.pass = std::string(e.code()) == "IndeterminateMove";
      c.detail = std::string(e.code()) + ": " + e.message();
      if (c.pass) c.detail += " (move undefined here, identity vacuous)";
    }
    rep.checks.push_back(std::move(c));
  }
  if (sites == 0) rep.checks.push_back({"resplit sites", true, "none present"});
  return rep;
}

SuiteReport verify_mutation(const TcdMap& m, const std::optional<Hyperplane>& chart) {
  SuiteReport rep{"mutation", {}};
  for (const MoveSite& s : find_move_sites(m.g)) {
    SuiteReport::Check c{s.str(), false, ""};
    try {
      TcdMap m2 = apply_move(m, s);
      Hyperplane h = chart ? *chart : default_chart({&m, &m2});
      std::string why;
      if (s.kind == MoveSite::Kind::Spider) {
        Quiver q = projective_quiver(m.g);
        q.values = x_variables(m);
        Quiver q2 = projective_quiver(m2.g);
        q2.values = x_variables(m2);
        auto to2 = face_bijection(m.g, m2.g, s.target);
        if (!quivers_equal(mutate(q, s.target), q2, to2, &why)) {
          c.detail = "projective mutation mismatch: " + why;
        } else if (y_variables(m2, h) != y_variables(m, h)) {
          c.detail = "affine variables not fixed";
        } else {
          c.pass = true;
          c.detail = "projective variables mutate, affine variables fixed";
        }
      } else {
        int w_new = 0;
        TcdMap m2r = resplit(m, s.target, nullptr, &w_new);
        Quiver q = affine_quiver(m.g);
        q.values = y_variables(m, h);
        Quiver q2 = affine_quiver(m2r.g);
        q2.values = y_variables(m2r, h);
        std::map<int, int> to2;
        for (int v : q.vertices) to2[v] = v == s.target ? w_new : v;
        auto xs1 = x_variables(m);
        auto xs2 = x_variables(m2r);
        auto face2 = face_bijection(m.g, m2r.g, -1);
        bool x_fixed = true;
        for (const auto& [f, x] : xs1)
          if (xs2.at(face2.at(f)) != x) x_fixed = false;
        if (!quivers_equal(mutate(q, s.target), q2, to2, &why)) {
          c.detail = "affine mutation mismatch: " + why;
        } else if (!x_fixed) {
          c.detail = "projective variables not fixed";
        } else {
          c.pass = true;
          c.detail = "affine variables mutate, projective variables fixed";
        }
      }
    } catch (const Error& e) {
      c.pass = std::string(e.code()) == "IndeterminateMove";
      c.detail = std::string(e.code()) + ": " + e.message();
      if (c.pass) c.detail += " (move undefined here, identity vacuous)";
    }
    rep.checks.push_back(std::move(c));
  }
  if (rep.checks.empty()) rep.checks.push_back({"move sites", true, "none present"});
  return rep;
}

SuiteReport verify_consistency(const TcdMap& m, int max_nodes) {
  SuiteReport rep{"consistency", {}};
  SuiteReport::Check c{"move-closure path independence", false, ""};
  try {
    MoveGraph mg = explore(m, max_nodes);
    LabelTable table = collect_labels(mg);
    c.pass = true;
    c.detail = std::to_string(mg.keys.size()) + " graphs, " + std::to_string(mg.arrows.size()) +
               " moves, " + std::to_string(table.entries.size()) + " labels, no conflicts";
  } catch (const Error& e) {
    c.detail = std::string(e.code()) + ": " + e.message();
  }
  rep.checks.push_back(std::move(c));
  return rep;
}

SuiteReport verify_theorem91(const TcdMap& m, const std::optional<Hyperplane>& chart,
                             int tree_choice) {
  SuiteReport rep{"theorem91", {}};
  try {
    Hyperplane h = chart ? *chart : default_chart({&m});
    ClusterComparison cmp = compare_cluster_structures(m, h, tree_choice);
    int values = 0;
    for (const auto& e : cmp.entries) {
      if (!e.value_ok)
        rep.checks.push_back({"variable at white " + std::to_string(e.white), false,
                              "affine value differs from the section's projective value"});
      if (!e.arrows_ok)
        rep.checks.push_back(
            {"arrows at white " + std::to_string(e.white), false, "quiver arrows differ"});
      if (!e.frozen && e.value_ok) ++values;
    }
    rep.checks.push_back({"affine structure vs section", cmp.ok,
                          std::to_string(values) + " mutable variables equal, quivers " +
                              (cmp.ok ? "isomorphic" : "differ")});
  } catch (const Error& e) {
    rep.checks.push_back(
        {"affine structure vs section", false, std::string(e.code()) + ": " + e.message()});
  }
  return rep;
}

SuiteReport verify_desargues(const TcdMap& m, int max_nodes) {
  SuiteReport rep{"desargues", {}};
  try {
    MoveGraph mg = explore(m, max_nodes);
    LabelTable table = collect_labels(mg);
    LatticeReport dr = verify_desargues_map(table);
    rep.checks.push_back({"black triples collinear", dr.ok(),
                          std::to_string(dr.checked) + " complete triples" +
                              (dr.ok() ? "" : "; " + dr.violations.front())});
    if (rank(m) == 1) {
      LatticeReport od = verify_dskp_lattice(table);
      rep.checks.push_back({"octahedron multi-ratios", od.ok(),
                            std::to_string(od.checked) + " complete octahedra, " +
                                std::to_string(od.incomplete) + " incomplete" +
                                (od.ok() ? "" : "; " + od.violations.front())});
    }
  } catch (const Error& e) {
    rep.checks.push_back({"lattice labels", false, std::string(e.code()) + ": " + e.message()});
  }
  return rep;
}

std::vector<SuiteReport> verify_all(const TcdMap& m, const std::optional<Hyperplane>& chart,
                                    int max_nodes) {
  return {verify_dskp(m), verify_mutation(m, chart), verify_consistency(m, max_nodes),
          verify_theorem91(m, chart), verify_desargues(m, max_nodes)};
}

}  // namespace tcd
