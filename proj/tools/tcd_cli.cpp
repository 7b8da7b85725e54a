#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "tcd/cluster.hpp"
#include "tcd/io.hpp"
#include "tcd/lattice.hpp"
#include "tcd/moves.hpp"
#include "tcd/sections.hpp"
#include "tcd/verify.hpp"

using namespace tcd;
using ordered = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadDocument", "cannot open file", path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("BadDocument", "cannot open output file", out_path);
  out << text;
}

// A document that is a bare graph or a full map; bare graphs get no points.
struct Input {
  BtbGraph g;
  std::optional<TcdMap> map;
  std::optional<Hyperplane> hyperplane;
};

Input load(const std::string& path) {
  std::string text = slurp(path);
  Input in;
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (!doc.is_discarded() && doc.is_object() && doc.contains("points")) {
    MapDocument md = map_from_json(text);
    in.g = md.map.g;
    in.map = std::move(md.map);
    in.hyperplane = md.hyperplane;
  } else {
    in.g = graph_from_json(text);
  }
  return in;
}

TcdMap require_map(const Input& in, const std::string& path) {
  if (!in.map) throw Error("BadDocument", "a map document is required", path);
  return *in.map;
}

Hyperplane parse_hyperplane(const std::string& csv) {
  Vec v;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(scalar_from_string(part));
  return Hyperplane(v);
}

std::string rational(const Scalar& x) { return scalar_to_string(x); }

ordered report_json(const SuiteReport& r) {
  ordered jr;
  jr["suite"] = r.suite;
  jr["pass"] = r.ok();
  jr["checks"] = ordered::array();
  for (const auto& c : r.checks)
    jr["checks"].push_back(ordered{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return jr;
}

int run(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for triple-crossing-diagram maps"};
  app.require_subcommand(1);

  std::string in_path, out_path, script_path, hp_csv, suite = "all", svg_path, attach_path,
              checks_csv;
  int rank_opt = 1, tree_choice = 0, max_nodes = 20000;
  std::uint64_t seed = 0;
  bool flag_projective = false, flag_affine = false, flag_tiling = false;

  auto* validate_cmd = app.add_subcommand("validate", "check validity and minimality of a graph");
  validate_cmd->add_option("graph", in_path)->required();

  auto* strands_cmd = app.add_subcommand("strands", "strand permutation and paths");
  strands_cmd->add_option("graph", in_path)->required();

  auto* construct_cmd = app.add_subcommand("construct", "build a random map of the given rank");
  construct_cmd->add_option("graph", in_path)->required();
  construct_cmd->add_option("--rank", rank_opt)->required();
  construct_cmd->add_option("--seed", seed)->required();
  construct_cmd->add_option("-o,--output", out_path);

  auto* move_cmd = app.add_subcommand("move", "apply a script of local moves");
  move_cmd->add_option("map", in_path)->required();
  move_cmd->add_option("--script", script_path)->required();
  move_cmd->add_option("-o,--output", out_path);

  auto* cluster_cmd = app.add_subcommand("cluster", "cluster variables of a map");
  cluster_cmd->add_flag("--projective", flag_projective);
  cluster_cmd->add_flag("--affine", flag_affine);
  cluster_cmd->add_option("map", in_path)->required();
  cluster_cmd->add_option("--hyperplane", hp_csv, "comma-separated rational covector");

  auto* section_cmd = app.add_subcommand("section", "hyperplane section of a map");
  section_cmd->add_option("map", in_path)->required();
  section_cmd->add_option("--hyperplane", hp_csv, "comma-separated rational covector");
  section_cmd->add_option("--tree", tree_choice);
  section_cmd->add_option("-o,--output", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
  verify_cmd->add_option("map", in_path)->required();
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"dskp", "mutation", "consistency", "theorem91", "desargues", "all"}));
  verify_cmd->add_option("--max-nodes", max_nodes);

  auto* explore_cmd = app.add_subcommand("explore", "close a graph under local moves");
  explore_cmd->add_option("graph", in_path)->required();
  explore_cmd->add_option("--max-nodes", max_nodes);
  explore_cmd->add_option("--attach-map", attach_path);
  explore_cmd->add_option("--check", checks_csv, "comma-separated: desargues,dskp");

  auto* render_cmd = app.add_subcommand("render", "draw the graph (or plabic tiling) as SVG");
  render_cmd->add_option("input", in_path)->required();
  render_cmd->add_option("--svg", svg_path)->required();
  render_cmd->add_flag("--tiling", flag_tiling);

  CLI11_PARSE(app, argc, argv);

  std::optional<Hyperplane> hp;
  if (!hp_csv.empty()) hp = parse_hyperplane(hp_csv);

  if (validate_cmd->parsed()) {
    Input in = load(in_path);
    ValidationReport vr = validate(in.g);
    ordered out;
    out["valid"] = vr.valid;
    out["violations"] = vr.violations;
    out["notes"] = vr.notes;
    bool minimal = false;
    if (vr.valid) {
      MinimalityReport mr = is_minimal(in.g);
      minimal = mr.minimal;
      out["minimal"] = mr.minimal;
      if (!mr.minimal) out["reason"] = mr.reason + ": " + mr.witness;
    }
    if (in.map) {
      require_valid_map(*in.map);
      out["map_valid"] = true;
    }
    std::cout << out.dump(2) << "\n";
    return vr.valid && minimal ? 0 : 1;
  }

  if (strands_cmd->parsed()) {
    Input in = load(in_path);
    StrandData sd = strands(in.g);
    ordered out;
    out["perm"] = sd.perm;
    out["strands"] = ordered::array();
    for (const Strand& s : sd.strands)
      out["strands"].push_back(ordered{
          {"source", s.source}, {"sink", s.sink}, {"edges", s.edgesCrossed}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (construct_cmd->parsed()) {
    Input in = load(in_path);
    TcdMap m = construct(in.g, rank_opt, seed);
    emit(map_to_json(m, {}, seed), out_path);
    return 0;
  }

  if (move_cmd->parsed()) {
    TcdMap m = require_map(load(in_path), in_path);
    auto script = nlohmann::json::parse(slurp(script_path));
    for (const auto& step : script) {
      MoveSite s;
      std::string kind = step.at("kind").get<std::string>();
      if (kind == "resplit")
        s.kind = MoveSite::Kind::Resplit;
      else if (kind == "spider")
        s.kind = MoveSite::Kind::Spider;
      else
        throw Error("BadDocument", "unknown move kind", kind);
      s.target = step.at("target").get<int>();
      m = apply_move(m, s);
    }
    emit(map_to_json(m), out_path);
    return 0;
  }

  if (cluster_cmd->parsed()) {
    TcdMap m = require_map(load(in_path), in_path);
    if (flag_projective == flag_affine)
      throw Error("BadDocument", "pass exactly one of --projective / --affine", "");
    ordered out;
    if (flag_projective) {
      ordered vars = ordered::object();
      for (const auto& [f, x] : x_variables(m)) vars[std::to_string(f)] = rational(x);
      out["projective"] = vars;
    } else {
      if (!hp) throw Error("BadDocument", "--affine requires --hyperplane", "");
      ordered vars = ordered::object();
      for (const auto& [w, y] : y_variables(m, *hp)) vars[std::to_string(w)] = rational(y);
      out["affine"] = vars;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (section_cmd->parsed()) {
    Input in = load(in_path);
    TcdMap m = require_map(in, in_path);
    if (!hp) hp = in.hyperplane;
    if (!hp) throw Error("BadDocument", "section requires --hyperplane", "");
    SectionResult sr = section_map(m, *hp, tree_choice);
    emit(map_to_json(sr.sigma_map, *hp), out_path);
    return 0;
  }

  if (verify_cmd->parsed()) {
    Input in = load(in_path);
    TcdMap m = require_map(in, in_path);
    if (!hp) hp = in.hyperplane;
    std::vector<SuiteReport> reports;
    if (suite == "dskp") reports = {verify_dskp(m)};
    else if (suite == "mutation") reports = {verify_mutation(m, hp)};
    else if (suite == "consistency") reports = {verify_consistency(m, max_nodes)};
    else if (suite == "theorem91") reports = {verify_theorem91(m, hp)};
    else if (suite == "desargues") reports = {verify_desargues(m, max_nodes)};
    else reports = verify_all(m, hp, max_nodes);
    ordered out = ordered::array();
    bool ok = true;
    for (const auto& r : reports) {
      ok = ok && r.ok();
      out.push_back(report_json(r));
    }
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
  }

  if (explore_cmd->parsed()) {
    Input in = load(in_path);
    std::optional<TcdMap> m = in.map;
    if (!attach_path.empty()) m = require_map(load(attach_path), attach_path);
    MoveGraph mg = m ? explore(*m, max_nodes) : explore(in.g, max_nodes);
    ordered out;
    out["nodes"] = mg.keys.size();
    out["moves"] = mg.arrows.size();
    out["undirected_edges"] = mg.undirected_edges().size();
    if (m) {
      LabelTable table = collect_labels(mg);
      out["labels"] = table.entries.size();
      std::stringstream cs(checks_csv);
      std::string name;
      out["checks"] = ordered::array();
      while (std::getline(cs, name, ',')) {
        LatticeReport lr;
        if (name == "desargues") lr = verify_desargues_map(table);
        else if (name == "dskp") lr = verify_dskp_lattice(table);
        else throw Error("BadDocument", "unknown check", name);
        out["checks"].push_back(ordered{{"name", name},
                                        {"pass", lr.ok()},
                                        {"checked", lr.checked},
                                        {"incomplete", lr.incomplete},
                                        {"violations", lr.violations}});
      }
    }
    std::cout << out.dump(2) << "\n";
    for (const auto& c : out.value("checks", ordered::array()))
      if (!c.at("pass").get<bool>()) return 1;
    return 0;
  }

  if (render_cmd->parsed()) {
    Input in = load(in_path);
    if (flag_tiling) {
      BanLabels bl = ban_labels(in.g);
      std::vector<LatticeLabel> labels;
      for (const auto& [wid, w] : in.g.whites)
        if (in.g.rep_white(wid) == wid) labels.push_back(bl.whiteAn.at(wid));
      emit(render_tiling_svg(plabic_tiling(labels)), svg_path);
    } else {
      emit(render_svg(in.g, in.map ? &*in.map : nullptr), svg_path);
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << error_to_json(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_to_json(Error("Unexpected", e.what())) << std::flush;
    return 3;
  }
}
