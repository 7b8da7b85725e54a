#include "tcd/io.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace tcd {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

Error bad(const std::string& msg, const std::string& witness = "") {
  return Error("BadDocument", msg, witness);
}

}  // namespace

std::string graph_to_json(const BtbGraph& g) {
  ordered doc;
  doc["n"] = g.n;
  doc["cactus"] = g.cactus.empty() ? json::array() : json(g.cactus);
  doc["whites"] = json::array();
  for (const auto& [id, w] : g.whites) {
    ordered jw;
    jw["id"] = id;
    if (w.boundary == 0)
      jw["boundary"] = nullptr;
    else
      jw["boundary"] = w.boundary;
    std::vector<int> nbrs;
    for (int e : w.edges) nbrs.push_back(g.edge(e).black);
    jw["nbrs"] = nbrs;
    doc["whites"].push_back(std::move(jw));
  }
  doc["blacks"] = json::array();
  for (const auto& [id, b] : g.blacks) {
    ordered jb;
    jb["id"] = id;
    std::vector<int> nbrs;
    for (int e : b.edges) nbrs.push_back(g.edge(e).white);
    jb["nbrs"] = nbrs;
    doc["blacks"].push_back(std::move(jb));
  }
  return doc.dump(2) + "\n";
}

BtbGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw bad("graph document is not valid JSON", e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("whites") || !doc.contains("blacks"))
    throw bad("graph document must have keys n, whites, blacks");
  BtbGraph g;
  try {
    g.n = doc.at("n").get<int>();
    if (doc.contains("cactus") && !doc.at("cactus").is_null())
      g.cactus = doc.at("cactus").get<std::vector<std::vector<int>>>();
    for (const auto& jw : doc.at("whites")) {
      int id = jw.at("id").get<int>();
      if (g.whites.count(id) || g.blacks.count(id)) throw bad("duplicate id", std::to_string(id));
      BtbGraph::White w;
      w.id = id;
      if (jw.contains("boundary") && !jw.at("boundary").is_null())
        w.boundary = jw.at("boundary").get<int>();
      g.whites[id] = std::move(w);
      g.next_id = std::max(g.next_id, id + 1);
    }
    for (const auto& jb : doc.at("blacks")) {
      int id = jb.at("id").get<int>();
      if (g.whites.count(id) || g.blacks.count(id)) throw bad("duplicate id", std::to_string(id));
      g.blacks[id] = {id, {}};
      g.next_id = std::max(g.next_id, id + 1);
    }
    // Edges are created from the black rotations; each white rotation then
    // consumes the edges to each named black in creation order.
    std::map<std::pair<int, int>, std::deque<int>> pool;  // (white, black) -> edge ids
    for (const auto& jb : doc.at("blacks")) {
      int id = jb.at("id").get<int>();
      for (const auto& jn : jb.at("nbrs")) {
        int wid = jn.get<int>();
        if (!g.whites.count(wid)) throw bad("black neighbor is not a white id", std::to_string(wid));
        int e = g.fresh_id();
        g.edges[e] = {e, id, wid};
        g.blacks[id].edges.push_back(e);
        pool[{wid, id}].push_back(e);
      }
    }
    for (const auto& jw : doc.at("whites")) {
      int id = jw.at("id").get<int>();
      for (const auto& jn : jw.at("nbrs")) {
        int bid = jn.get<int>();
        auto it = pool.find({id, bid});
        if (it == pool.end() || it->second.empty())
          throw bad("white rotation names a black without a free edge",
                    std::to_string(id) + "-" + std::to_string(bid));
        g.whites[id].edges.push_back(it->second.front());
        it->second.pop_front();
      }
    }
    for (const auto& [key, q] : pool)
      if (!q.empty())
        throw bad("black rotation has edges not named by the white rotation",
                  std::to_string(key.first) + "-" + std::to_string(key.second));
  } catch (const json::exception& e) {
    throw bad("malformed graph document", e.what());
  }
  return g;
}

std::string map_to_json(const TcdMap& m, const std::optional<Hyperplane>& hyperplane,
                        std::optional<std::uint64_t> seed) {
  ordered doc;
  doc["graph"] = ordered::parse(graph_to_json(m.g));
  doc["d"] = m.d;
  ordered pts = ordered::object();
  for (const auto& [wid, p] : m.points) {
    std::vector<std::string> coords;
    for (const Scalar& x : p.h) coords.push_back(scalar_to_string(x));
    pts[std::to_string(wid)] = coords;
  }
  doc["points"] = std::move(pts);
  if (hyperplane) {
    std::vector<std::string> coords;
    for (const Scalar& x : hyperplane->cov) coords.push_back(scalar_to_string(x));
    doc["hyperplane"] = coords;
  }
  if (seed) doc["seed"] = *seed;
  return doc.dump(2) + "\n";
}

MapDocument map_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw bad("map document is not valid JSON", e.what());
  }
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("d") || !doc.contains("points"))
    throw bad("map document must have keys graph, d, points");
  MapDocument out;
  try {
    if (doc.at("graph").is_string()) {
      std::ifstream in(doc.at("graph").get<std::string>());
      if (!in) throw bad("cannot open graph file", doc.at("graph").get<std::string>());
      std::stringstream ss;
      ss << in.rdbuf();
      out.map.g = graph_from_json(ss.str());
    } else {
      out.map.g = graph_from_json(doc.at("graph").dump());
    }
    out.map.d = doc.at("d").get<int>();
    for (const auto& [key, jp] : doc.at("points").items()) {
      int wid = 0;
      try {
        wid = std::stoi(key);
      } catch (const std::exception&) {
        throw bad("point key is not a white id", key);
      }
      Vec v;
      for (const auto& jx : jp) v.push_back(scalar_from_string(jx.get<std::string>()));
      if (static_cast<int>(v.size()) != out.map.d + 1)
        throw bad("point has wrong number of coordinates", key);
      out.map.points[wid] = ProjPoint(v);
    }
    if (doc.contains("hyperplane") && !doc.at("hyperplane").is_null()) {
      Vec v;
      for (const auto& jx : doc.at("hyperplane")) v.push_back(scalar_from_string(jx.get<std::string>()));
      out.hyperplane = Hyperplane(v);
    }
    if (doc.contains("seed") && !doc.at("seed").is_null())
      out.seed = doc.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw bad("malformed map document", e.what());
  }
  return out;
}

std::string error_to_json(const Error& e) {
  ordered doc;
  doc["code"] = e.code();
  doc["message"] = e.message();
  doc["witness"] = e.witness();
  return doc.dump(2) + "\n";
}

namespace {

struct Pt {
  double x = 0, y = 0;
};

std::string fmt(double v) {
  char buf[32];
  snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const BtbGraph& g, const TcdMap* map) {
  require_valid(g);
  const double R = 220, C = 256;
  std::map<int, Pt> pos;
  // boundary whites on the circle, counterclockwise = mathematically CCW
  // (SVG y grows downward, so use -sin)
  for (const auto& [id, w] : g.whites)
    if (w.boundary != 0) {
      double a = 2 * M_PI * (w.boundary - 1) / g.n;
      pos[id] = {C + R * std::cos(a), C - R * std::sin(a)};
    }
  for (const auto& [id, w] : g.whites)
    if (w.boundary == 0) pos[id] = {C, C};
  for (const auto& [id, b] : g.blacks) pos[id] = {C, C};
  for (int round = 0; round < 300; ++round) {
    for (const auto& [id, b] : g.blacks) {
      Pt p;
      for (int e : b.edges) {
        Pt q = pos[g.rep_white(g.edge(e).white)];
        p.x += q.x;
        p.y += q.y;
      }
      size_t m = b.edges.size();
      if (m) pos[id] = {p.x / m, p.y / m};
    }
    for (const auto& [id, w] : g.whites) {
      if (w.boundary != 0 || w.edges.empty()) continue;
      Pt p;
      for (int e : w.edges) {
        Pt q = pos[g.edge(e).black];
        p.x += q.x;
        p.y += q.y;
      }
      pos[id] = {p.x / w.edges.size(), p.y / w.edges.size()};
    }
  }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\">\n";
  svg << "<circle cx=\"" << C << "\" cy=\"" << C << "\" r=\"" << R
      << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
  for (const auto& [id, e] : g.edges) {
    Pt a = pos[g.rep_white(e.white)], b = pos[e.black];
    svg << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
        << "\" y2=\"" << fmt(b.y) << "\" stroke=\"black\"/>\n";
  }
  for (const auto& [id, b] : g.blacks) {
    Pt p = pos[id];
    svg << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"4\" fill=\"black\"/>\n";
  }
  for (const auto& [id, w] : g.whites) {
    if (g.rep_white(id) != id) continue;
    Pt p = pos[id];
    svg << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
        << "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";
    std::string label = std::to_string(id);
    if (w.boundary != 0) label += " (p" + std::to_string(w.boundary) + ")";
    if (map != nullptr) label += " " + map->point(id).str();
    svg << "<text x=\"" << fmt(p.x + 8) << "\" y=\"" << fmt(p.y - 8)
        << "\" font-size=\"10\">" << label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_tiling_svg(const PlabicTiling& t) {
  // exact coordinates scaled to the viewport
  long long minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  std::map<std::vector<int>, std::array<long long, 2>> at;
  for (const auto& z : t.labels) {
    auto p = PlabicTiling::position(z);
    at[z] = p;
    if (first || p[0] < minx) minx = p[0];
    if (first || p[0] > maxx) maxx = p[0];
    if (first || p[1] < miny) miny = p[1];
    if (first || p[1] > maxy) maxy = p[1];
    first = false;
  }
  double spanx = std::max<long long>(1, maxx - minx), spany = std::max<long long>(1, maxy - miny);
  double s = std::min(460.0 / spanx, 460.0 / spany);
  auto px = [&](const std::array<long long, 2>& p) {
    return Pt{26 + (p[0] - minx) * s, 486 - (p[1] - miny) * s};
  };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\">\n";
  for (const auto& c : t.cliques) {
    svg << "<polygon points=\"";
    for (const auto& z : c.boundary) {
      Pt p = px(at.at(z));
      svg << fmt(p.x) << "," << fmt(p.y) << " ";
    }
    svg << "\" fill=\"" << (c.black ? "#444" : "none") << "\" stroke=\"black\"/>\n";
  }
  for (const auto& z : t.labels) {
    Pt p = px(at.at(z));
    svg << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
        << "\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
    std::string lab;
    for (int i : z) lab += std::to_string(i);
    svg << "<text x=\"" << fmt(p.x + 7) << "\" y=\"" << fmt(p.y - 7) << "\" font-size=\"11\">"
        << lab << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tcd
