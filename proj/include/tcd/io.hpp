#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tcd/lattice.hpp"
#include "tcd/tcdmap.hpp"

namespace tcd {

// Graph document: {"n", "cactus", "whites": [{"id", "boundary", "nbrs"}],
// "blacks": [{"id", "nbrs"}]} with rotations as CCW neighbor-id lists and
// boundary null for internal whites. Deterministic (sorted ids), so
// serialize(parse(s)) == s for serializer output.
std::string graph_to_json(const BtbGraph& g);
BtbGraph graph_from_json(const std::string& text);  // throws BadDocument

// Map document: {"graph": <inline graph or file path>, "d", "points":
// {"<white id>": [rational strings]}, optional "hyperplane", "seed"}.
struct MapDocument {
  TcdMap map;
  std::optional<Hyperplane> hyperplane;
  std::optional<std::uint64_t> seed;
};

std::string map_to_json(const TcdMap& m, const std::optional<Hyperplane>& hyperplane = {},
                        std::optional<std::uint64_t> seed = {});
MapDocument map_from_json(const std::string& text);

std::string error_to_json(const Error& e);  // {"code","message","witness"}

// Planar drawing: boundary whites on a circle, interior by neighbor
// averaging (presentational; the combinatorics is authoritative). With a
// map attached, whites are annotated with their points.
std::string render_svg(const BtbGraph& g, const TcdMap* map = nullptr);

// Plabic tiling at the exact v(z) coordinates scaled to the viewport.
std::string render_tiling_svg(const PlabicTiling& t);

}  // namespace tcd
