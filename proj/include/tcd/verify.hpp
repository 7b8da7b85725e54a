#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcd/tcdmap.hpp"

namespace tcd {

// Machine-readable verification suites over a single map, shared by the CLI
// and the acceptance harness. Every check is exact; "pass" is never emitted
// for a skipped identity (skips carry pass=true only for empty site sets,
// with the reason in `detail`).
struct SuiteReport {
  std::string suite;
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// One record per two-two move applied at a degree-2 internal white: the six
// involved points have cyclic multi-ratio exactly -1.
SuiteReport verify_dskp(const TcdMap& m);

// At every move site: the degree-2-white move mutates the white-indexed
// affine variables and fixes the face-indexed projective variables; the
// quadrilateral move mutates the projective variables and fixes the affine
// ones. Uses `chart` for the affine gauge when given, otherwise a chart
// avoiding all involved points.
SuiteReport verify_mutation(const TcdMap& m, const std::optional<Hyperplane>& chart = {});

// Closure of the map under all local moves: every rediscovered node carries
// identical points (path independence), and the accumulated label -> point
// table is single-valued.
SuiteReport verify_consistency(const TcdMap& m, int max_nodes = 20000);

// The affine cluster structure of the map equals the projective cluster
// structure of its hyperplane section, variable by variable and arrow by
// arrow.
SuiteReport verify_theorem91(const TcdMap& m, const std::optional<Hyperplane>& chart = {},
                             int tree_choice = 0);

// Lattice restrictions over the move closure: every complete black triple of
// labels is collinear; for rank-1 maps, every complete octahedron satisfies
// the multi-ratio identity.
SuiteReport verify_desargues(const TcdMap& m, int max_nodes = 20000);

std::vector<SuiteReport> verify_all(const TcdMap& m, const std::optional<Hyperplane>& chart = {},
                                    int max_nodes = 20000);

}  // namespace tcd
