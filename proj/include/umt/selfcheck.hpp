#pragma once

#include "umt/ballmap.hpp"
#include "umt/generate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace umt {

struct CheckResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  std::string detail;  // description of the first failure, empty on pass
};

struct SelfCheckReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Oracle-backed consistency suite over seeded random spaces. `count` spaces
// with 1..max_n points feed the per-space checks; pairwise checks run on a
// pool of min(40, count) spaces capped at 6 points (the brute-force range).
// Checks, in report order:
//   distance-roundtrip    tree reconstruction returns every matrix entry
//   ball-node-bijection   ballean size/content match the tree's node family
//   hasse-tree-agreement  cover arcs equal the tree arcs under the leaf-set
//                         identification, and the shapes canonicalize equally
//   cover-criterion       child relation <=> inclusion-with-nothing-between
//   ball-transitivity     balls of a ball's subspace are balls of the space
//   oracle-agreement      tree decision == brute-force decision on all pairs
//   poset-consistency     poset isomorphism <=> ball equivalence, and
//                         witnesses respect inclusion both ways
SelfCheckReport run_selfcheck(std::uint64_t seed, int count, int max_n);

}  // namespace umt
