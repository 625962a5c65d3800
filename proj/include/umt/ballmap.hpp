#pragma once

#include "umt/ballean.hpp"
#include "umt/canonical.hpp"

#include <optional>
#include <vector>

namespace umt {

// Point bijection between two spaces of equal size: to[i] is the point index
// of the second space that point i of the first maps to.
struct PointBijection {
  std::vector<int> to;
};

// Verdict of is_ball_preserving. When not preserved, `ball` is the first
// offending ball (in (size, members) order, forward direction checked first):
// either a ball of X whose image is not a ball of Y (Image), or a ball of Y
// whose preimage is not a ball of X (Preimage). Members are indices in the
// ball's home space.
struct BallPreservation {
  enum class Direction { Image, Preimage };
  bool preserved = true;
  std::optional<Direction> direction;
  std::vector<int> ball;
};

// f must be a bijection between the point sets (throws Error otherwise).
BallPreservation is_ball_preserving(const PointBijection& f, const UltrametricSpace& x,
                                    const UltrametricSpace& y);

enum class DecisionMethod { TreeReduction, BruteForce };

struct BallDecision {
  bool equivalent = false;
  std::optional<PointBijection> witness;  // present iff equivalent
  DecisionMethod method = DecisionMethod::TreeReduction;
};

// Decides whether a ball-preserving bijection X -> Y exists, via rooted-tree
// isomorphism of the representing trees; any witness returned has been
// re-verified with is_ball_preserving.
BallDecision exists_ball_preserving_bijection(const UltrametricSpace& x,
                                              const UltrametricSpace& y);

// Reference oracle: tries all point bijections in lexicographic order.
// Throws Error when either space exceeds `cap` points.
BallDecision brute_force_exists(const UltrametricSpace& x, const UltrametricSpace& y,
                                int cap = 7);

// First distance-preserving bijection in lexicographic order, if any.
std::optional<PointBijection> brute_force_isometry(const UltrametricSpace& x,
                                                   const UltrametricSpace& y, int cap = 7);

// Cross-check: the balleans are order-isomorphic iff a ball-preserving
// bijection exists, and any witness found respects ball inclusion both ways.
struct ConsistencyReport {
  bool poset_isomorphic = false;
  bool ball_equivalent = false;
  bool flags_agree = false;
  bool inclusion_equivalence = true;
  int ball_pairs_checked = 0;
  bool ok() const { return flags_agree && inclusion_equivalence; }
};

ConsistencyReport posets_isomorphic_iff_ballmap(const UltrametricSpace& x,
                                                const UltrametricSpace& y);

}  // namespace umt
