#pragma once

#include "umt/reptree.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace umt {

// A closed ball, identified by its member set. Distinct (center, radius)
// pairs can describe the same set, so the stored radius is the canonical one:
// the diameter of the members (for spectrum radii the two coincide, and any
// member works as a center).
struct Ball {
  std::vector<int> members;  // sorted point indices, nonempty
  Scalar radius;

  friend bool operator==(const Ball& a, const Ball& b) = default;
};

// All balls B_r(t) with t a point and r in the distance spectrum of t,
// deduplicated by member set and sorted by (size, members). Contains every
// singleton and the whole point set; for an n-point space there are at most
// 2n-1 balls (one per representing-tree node).
struct Ballean {
  std::vector<Ball> balls;
  const UltrametricSpace* space = nullptr;  // null when derived from a tree alone

  int size() const { return static_cast<int>(balls.size()); }
  std::optional<int> index_of(const std::vector<int>& members) const;
  bool contains(const std::vector<int>& members) const { return index_of(members).has_value(); }
};

// Cover relation of (balls, ⊆): arc <u,v> means ball u is covered by ball v
// (u ⊊ v with nothing strictly between). For a ballean this digraph is always
// the arc set of a rooted tree.
struct HasseDigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;  // sorted
};

Ballean enumerate_ballean(const UltrametricSpace& s);

// The leaf sets of all subtrees; equals enumerate_ballean of the originating
// space, with internal-node labels as radii.
Ballean ballean_from_tree(const RepTree& t);

HasseDigraph hasse(const Ballean& b);

// View a tree-shaped Hasse digraph as a rooted tree whose node ids are the
// ball ids (arcs point child -> parent). Throws Error if the digraph is not
// tree-shaped.
UnlabeledTree hasse_to_tree(const HasseDigraph& h);

// Closure check: every ball of the subspace induced by a ball of X is again a
// ball of X. Exhaustive for n <= 8, otherwise `samples` outer balls chosen by
// a seeded shuffle. A failure would indicate an implementation bug.
struct TransitivityReport {
  bool passed = true;
  int outer_checked = 0;
  int inner_checked = 0;
  std::optional<std::pair<Ball, Ball>> failure;  // (Y, Z), both in X coordinates
};

TransitivityReport check_ball_transitivity(const UltrametricSpace& s, int samples = 32,
                                           std::uint64_t seed = 0);

}  // namespace umt
