#pragma once

#include "umt/reptree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace umt {

// Deterministic random rooted tree in representing-tree form: every internal
// node has >= 2 children (or is the root of a 1-leaf tree), labels strictly
// decrease from root to leaves, leaves carry label 0 and points 0..leaves-1
// in traversal order. Height is at most depth_bound (>= 1).
RepTree random_rep_tree(std::uint64_t seed, int leaves, int depth_bound = 12,
                        int max_children = 6);

// Deterministic random ultrametric space with n points, realized from
// random_rep_tree(seed, n, depth_bound): d(p,q) is the label of the lowest
// common ancestor of the corresponding leaves. Point names come from
// name_pool (first n entries, must be distinct) or default to p0..p{n-1}.
UltrametricSpace generate_random(std::uint64_t seed, int n, int depth_bound = 12,
                                 const std::vector<std::string>& name_pool = {});

}  // namespace umt
