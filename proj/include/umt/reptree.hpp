#pragma once

#include "umt/space.hpp"

#include <algorithm>
#include <vector>

namespace umt {

// The parts of the diametral graph: equivalence classes of the relation
// d(u,v) < diam. Points in different parts sit at distance exactly `diameter`;
// points inside a part are strictly closer. For |X| >= 2 there are always
// k >= 2 parts.
struct DiametralPartition {
  std::vector<std::vector<int>> parts;  // each sorted; ordered by smallest member
  Scalar diameter;
};

// Labeled rooted tree representing a space: internal nodes carry the diameter
// of their point set, leaves carry point indices. Every internal node has
// >= 2 children and labels strictly decrease along root-to-leaf paths.
//
// build_rep_tree() stores children in canonical order (unlabeled shape code,
// then smallest point name in the subtree) and assigns node ids as preorder
// ranks, so equal spaces build byte-identical trees. A singleton space is a
// single node that is both root and leaf.
//
// Immutable after construction; concurrent reads are safe.
struct RepTree {
  struct Node {
    Scalar label;               // internal nodes: diameter of the subtree's points
    int point = -1;             // leaves: point index
    int parent = -1;            // -1 at the root
    int depth = 0;
    std::vector<int> children;  // empty for leaves
  };

  std::vector<Node> nodes;
  int root = 0;
  std::vector<int> leaf_of_point;  // point index -> leaf node id

  int size() const { return static_cast<int>(nodes.size()); }
  int leaf_count() const { return static_cast<int>(leaf_of_point.size()); }
  bool is_leaf(int v) const { return nodes[v].children.empty(); }
};

// RepTree with the labels erased; shape, node ids and the leaf/point
// correspondence are preserved.
struct UnlabeledTree {
  struct Node {
    int point = -1;
    int parent = -1;
    int depth = 0;
    std::vector<int> children;
  };

  std::vector<Node> nodes;
  int root = 0;
  std::vector<int> leaf_of_point;

  int size() const { return static_cast<int>(nodes.size()); }
  bool is_leaf(int v) const { return nodes[v].children.empty(); }
};

// Requires |s| >= 2.
DiametralPartition diametral_partition(const Subspace& s);

// Recursive diametral decomposition: the root is labeled diam X, children are
// the diametral parts (size-1 parts become leaves), and so on.
RepTree build_rep_tree(const UltrametricSpace& s);

UnlabeledTree strip_labels(const RepTree& t);

// 0 when x == y, otherwise the label of the lowest common ancestor of the two
// leaves, which by the strict label decrease is the maximum label on the
// connecting path.
Scalar distance_from_tree(const RepTree& t, int x, int y);

// The sorted set of points on the leaves of the subtree rooted at v; for a
// leaf, the singleton of its own point.
template <typename Tree>
std::vector<int> gamma(const Tree& t, int v) {
  if (v < 0 || v >= t.size()) throw Error("gamma: unknown node id");
  std::vector<int> points;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (t.nodes[u].children.empty()) {
      points.push_back(t.nodes[u].point);
    } else {
      for (int c : t.nodes[u].children) stack.push_back(c);
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace umt
