#include "umt/generate.hpp"

#include "umt/error.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace umt {

namespace {

// uniform integer in [lo, hi], deterministic across platforms (unlike
// std::uniform_int_distribution)
int bounded(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct ShapeNode {
  int leaves = 0;
  int height = 0;  // 0 for leaves
  int pool_idx = -1;
  std::vector<ShapeNode> children;
};

ShapeNode build_shape(std::mt19937_64& rng, int leaves, int rem_depth, int max_children) {
  ShapeNode node;
  node.leaves = leaves;
  if (leaves == 1) return node;

  int k;
  if (rem_depth <= 1) {
    k = leaves;  // out of depth: finish as a star
  } else {
    k = bounded(rng, 2, std::min(leaves, max_children));
  }

  // split `leaves` into k parts >= 1 via k-1 distinct cut positions
  std::vector<int> sizes;
  if (k == leaves) {
    sizes.assign(leaves, 1);
  } else {
    std::set<int> cuts;
    while (static_cast<int>(cuts.size()) < k - 1) cuts.insert(bounded(rng, 1, leaves - 1));
    int prev = 0;
    for (int c : cuts) {
      sizes.push_back(c - prev);
      prev = c;
    }
    sizes.push_back(leaves - prev);
  }

  for (int sz : sizes) {
    node.children.push_back(build_shape(rng, sz, rem_depth - 1, max_children));
    node.height = std::max(node.height, node.children.back().height + 1);
  }
  return node;
}

// Assign strictly increasing pool indices along every root-to-leaf chain of
// internal nodes. Indices are into a descending value pool, so labels
// strictly decrease downward. A node of height h needs h-1 further indices
// below it, hence the upper bound.
void assign_labels(std::mt19937_64& rng, ShapeNode& node, int min_idx, int pool_size) {
  if (node.children.empty()) return;
  int max_idx = pool_size - node.height;
  node.pool_idx = bounded(rng, min_idx, max_idx);
  for (ShapeNode& c : node.children) assign_labels(rng, c, node.pool_idx + 1, pool_size);
}

std::vector<Scalar> make_value_pool(std::mt19937_64& rng, int pool_size) {
  std::set<Scalar> values;
  while (static_cast<int>(values.size()) < pool_size) {
    int num = bounded(rng, 1, 480);
    int den = bounded(rng, 1, 48);
    values.insert(Scalar::from_fraction(num, den));
  }
  std::vector<Scalar> pool(values.begin(), values.end());
  std::reverse(pool.begin(), pool.end());  // descending
  return pool;
}

void flatten(const ShapeNode& node, const std::vector<Scalar>& pool, int parent, int depth,
             RepTree& t, int& next_point) {
  int id = t.size();
  t.nodes.emplace_back();
  RepTree::Node& out = t.nodes.back();
  out.parent = parent;
  out.depth = depth;
  if (node.children.empty()) {
    out.point = next_point++;
    t.leaf_of_point.push_back(id);
  } else {
    out.label = pool[node.pool_idx];
  }
  if (parent >= 0) t.nodes[parent].children.push_back(id);
  for (const ShapeNode& c : node.children) flatten(c, pool, id, depth + 1, t, next_point);
}

}  // namespace

RepTree random_rep_tree(std::uint64_t seed, int leaves, int depth_bound, int max_children) {
  if (leaves < 1) throw Error("random_rep_tree: need at least one leaf");
  if (depth_bound < 1) throw Error("random_rep_tree: depth bound must be at least 1");
  if (max_children < 2) throw Error("random_rep_tree: need at least two children per node");

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const int pool_size = depth_bound + 4;
  std::vector<Scalar> pool = make_value_pool(rng, pool_size);
  ShapeNode shape = build_shape(rng, leaves, depth_bound, max_children);
  assign_labels(rng, shape, 0, pool_size);

  RepTree t;
  t.root = 0;
  t.nodes.reserve(2 * leaves);
  int next_point = 0;
  flatten(shape, pool, -1, 0, t, next_point);
  return t;
}

UltrametricSpace generate_random(std::uint64_t seed, int n, int depth_bound,
                                 const std::vector<std::string>& name_pool) {
  RepTree t = random_rep_tree(seed, n, depth_bound);

  std::vector<std::string> names;
  names.reserve(n);
  if (name_pool.empty()) {
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  } else {
    if (static_cast<int>(name_pool.size()) < n)
      throw Error("generate_random: name pool has fewer entries than points");
    std::unordered_set<std::string> seen;
    for (int i = 0; i < n; ++i) {
      if (!seen.insert(name_pool[i]).second)
        throw Error("generate_random: duplicate name in pool: " + name_pool[i]);
      names.push_back(name_pool[i]);
    }
  }

  // value table: 0 plus every internal label actually used, ascending
  std::set<Scalar> used;
  used.insert(Scalar{});
  for (const auto& node : t.nodes)
    if (node.point < 0) used.insert(node.label);
  std::vector<Scalar> values(used.begin(), used.end());

  std::unordered_map<Scalar, std::int32_t, ScalarHash> rank_of;
  for (std::size_t r = 0; r < values.size(); ++r) rank_of.emplace(values[r], r);

  std::vector<std::int32_t> rank(static_cast<std::size_t>(n) * n, 0);

  // d(p,q) = label of the lowest common ancestor: walk the tree bottom-up,
  // filling each cross pair of sibling subtrees at the parent's label
  std::vector<std::vector<int>> pts(t.size());
  std::vector<int> order;
  order.reserve(t.size());
  order.push_back(t.root);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : t.nodes[order[i]].children) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    const auto& node = t.nodes[v];
    if (node.point >= 0) {
      pts[v] = {node.point};
      continue;
    }
    std::int32_t r = rank_of.at(node.label);
    std::vector<int> all;
    for (int c : node.children) {
      for (int p : all)
        for (int q : pts[c]) {
          rank[static_cast<std::size_t>(p) * n + q] = r;
          rank[static_cast<std::size_t>(q) * n + p] = r;
        }
      all.insert(all.end(), pts[c].begin(), pts[c].end());
      pts[c].clear();
      pts[c].shrink_to_fit();
    }
    pts[v] = std::move(all);
  }

  return UltrametricSpace::from_ranks(std::move(names), std::move(values), std::move(rank));
}

}  // namespace umt
