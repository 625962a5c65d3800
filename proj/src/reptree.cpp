#include "umt/reptree.hpp"

#include <numeric>
#include <utility>

namespace umt {

namespace {

struct UnionFind {
  std::vector<int> parent, size;

  explicit UnionFind(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

void check_members(const UltrametricSpace& s, const std::vector<int>& members) {
  if (members.empty()) throw Error("subspace members must be nonempty");
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a] < 0 || members[a] >= s.size()) throw Error("subspace member out of range");
    if (a > 0 && members[a - 1] >= members[a])
      throw Error("subspace members must be sorted and distinct");
  }
}

// Equivalence classes of d(u,v) < diam over `members` (>= 2 points), plus the
// diameter as a rank. Classes come out ordered by smallest member.
std::pair<std::int32_t, std::vector<std::vector<int>>> split_by_diameter(
    const UltrametricSpace& s, const std::vector<int>& members) {
  const int m = static_cast<int>(members.size());
  std::int32_t diam = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) diam = std::max(diam, s.rank(members[a], members[b]));

  UnionFind uf(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (s.rank(members[a], members[b]) < diam) uf.unite(a, b);

  std::vector<std::vector<int>> parts;
  std::vector<int> part_of(m, -1);
  for (int a = 0; a < m; ++a) {
    const int r = uf.find(a);
    if (part_of[r] < 0) {
      part_of[r] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[part_of[r]].push_back(members[a]);  // members sorted => parts sorted
  }
  return {diam, std::move(parts)};
}

struct TempNode {
  int point = -1;                  // >= 0 on leaves
  std::int32_t label_rank = 0;     // internal nodes
  std::vector<TempNode> children;  // canonical order
  std::string shape;               // unlabeled code of the subtree
  const std::string* min_point;    // smallest point name in the subtree
};

TempNode build_rec(const UltrametricSpace& s, const std::vector<int>& members) {
  TempNode node;
  if (members.size() == 1) {
    node.point = members[0];
    node.shape = "()";
    node.min_point = &s.point_name(members[0]);
    return node;
  }

  auto [diam, parts] = split_by_diameter(s, members);
  node.label_rank = diam;
  node.children.reserve(parts.size());
  for (const auto& part : parts) node.children.push_back(build_rec(s, part));

  std::sort(node.children.begin(), node.children.end(), [](const TempNode& a, const TempNode& b) {
    if (a.shape != b.shape) return a.shape < b.shape;
    return *a.min_point < *b.min_point;
  });

  node.shape.reserve(2 + node.children.size() * 2);
  node.shape += '(';
  for (const TempNode& c : node.children) node.shape += c.shape;
  node.shape += ')';
  node.min_point = node.children.front().min_point;
  for (const TempNode& c : node.children)
    if (*c.min_point < *node.min_point) node.min_point = c.min_point;
  return node;
}

}  // namespace

DiametralPartition diametral_partition(const Subspace& s) {
  if (!s.space) throw Error("diametral_partition: null space");
  check_members(*s.space, s.members);
  if (s.members.size() < 2) throw Error("diametral_partition: needs at least 2 points");

  auto [diam, parts] = split_by_diameter(*s.space, s.members);
  return {std::move(parts), s.space->value_of_rank(diam)};
}

RepTree build_rep_tree(const UltrametricSpace& s) {
  std::vector<int> all(s.size());
  std::iota(all.begin(), all.end(), 0);
  TempNode top = build_rec(s, all);

  RepTree t;
  t.nodes.reserve(2 * s.size());
  t.leaf_of_point.assign(s.size(), -1);

  // Preorder flatten; children keep their canonical order.
  struct Frame {
    const TempNode* node;
    int parent;
    int depth;
  };
  std::vector<Frame> stack{{&top, -1, 0}};
  while (!stack.empty()) {
    auto [node, parent, depth] = stack.back();
    stack.pop_back();
    const int id = static_cast<int>(t.nodes.size());
    RepTree::Node out;
    out.parent = parent;
    out.depth = depth;
    if (node->point >= 0) {
      out.point = node->point;
      t.leaf_of_point[node->point] = id;
    } else {
      out.label = s.value_of_rank(node->label_rank);
    }
    t.nodes.push_back(std::move(out));
    if (parent >= 0) t.nodes[parent].children.push_back(id);
    // Push children in reverse so they pop in order; preorder ids follow the
    // canonical child order.
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
      stack.push_back({&*it, id, depth + 1});
  }
  return t;
}

UnlabeledTree strip_labels(const RepTree& t) {
  UnlabeledTree u;
  u.root = t.root;
  u.leaf_of_point = t.leaf_of_point;
  u.nodes.resize(t.nodes.size());
  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    u.nodes[v].point = t.nodes[v].point;
    u.nodes[v].parent = t.nodes[v].parent;
    u.nodes[v].depth = t.nodes[v].depth;
    u.nodes[v].children = t.nodes[v].children;
  }
  return u;
}

Scalar distance_from_tree(const RepTree& t, int x, int y) {
  if (x < 0 || x >= t.leaf_count() || y < 0 || y >= t.leaf_count())
    throw Error("distance_from_tree: unknown point");
  if (x == y) return Scalar();

  int u = t.leaf_of_point[x], v = t.leaf_of_point[y];
  while (t.nodes[u].depth > t.nodes[v].depth) u = t.nodes[u].parent;
  while (t.nodes[v].depth > t.nodes[u].depth) v = t.nodes[v].parent;
  while (u != v) {
    u = t.nodes[u].parent;
    v = t.nodes[v].parent;
  }
  return t.nodes[u].label;  // distinct leaves => the LCA is internal
}

}  // namespace umt
