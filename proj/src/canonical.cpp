#include "umt/canonical.hpp"

#include "umt/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace umt {

namespace {

// Nodes in an order where every child precedes its parent (reversed preorder).
template <typename Tree>
std::vector<int> bottom_up_order(const Tree& t) {
  std::vector<int> order;
  order.reserve(t.nodes.size());
  order.push_back(t.root);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : t.nodes[order[i]].children) order.push_back(c);
  std::reverse(order.begin(), order.end());
  return order;
}

// label_of(v) -> string spliced after '(' for internal nodes ("" = unlabeled).
template <typename Tree, typename LabelFn>
std::vector<std::string> subtree_codes(const Tree& t, LabelFn label_of) {
  std::vector<std::string> code(t.nodes.size());
  for (int v : bottom_up_order(t)) {
    const auto& kids = t.nodes[v].children;
    if (kids.empty()) {
      code[v] = "()";
      continue;
    }
    std::vector<int> sorted_kids(kids.begin(), kids.end());
    std::sort(sorted_kids.begin(), sorted_kids.end(),
              [&](int a, int b) { return code[a] < code[b]; });
    std::string label = label_of(v);
    std::size_t len = 2 + label.size();
    for (int c : sorted_kids) len += code[c].size();
    std::string& out = code[v];
    out.reserve(len);
    out.push_back('(');
    out += label;
    for (int c : sorted_kids) out += code[c];
    out.push_back(')');
  }
  return code;
}

std::vector<std::string> unlabeled_codes(const UnlabeledTree& t) {
  return subtree_codes(t, [](int) { return std::string(); });
}

std::vector<std::string> labeled_codes(const RepTree& t) {
  return subtree_codes(t, [&](int v) { return t.nodes[v].label.str() + ":"; });
}

// Equal root codes given: pair nodes by walking both trees in code-sorted
// child order (stable, so ties follow stored order).
template <typename TreeA, typename TreeB>
NodeBijection pair_by_codes(const TreeA& a, const std::vector<std::string>& ca, const TreeB& b,
                            const std::vector<std::string>& cb) {
  NodeBijection f;
  f.to.assign(a.nodes.size(), -1);
  std::vector<std::pair<int, int>> stack{{a.root, b.root}};
  while (!stack.empty()) {
    auto [u, v] = stack.back();
    stack.pop_back();
    f.to[u] = v;
    std::vector<int> ku(a.nodes[u].children.begin(), a.nodes[u].children.end());
    std::vector<int> kv(b.nodes[v].children.begin(), b.nodes[v].children.end());
    std::stable_sort(ku.begin(), ku.end(), [&](int x, int y) { return ca[x] < ca[y]; });
    std::stable_sort(kv.begin(), kv.end(), [&](int x, int y) { return cb[x] < cb[y]; });
    for (std::size_t i = 0; i < ku.size(); ++i) stack.emplace_back(ku[i], kv[i]);
  }
  return f;
}

}  // namespace

CanonicalForm canonical_unlabeled(const UnlabeledTree& t) {
  return CanonicalForm{unlabeled_codes(t)[t.root]};
}

CanonicalForm canonical_labeled(const RepTree& t) {
  auto codes = labeled_codes(t);
  return CanonicalForm{std::move(codes[t.root])};
}

std::optional<NodeBijection> tree_isomorphism(const UnlabeledTree& a, const UnlabeledTree& b) {
  auto ca = unlabeled_codes(a);
  auto cb = unlabeled_codes(b);
  if (ca[a.root] != cb[b.root]) return std::nullopt;
  return pair_by_codes(a, ca, b, cb);
}

std::optional<NodeBijection> labeled_tree_isomorphism(const RepTree& a, const RepTree& b) {
  auto ca = labeled_codes(a);
  auto cb = labeled_codes(b);
  if (ca[a.root] != cb[b.root]) return std::nullopt;
  return pair_by_codes(a, ca, b, cb);
}

bool is_root_preserving_isomorphism(const UnlabeledTree& a, const UnlabeledTree& b,
                                    const NodeBijection& f) {
  const int n = static_cast<int>(a.nodes.size());
  if (static_cast<int>(b.nodes.size()) != n) return false;
  if (static_cast<int>(f.to.size()) != n) return false;

  std::vector<char> hit(n, 0);
  for (int u = 0; u < n; ++u) {
    int v = f.to[u];
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  if (f.to[a.root] != b.root) return false;

  auto arc_key = [n](int child, int parent) {
    return static_cast<long long>(child) * n + parent;
  };
  std::unordered_set<long long> arcs_b;
  for (int u = 0; u < n; ++u)
    if (u != b.root) arcs_b.insert(arc_key(u, b.nodes[u].parent));

  std::vector<int> from(n, -1);
  for (int u = 0; u < n; ++u) from[f.to[u]] = u;

  // forward: every arc of a maps to an arc of b
  for (int u = 0; u < n; ++u) {
    if (u == a.root) continue;
    if (!arcs_b.count(arc_key(f.to[u], f.to[a.nodes[u].parent]))) return false;
  }
  // backward: every arc of b pulls back to an arc of a
  for (int v = 0; v < n; ++v) {
    if (v == b.root) continue;
    int u = from[v];
    if (u == a.root) return false;
    if (f.to[a.nodes[u].parent] != b.nodes[v].parent) return false;
  }
  return true;
}

std::optional<NodeBijection> brute_force_tree_iso(const UnlabeledTree& a, const UnlabeledTree& b,
                                                  int size_cap) {
  const int n = static_cast<int>(a.nodes.size());
  if (static_cast<int>(b.nodes.size()) != n) return std::nullopt;
  if (n > size_cap) throw Error("brute-force tree isomorphism: size cap exceeded");

  if (n == 1) {
    NodeBijection f;
    f.to = {b.root};
    return f;
  }

  std::vector<int> av, bv;  // non-root nodes
  for (int v = 0; v < n; ++v) {
    if (v != a.root) av.push_back(v);
    if (v != b.root) bv.push_back(v);
  }

  NodeBijection f;
  f.to.assign(n, -1);
  do {
    f.to[a.root] = b.root;
    for (std::size_t i = 0; i < av.size(); ++i) f.to[av[i]] = bv[i];
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (u == a.root) continue;
      int pu = a.nodes[u].parent;
      if (b.nodes[f.to[u]].parent != f.to[pu]) ok = false;
    }
    if (ok) return f;
  } while (std::next_permutation(bv.begin(), bv.end()));
  return std::nullopt;
}

std::optional<std::vector<int>> poset_isomorphism(const HasseDigraph& a, const HasseDigraph& b) {
  UnlabeledTree ta = hasse_to_tree(a);
  UnlabeledTree tb = hasse_to_tree(b);
  auto iso = tree_isomorphism(ta, tb);
  if (!iso) return std::nullopt;
  return iso->to;  // node ids are the ball ids
}

}  // namespace umt
