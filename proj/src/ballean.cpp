#include "umt/ballean.hpp"

#include "umt/error.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace umt {

namespace {

// (size, lexicographic) order on member sets.
bool members_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  // both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::optional<int> Ballean::index_of(const std::vector<int>& members) const {
  auto it = std::lower_bound(balls.begin(), balls.end(), members,
                             [](const Ball& ball, const std::vector<int>& m) {
                               return members_less(ball.members, m);
                             });
  if (it == balls.end() || it->members != members) return std::nullopt;
  return static_cast<int>(it - balls.begin());
}

Ballean enumerate_ballean(const UltrametricSpace& s) {
  const int n = s.size();
  std::set<std::vector<int>> seen;
  for (int t = 0; t < n; ++t) {
    // spectrum ranks of t
    std::vector<char> present(s.value_table().size(), 0);
    for (int x = 0; x < n; ++x) present[s.rank(t, x)] = 1;
    for (std::int32_t r = 0; r < static_cast<std::int32_t>(present.size()); ++r) {
      if (!present[r]) continue;
      std::vector<int> members;
      for (int x = 0; x < n; ++x)
        if (s.rank(t, x) <= r) members.push_back(x);
      seen.insert(std::move(members));
    }
  }

  Ballean out;
  out.space = &s;
  out.balls.reserve(seen.size());
  for (const auto& members : seen) {
    Ball b;
    b.members = members;
    b.radius = diameter(Subspace{&s, members});
    out.balls.push_back(std::move(b));
  }
  std::sort(out.balls.begin(), out.balls.end(),
            [](const Ball& a, const Ball& b) { return members_less(a.members, b.members); });
  return out;
}

Ballean ballean_from_tree(const RepTree& t) {
  Ballean out;
  out.balls.reserve(t.size());
  for (int v = 0; v < t.size(); ++v) {
    Ball b;
    b.members = gamma(t, v);
    b.radius = t.nodes[v].label;  // leaves carry label 0 = singleton diameter
    out.balls.push_back(std::move(b));
  }
  std::sort(out.balls.begin(), out.balls.end(),
            [](const Ball& a, const Ball& b) { return members_less(a.members, b.members); });
  return out;
}

HasseDigraph hasse(const Ballean& b) {
  const int m = b.size();
  HasseDigraph h;
  h.vertex_count = m;

  // incl[u][v]: ball u is a proper subset of ball v. Balls are sorted by
  // size, so only v with strictly larger member count can contain u.
  std::vector<std::vector<char>> incl(m, std::vector<char>(m, 0));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (b.balls[u].members.size() >= b.balls[v].members.size()) continue;
      incl[u][v] = is_subset(b.balls[u].members, b.balls[v].members);
    }

  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (!incl[u][v]) continue;
      bool covered = true;
      for (int w = 0; w < m && covered; ++w)
        if (incl[u][w] && incl[w][v]) covered = false;
      if (covered) h.arcs.emplace_back(u, v);
    }
  std::sort(h.arcs.begin(), h.arcs.end());
  return h;
}

UnlabeledTree hasse_to_tree(const HasseDigraph& h) {
  const int m = h.vertex_count;
  if (m == 0) throw Error("hasse digraph has no vertices");

  std::vector<int> parent(m, -1);
  for (const auto& [u, v] : h.arcs) {
    if (u < 0 || u >= m || v < 0 || v >= m)
      throw Error("hasse digraph arc endpoint out of range");
    if (u == v) throw Error("hasse digraph has a self-loop");
    if (parent[u] != -1)
      throw Error("hasse digraph is not tree-shaped: vertex " + std::to_string(u) +
                  " is covered by more than one vertex");
    parent[u] = v;
  }

  int root = -1;
  for (int v = 0; v < m; ++v) {
    if (parent[v] != -1) continue;
    if (root != -1) throw Error("hasse digraph is not tree-shaped: more than one maximal vertex");
    root = v;
  }
  if (root == -1) throw Error("hasse digraph is not tree-shaped: no maximal vertex");

  UnlabeledTree t;
  t.root = root;
  t.nodes.resize(m);
  for (int v = 0; v < m; ++v) t.nodes[v].parent = parent[v];
  for (const auto& [u, v] : h.arcs) t.nodes[v].children.push_back(u);

  // arcs are sorted by (child, parent), so each child list is ascending
  std::vector<int> order;
  order.reserve(m);
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int c : t.nodes[v].children) {
      t.nodes[c].depth = t.nodes[v].depth + 1;
      order.push_back(c);
    }
  }
  if (static_cast<int>(order.size()) != m)
    throw Error("hasse digraph is not tree-shaped: not all vertices reach the maximal one");
  return t;
}

TransitivityReport check_ball_transitivity(const UltrametricSpace& s, int samples,
                                           std::uint64_t seed) {
  TransitivityReport rep;
  Ballean bx = enumerate_ballean(s);

  std::vector<int> outer(bx.size());
  for (int i = 0; i < bx.size(); ++i) outer[i] = i;
  if (s.size() > 8 && samples > 0 && samples < bx.size()) {
    std::mt19937_64 rng(seed);
    for (int i = bx.size() - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(outer[i], outer[j]);
    }
    outer.resize(samples);
    std::sort(outer.begin(), outer.end());
  }

  for (int yi : outer) {
    const Ball& y = bx.balls[yi];
    ++rep.outer_checked;
    UltrametricSpace sub = restrict_space(s, y.members);
    Ballean by = enumerate_ballean(sub);
    for (const Ball& z : by.balls) {
      ++rep.inner_checked;
      std::vector<int> global;
      global.reserve(z.members.size());
      for (int local : z.members) global.push_back(y.members[local]);
      if (!bx.contains(global)) {
        rep.passed = false;
        rep.failure = std::make_pair(y, Ball{std::move(global), z.radius});
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace umt
