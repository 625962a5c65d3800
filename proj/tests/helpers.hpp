#pragma once

#include "umt/reptree.hpp"
#include "umt/space.hpp"

#include <doctest.h>

#include <string>
#include <vector>

namespace testutil {

inline umt::UltrametricSpace make_space(std::vector<std::string> points,
                                        const std::vector<std::vector<std::string>>& entries) {
  auto res = umt::validate(std::move(points), entries);
  REQUIRE(res.ok());
  return std::move(*res.space);
}

// d(a,b)=1, d(a,c)=d(b,c)=2, d(.,d)=3 — the worked example used throughout:
// its tree is root(3){ node(2){ node(1){a,b}, c }, d } with 7 nodes,
// its ballean is the four singletons plus {a,b}, {a,b,c}, {a,b,c,d}.
inline umt::UltrametricSpace four_point_example() {
  return make_space({"a", "b", "c", "d"}, {{"0", "1", "2", "3"},
                                           {"1", "0", "2", "3"},
                                           {"2", "2", "0", "3"},
                                           {"3", "3", "3", "0"}});
}

inline umt::UltrametricSpace equilateral(std::vector<std::string> points, const std::string& d) {
  const std::size_t n = points.size();
  std::vector<std::vector<std::string>> entries(n, std::vector<std::string>(n, d));
  for (std::size_t i = 0; i < n; ++i) entries[i][i] = "0";
  return make_space(std::move(points), entries);
}

// Tree from a parent vector (parent[root] = -1); children keep id order.
inline umt::UnlabeledTree tree_from_parents(const std::vector<int>& parent) {
  umt::UnlabeledTree t;
  t.nodes.resize(parent.size());
  t.root = -1;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    t.nodes[v].parent = parent[v];
    if (parent[v] == -1) t.root = static_cast<int>(v);
    else t.nodes[parent[v]].children.push_back(static_cast<int>(v));
  }
  REQUIRE(t.root != -1);
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int c : t.nodes[v].children) {
      t.nodes[c].depth = t.nodes[v].depth + 1;
      stack.push_back(c);
    }
  }
  return t;
}

}  // namespace testutil
