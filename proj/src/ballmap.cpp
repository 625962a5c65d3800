#include "umt/ballmap.hpp"

#include "umt/error.hpp"

#include <algorithm>
#include <numeric>

namespace umt {

namespace {

void require_bijection(const PointBijection& f, int nx, int ny) {
  if (static_cast<int>(f.to.size()) != nx)
    throw Error("map does not cover the domain: expected " + std::to_string(nx) +
                " entries, got " + std::to_string(f.to.size()));
  if (nx != ny) throw Error("map between spaces of different sizes cannot be a bijection");
  std::vector<char> hit(ny, 0);
  for (int v : f.to) {
    if (v < 0 || v >= ny) throw Error("map target out of range: " + std::to_string(v));
    if (hit[v]) throw Error("map is not injective: point " + std::to_string(v) + " hit twice");
    hit[v] = 1;
  }
}

std::vector<int> image_of(const std::vector<int>& members, const std::vector<int>& to) {
  std::vector<int> img;
  img.reserve(members.size());
  for (int p : members) img.push_back(to[p]);
  std::sort(img.begin(), img.end());
  return img;
}

BallPreservation preserves(const PointBijection& f, const Ballean& bx, const Ballean& by) {
  std::vector<int> inv(f.to.size());
  for (std::size_t i = 0; i < f.to.size(); ++i) inv[f.to[i]] = static_cast<int>(i);

  for (const Ball& b : bx.balls)
    if (!by.contains(image_of(b.members, f.to)))
      return {false, BallPreservation::Direction::Image, b.members};
  for (const Ball& b : by.balls)
    if (!bx.contains(image_of(b.members, inv)))
      return {false, BallPreservation::Direction::Preimage, b.members};
  return {};
}

}  // namespace

BallPreservation is_ball_preserving(const PointBijection& f, const UltrametricSpace& x,
                                    const UltrametricSpace& y) {
  require_bijection(f, x.size(), y.size());
  Ballean bx = enumerate_ballean(x);
  Ballean by = enumerate_ballean(y);
  return preserves(f, bx, by);
}

BallDecision exists_ball_preserving_bijection(const UltrametricSpace& x,
                                              const UltrametricSpace& y) {
  BallDecision dec;
  dec.method = DecisionMethod::TreeReduction;
  if (x.size() != y.size()) return dec;

  RepTree tx = build_rep_tree(x);
  RepTree ty = build_rep_tree(y);
  auto iso = tree_isomorphism(strip_labels(tx), strip_labels(ty));
  if (!iso) return dec;

  PointBijection f;
  f.to.assign(x.size(), -1);
  for (int p = 0; p < x.size(); ++p) {
    int leaf_y = iso->to[tx.leaf_of_point[p]];
    int q = ty.nodes[leaf_y].point;
    if (q < 0) throw Error("internal error: leaf matched with an internal node");
    f.to[p] = q;
  }

  BallPreservation check = is_ball_preserving(f, x, y);
  if (!check.preserved)
    throw Error("internal error: tree-derived bijection is not ball-preserving");

  dec.equivalent = true;
  dec.witness = std::move(f);
  return dec;
}

BallDecision brute_force_exists(const UltrametricSpace& x, const UltrametricSpace& y, int cap) {
  BallDecision dec;
  dec.method = DecisionMethod::BruteForce;
  if (x.size() != y.size()) return dec;
  if (x.size() > cap)
    throw Error("brute-force ball equivalence: size cap of " + std::to_string(cap) +
                " points exceeded");

  Ballean bx = enumerate_ballean(x);
  Ballean by = enumerate_ballean(y);

  PointBijection f;
  f.to.resize(x.size());
  std::iota(f.to.begin(), f.to.end(), 0);
  do {
    if (preserves(f, bx, by).preserved) {
      dec.equivalent = true;
      dec.witness = f;
      return dec;
    }
  } while (std::next_permutation(f.to.begin(), f.to.end()));
  return dec;
}

std::optional<PointBijection> brute_force_isometry(const UltrametricSpace& x,
                                                   const UltrametricSpace& y, int cap) {
  if (x.size() != y.size()) return std::nullopt;
  if (x.size() > cap)
    throw Error("brute-force isometry: size cap of " + std::to_string(cap) +
                " points exceeded");
  const int n = x.size();
  PointBijection f;
  f.to.resize(n);
  std::iota(f.to.begin(), f.to.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (x.dist(i, j) != y.dist(f.to[i], f.to[j])) ok = false;
    if (ok) return f;
  } while (std::next_permutation(f.to.begin(), f.to.end()));
  return std::nullopt;
}

ConsistencyReport posets_isomorphic_iff_ballmap(const UltrametricSpace& x,
                                                const UltrametricSpace& y) {
  ConsistencyReport rep;

  Ballean bx = enumerate_ballean(x);
  Ballean by = enumerate_ballean(y);
  if (bx.size() == by.size())
    rep.poset_isomorphic = poset_isomorphism(hasse(bx), hasse(by)).has_value();

  BallDecision dec = exists_ball_preserving_bijection(x, y);
  rep.ball_equivalent = dec.equivalent;
  rep.flags_agree = rep.poset_isomorphic == rep.ball_equivalent;

  if (dec.witness) {
    // B1 ⊆ B2  ⟺  f(B1) ⊆ f(B2) over all ordered ball pairs of X.
    std::vector<std::vector<int>> img(bx.size());
    for (int i = 0; i < bx.size(); ++i) img[i] = image_of(bx.balls[i].members, dec.witness->to);
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (int i = 0; i < bx.size(); ++i)
      for (int j = 0; j < bx.size(); ++j) {
        ++rep.ball_pairs_checked;
        bool before = subset(bx.balls[i].members, bx.balls[j].members);
        bool after = subset(img[i], img[j]);
        if (before != after) rep.inclusion_equivalence = false;
      }
  }
  return rep;
}

}  // namespace umt
