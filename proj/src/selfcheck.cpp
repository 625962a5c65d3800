#include "umt/selfcheck.hpp"

#include <algorithm>

namespace umt {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  return seed * 0x100000001b3ULL + i * 0x9e3779b97f4a7c15ULL;
}

bool proper_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string space_tag(int i, const UltrametricSpace& s) {
  return "space #" + std::to_string(i) + " (" + std::to_string(s.size()) + " points)";
}

CheckResult check_distance_roundtrip(const std::vector<UltrametricSpace>& corpus) {
  CheckResult r;
  r.name = "distance-roundtrip";
  for (std::size_t i = 0; i < corpus.size() && r.passed; ++i) {
    const auto& s = corpus[i];
    RepTree t = build_rep_tree(s);
    ++r.cases;
    for (int x = 0; x < s.size() && r.passed; ++x)
      for (int y = 0; y < s.size() && r.passed; ++y)
        if (distance_from_tree(t, x, y) != s.dist(x, y)) {
          r.passed = false;
          r.detail = space_tag(static_cast<int>(i), s) + ": d(" + s.point_name(x) + "," +
                     s.point_name(y) + ") rebuilt as " + distance_from_tree(t, x, y).str() +
                     ", expected " + s.dist(x, y).str();
        }
  }
  return r;
}

CheckResult check_ball_node_bijection(const std::vector<UltrametricSpace>& corpus) {
  CheckResult r;
  r.name = "ball-node-bijection";
  for (std::size_t i = 0; i < corpus.size() && r.passed; ++i) {
    const auto& s = corpus[i];
    RepTree t = build_rep_tree(s);
    Ballean bx = enumerate_ballean(s);
    Ballean bt = ballean_from_tree(t);
    ++r.cases;
    if (bx.size() != t.size()) {
      r.passed = false;
      r.detail = space_tag(static_cast<int>(i), s) + ": " + std::to_string(bx.size()) +
                 " balls vs " + std::to_string(t.size()) + " tree nodes";
    } else if (bx.balls != bt.balls) {
      r.passed = false;
      r.detail = space_tag(static_cast<int>(i), s) + ": enumerated balls differ from tree balls";
    }
  }
  return r;
}

CheckResult check_hasse_tree_agreement(const std::vector<UltrametricSpace>& corpus) {
  CheckResult r;
  r.name = "hasse-tree-agreement";
  for (std::size_t i = 0; i < corpus.size() && r.passed; ++i) {
    const auto& s = corpus[i];
    RepTree t = build_rep_tree(s);
    Ballean bx = enumerate_ballean(s);
    HasseDigraph h = hasse(bx);

    std::vector<std::pair<int, int>> tree_arcs;
    bool gamma_ok = true;
    std::vector<int> ball_of(t.size(), -1);
    for (int v = 0; v < t.size() && gamma_ok; ++v) {
      auto id = bx.index_of(gamma(t, v));
      if (!id) gamma_ok = false;
      else ball_of[v] = *id;
    }
    ++r.cases;
    if (!gamma_ok) {
      r.passed = false;
      r.detail = space_tag(static_cast<int>(i), s) + ": some subtree leaf set is not a ball";
      continue;
    }
    for (int v = 0; v < t.size(); ++v)
      if (v != t.root) tree_arcs.emplace_back(ball_of[v], ball_of[t.nodes[v].parent]);
    std::sort(tree_arcs.begin(), tree_arcs.end());
    if (tree_arcs != h.arcs) {
      r.passed = false;
      r.detail = space_tag(static_cast<int>(i), s) + ": cover arcs differ from tree arcs";
      continue;
    }
    if (canonical_unlabeled(hasse_to_tree(h)) != canonical_unlabeled(strip_labels(t))) {
      r.passed = false;
      r.detail = space_tag(static_cast<int>(i), s) + ": canonical forms differ";
    }
  }
  return r;
}

CheckResult check_cover_criterion(const std::vector<UltrametricSpace>& corpus) {
  CheckResult r;
  r.name = "cover-criterion";
  for (std::size_t i = 0; i < corpus.size() && r.passed; ++i) {
    const auto& s = corpus[i];
    if (s.size() > 8) continue;
    RepTree t = build_rep_tree(s);
    std::vector<std::vector<int>> leafsets(t.size());
    for (int v = 0; v < t.size(); ++v) leafsets[v] = gamma(t, v);
    ++r.cases;
    for (int u = 0; u < t.size() && r.passed; ++u)
      for (int v = 0; v < t.size() && r.passed; ++v) {
        if (u == v) continue;
        bool child = t.nodes[u].parent == v;
        bool incl = proper_subset(leafsets[u], leafsets[v]);
        if (incl)
          for (int w = 0; w < t.size() && incl; ++w)
            if (w != u && w != v && proper_subset(leafsets[u], leafsets[w]) &&
                proper_subset(leafsets[w], leafsets[v]))
              incl = false;
        if (child != incl) {
          r.passed = false;
          r.detail = space_tag(static_cast<int>(i), s) + ": nodes " + std::to_string(u) +
                     "," + std::to_string(v) + ": child=" + (child ? "yes" : "no") +
                     " but cover=" + (incl ? "yes" : "no");
        }
      }
  }
  return r;
}

CheckResult check_transitivity(const std::vector<UltrametricSpace>& corpus, std::uint64_t seed) {
  CheckResult r;
  r.name = "ball-transitivity";
  for (std::size_t i = 0; i < corpus.size() && r.passed; ++i) {
    TransitivityReport tr = check_ball_transitivity(corpus[i], 16, mix(seed, i));
    r.cases += tr.outer_checked;
    if (!tr.passed) {
      r.passed = false;
      r.detail = space_tag(static_cast<int>(i), corpus[i]) +
                 ": a ball of a ball's subspace is not a ball of the space";
    }
  }
  return r;
}

CheckResult check_oracle_agreement(const std::vector<UltrametricSpace>& pool) {
  CheckResult r;
  r.name = "oracle-agreement";
  for (std::size_t i = 0; i < pool.size() && r.passed; ++i)
    for (std::size_t j = i; j < pool.size() && r.passed; ++j) {
      ++r.cases;
      BallDecision dec = exists_ball_preserving_bijection(pool[i], pool[j]);
      BallDecision bf = brute_force_exists(pool[i], pool[j]);
      if (dec.equivalent != bf.equivalent) {
        r.passed = false;
        r.detail = "pool pair (" + std::to_string(i) + "," + std::to_string(j) +
                   "): tree decision " + (dec.equivalent ? "yes" : "no") + ", brute force " +
                   (bf.equivalent ? "yes" : "no");
        break;
      }
      if (dec.witness && !is_ball_preserving(*dec.witness, pool[i], pool[j]).preserved) {
        r.passed = false;
        r.detail = "pool pair (" + std::to_string(i) + "," + std::to_string(j) +
                   "): returned witness is not ball-preserving";
      }
    }
  return r;
}

CheckResult check_poset_consistency(const std::vector<UltrametricSpace>& pool) {
  CheckResult r;
  r.name = "poset-consistency";
  for (std::size_t i = 0; i < pool.size() && r.passed; ++i)
    for (std::size_t j = i; j < pool.size() && r.passed; ++j) {
      ++r.cases;
      ConsistencyReport rep = posets_isomorphic_iff_ballmap(pool[i], pool[j]);
      if (!rep.ok()) {
        r.passed = false;
        r.detail = "pool pair (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                   (rep.flags_agree ? "witness violates inclusion equivalence"
                                    : "poset and ball-equivalence flags disagree");
      }
    }
  return r;
}

}  // namespace

SelfCheckReport run_selfcheck(std::uint64_t seed, int count, int max_n) {
  if (count < 1) count = 1;
  if (max_n < 1) max_n = 1;

  std::vector<UltrametricSpace> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i)
    corpus.push_back(generate_random(mix(seed, i), 1 + i % max_n));

  const int pool_n = std::min(max_n, 6);
  const int pool_size = std::min(count, 40);
  std::vector<UltrametricSpace> pool;
  pool.reserve(pool_size);
  for (int i = 0; i < pool_size; ++i)
    pool.push_back(generate_random(mix(seed ^ 0xba11ba11ULL, i), 1 + i % pool_n));

  SelfCheckReport report;
  report.checks.push_back(check_distance_roundtrip(corpus));
  report.checks.push_back(check_ball_node_bijection(corpus));
  report.checks.push_back(check_hasse_tree_agreement(corpus));
  report.checks.push_back(check_cover_criterion(corpus));
  report.checks.push_back(check_transitivity(corpus, seed));
  report.checks.push_back(check_oracle_agreement(pool));
  report.checks.push_back(check_poset_consistency(pool));
  return report;
}

}  // namespace umt
