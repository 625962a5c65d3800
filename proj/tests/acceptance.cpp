// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Every derived value is checked exactly (rational arithmetic throughout);
// the per-criterion wall-clock budgets are part of the gate.

#include "umt/ballmap.hpp"
#include "umt/canonical.hpp"
#include "umt/generate.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace umt;

namespace {

std::uint64_t mix(std::uint64_t base, std::uint64_t i) {
  return base * 0x100000001b3ULL + i * 0x9e3779b97f4a7c15ULL;
}

std::vector<UltrametricSpace> corpus(std::uint64_t base, int count, int max_n) {
  std::vector<UltrametricSpace> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(generate_random(mix(base, i), 1 + i % max_n));
  return out;
}

struct Outcome {
  bool ok = true;
  std::string detail;  // first failure, or a short success note

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool g_all_ok = true;

void run(int number, const char* title, double budget_sec,
         const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  body(out);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_sec)
    out.fail("over budget: " + std::to_string(elapsed) + "s > " + std::to_string(budget_sec) +
             "s");
  std::printf("%s  %d. %s (%s; %.2fs, budget %.0fs)\n", out.ok ? "PASS" : "FAIL", number, title,
              out.detail.c_str(), elapsed, budget_sec);
  if (!out.ok) g_all_ok = false;
}

std::string nth(std::uint64_t base, int i) {
  return "space #" + std::to_string(i) + " (seed " + std::to_string(mix(base, i)) + ")";
}

}  // namespace

int main() {
  constexpr std::uint64_t kCorpusBase = 1001, kHasseBase = 2002, kPoolBase = 3003;

  std::vector<UltrametricSpace> spaces = corpus(kCorpusBase, 500, 12);

  run(1, "tree round-trip reproduces every distance exactly", 10.0, [&](Outcome& out) {
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      const auto& s = spaces[i];
      RepTree t = build_rep_tree(s);
      for (int p = 0; p < s.size(); ++p)
        for (int q = 0; q < s.size(); ++q)
          if (distance_from_tree(t, p, q) != s.dist(p, q))
            return out.fail(nth(kCorpusBase, i) + ": d(" + std::to_string(p) + "," +
                            std::to_string(q) + ") not reproduced");
    }
    out.detail = "500 spaces, n in [1,12]";
  });

  run(2, "ball count equals tree node count and the ball families are set-equal", 10.0,
      [&](Outcome& out) {
        for (std::size_t i = 0; i < spaces.size(); ++i) {
          const auto& s = spaces[i];
          RepTree t = build_rep_tree(s);
          Ballean direct = enumerate_ballean(s);
          if (direct.size() != t.size())
            return out.fail(nth(kCorpusBase, i) + ": " + std::to_string(direct.size()) +
                            " balls vs " + std::to_string(t.size()) + " nodes");
          if (ballean_from_tree(t).balls != direct.balls)
            return out.fail(nth(kCorpusBase, i) + ": ball families differ");
        }
        out.detail = "500 spaces";
      });

  run(3, "inclusion Hasse digraph matches the tree digraph with a verified bijection", 10.0,
      [&](Outcome& out) {
        int checked = 0;
        for (int i = 0; i < 200; ++i) {
          auto s = generate_random(mix(kHasseBase, i), 1 + i % 10);
          RepTree t = build_rep_tree(s);
          UnlabeledTree shape = strip_labels(t);
          Ballean b = enumerate_ballean(s);
          HasseDigraph h = hasse(b);
          UnlabeledTree ht = hasse_to_tree(h);
          if (!(canonical_unlabeled(shape) == canonical_unlabeled(ht)))
            return out.fail(nth(kHasseBase, i) + ": canonical forms differ");

          NodeBijection f;  // tree node -> ball id, via the leaf sets
          f.to.assign(t.size(), -1);
          for (int v = 0; v < t.size(); ++v) {
            auto id = b.index_of(gamma(t, v));
            if (!id) return out.fail(nth(kHasseBase, i) + ": subtree leaf set is not a ball");
            f.to[v] = *id;
          }
          if (!is_root_preserving_isomorphism(shape, ht, f))
            return out.fail(nth(kHasseBase, i) + ": node-to-ball map is not arc-preserving");
          ++checked;
        }
        out.detail = std::to_string(checked) + " spaces, n <= 10";
      });

  std::vector<UltrametricSpace> pool = corpus(kPoolBase, 40, 6);

  run(4, "tree decision agrees with the brute-force oracle on every pool pair", 60.0,
      [&](Outcome& out) {
        int pairs = 0;
        for (std::size_t i = 0; i < pool.size(); ++i)
          for (std::size_t j = i; j < pool.size(); ++j) {
            const auto& x = pool[i];
            const auto& y = pool[j];
            BallDecision fast = exists_ball_preserving_bijection(x, y);
            BallDecision slow = brute_force_exists(x, y);
            if (fast.equivalent != slow.equivalent)
              return out.fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
                              "): decisions disagree");
            if (fast.witness && !is_ball_preserving(*fast.witness, x, y).preserved)
              return out.fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
                              "): tree witness rejected");
            if (slow.witness && !is_ball_preserving(*slow.witness, x, y).preserved)
              return out.fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
                              "): oracle witness rejected");
            ++pairs;
          }
        if (pairs < 780) return out.fail("only " + std::to_string(pairs) + " pairs");
        out.detail = std::to_string(pairs) + " pairs from 40 spaces, n <= 6";
      });

  run(5, "poset isomorphism coincides with ball equivalence, witnesses keep inclusion", 60.0,
      [&](Outcome& out) {
        int pairs = 0;
        long long ball_pairs = 0;
        for (std::size_t i = 0; i < pool.size(); ++i)
          for (std::size_t j = i; j < pool.size(); ++j) {
            ConsistencyReport rep = posets_isomorphic_iff_ballmap(pool[i], pool[j]);
            if (!rep.flags_agree)
              return out.fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
                              "): flags disagree");
            if (!rep.inclusion_equivalence)
              return out.fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
                              "): witness breaks inclusion");
            ball_pairs += rep.ball_pairs_checked;
            ++pairs;
          }
        out.detail = std::to_string(pairs) + " pairs, " + std::to_string(ball_pairs) +
                     " ball inclusions audited";
      });

  run(6, "internal arity >= 2, strictly decreasing labels, balls of balls are balls", 30.0,
      [&](Outcome& out) {
        int transitivity_outer = 0;
        for (std::size_t i = 0; i < spaces.size(); ++i) {
          const auto& s = spaces[i];
          RepTree t = build_rep_tree(s);
          for (int v = 0; v < t.size(); ++v) {
            const auto& node = t.nodes[v];
            if (!t.is_leaf(v) && node.children.size() < 2)
              return out.fail(nth(kCorpusBase, i) + ": internal node with one child");
            if (v != t.root && !t.is_leaf(v) && !(node.label < t.nodes[node.parent].label))
              return out.fail(nth(kCorpusBase, i) + ": labels not strictly decreasing");
          }
          if (s.size() <= 7) {
            TransitivityReport rep = check_ball_transitivity(s);
            if (!rep.passed) return out.fail(nth(kCorpusBase, i) + ": ball of a ball not a ball");
            transitivity_outer += rep.outer_checked;
          }
        }
        out.detail = "500 trees; " + std::to_string(transitivity_outer) +
                     " sub-balleans checked exhaustively";
      });

  run(7, "a 3x-scaled copy stays ball-equivalent but is no isometry", 1.0, [&](Outcome& out) {
    auto res = validate({"a", "b", "c", "d"}, {{"0", "1", "2", "3"},
                                               {"1", "0", "2", "3"},
                                               {"2", "2", "0", "3"},
                                               {"3", "3", "3", "0"}});
    if (!res.ok()) return out.fail("example space failed validation");
    const UltrametricSpace& s = *res.space;
    UltrametricSpace s3 = scaled(s, Scalar::from_int(3));
    BallDecision dec = exists_ball_preserving_bijection(s, s3);
    if (!dec.equivalent || !dec.witness) return out.fail("scaled copy not ball-equivalent");
    if (!is_ball_preserving(*dec.witness, s, s3).preserved)
      return out.fail("scaled-copy witness rejected");
    if (canonical_labeled(build_rep_tree(s)) == canonical_labeled(build_rep_tree(s3)))
      return out.fail("labeled canonical forms collide");
    if (labeled_tree_isomorphism(build_rep_tree(s), build_rep_tree(s3)))
      return out.fail("scaled copy reported isometric");
    out.detail = "ball-equivalent, labeled forms differ";
  });

  run(8, "canonical form of 100000 leaves < 2 s; tree build for n = 2000 < 30 s", 35.0,
      [&](Outcome& out) {
        RepTree big = random_rep_tree(777, 100000);
        UnlabeledTree shape = strip_labels(big);
        auto t0 = std::chrono::steady_clock::now();
        CanonicalForm form = canonical_unlabeled(shape);
        double canon_sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (form.code.size() != 2 * static_cast<std::size_t>(big.size()))
          return out.fail("canonical code has the wrong length");
        if (canon_sec >= 2.0)
          return out.fail("canonical form took " + std::to_string(canon_sec) + "s");

        UltrametricSpace s = generate_random(888, 2000);
        auto t1 = std::chrono::steady_clock::now();
        RepTree t = build_rep_tree(s);
        double build_sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
        if (t.leaf_count() != 2000) return out.fail("tree lost leaves");
        if (build_sec >= 30.0)
          return out.fail("tree build took " + std::to_string(build_sec) + "s");

        char buf[96];
        std::snprintf(buf, sizeof buf, "canonical %.2fs, build %.2fs", canon_sec, build_sec);
        out.detail = buf;
      });

  return g_all_ok ? 0 : 1;
}
