#pragma once

#include "umt/ballean.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace umt {

// Canonical code of a rooted tree: equal iff the trees are isomorphic (as
// rooted trees; for the labeled variant, label-preservingly so). The code is
// the classic parenthesis string with child codes sorted, leaves are "()",
// and labeled internal nodes embed their label as "(<label>:...)". Point
// names never enter a code.
struct CanonicalForm {
  std::string code;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_unlabeled(const UnlabeledTree& t);
CanonicalForm canonical_labeled(const RepTree& t);

// Node bijection between two rooted trees: to[u] is the node of the second
// tree matched with node u of the first.
struct NodeBijection {
  std::vector<int> to;
};

// Rooted-tree isomorphism via canonical subtree codes. Returns a witness
// mapping root to root and preserving the child relation, or nullopt.
std::optional<NodeBijection> tree_isomorphism(const UnlabeledTree& a, const UnlabeledTree& b);

// Label-preserving variant: succeeds iff canonical_labeled codes are equal,
// i.e. iff the underlying spaces are isometric; the witness additionally
// matches internal labels.
std::optional<NodeBijection> labeled_tree_isomorphism(const RepTree& a, const RepTree& b);

// Reference oracle: tries all bijections fixing the roots. Throws Error when
// either tree exceeds size_cap.
std::optional<NodeBijection> brute_force_tree_iso(const UnlabeledTree& a, const UnlabeledTree& b,
                                                  int size_cap = 10);

// Literal verifier for witnesses: f is a bijection, maps root to root, and
// <u,v> is an arc of a iff <f(u),f(v)> is an arc of b (checked in both
// directions).
bool is_root_preserving_isomorphism(const UnlabeledTree& a, const UnlabeledTree& b,
                                    const NodeBijection& f);

// Order-isomorphism of two ballean Hasse digraphs, as a vertex bijection.
// Both digraphs must be tree-shaped (throws Error otherwise).
std::optional<std::vector<int>> poset_isomorphism(const HasseDigraph& a, const HasseDigraph& b);

}  // namespace umt
