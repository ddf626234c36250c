#pragma once

#include "coadwidth/rootsys.hpp"

#include <utility>
#include <vector>

namespace coadwidth {

// A Weyl group element. The stored word is the canonical reduced word
// (lexicographically smallest, built by repeatedly taking the smallest
// left descent), the action matrix acts on root-lattice coordinates.
// Two elements are equal iff their actions are equal.
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr sys);
  static WeylElement from_word(RootSystemPtr sys, const std::vector<int>& word);
  static WeylElement from_action(RootSystemPtr sys, IntMat action);

  const RootSystemPtr& system() const { return sys_; }
  const std::vector<int>& word() const { return word_; }
  const IntMat& action() const { return action_; }

  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  WeylElement inverse() const;

  // Image of a root-lattice vector / of a weight (fundamental-weight
  // coordinates) under this element.
  IntVec apply(const IntVec& root_coords) const;
  Root apply(const Root& beta) const;
  Weight apply(const Weight& lambda) const;

  // l(w s_i) = l(w) - 1, read off the action without recomputing lengths.
  bool has_right_descent(int node) const;
  bool has_left_descent(int node) const;

  bool operator==(const WeylElement& other) const;
  bool operator!=(const WeylElement& other) const { return !(*this == other); }

  // Total order for deterministic containers and stable output: by length,
  // then lexicographic canonical word.
  bool operator<(const WeylElement& other) const;

  std::string to_string() const;  // "s1 s2 s1", "e" for the identity

 private:
  WeylElement(RootSystemPtr sys, std::vector<int> word, IntMat action)
      : sys_(std::move(sys)), word_(std::move(word)), action_(std::move(action)) {}

  RootSystemPtr sys_;
  std::vector<int> word_;
  IntMat action_;
};

WeylElement simple_reflection(RootSystemPtr sys, int node);

// The reflection v -> v - <v, coroot(beta)> beta, with canonical word.
WeylElement reflection(RootSystemPtr sys, const Root& beta);

WeylElement multiply(const WeylElement& u, const WeylElement& v);

// Inversion count; always equals word length, kept separate so tests can
// cross-check the two routes.
int inversion_count(const WeylElement& w);

// u <= w in Bruhat order, via the subword/lifting property against the
// canonical reduced word of w. O(l(u) * l(w)) and table-free, so it works
// at E8 word lengths.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

// A subset of simple nodes (0-based) and its derived parabolic data.
class ParabolicSubset {
 public:
  ParabolicSubset(RootSystemPtr sys, std::vector<int> nodes);

  const RootSystemPtr& system() const { return sys_; }
  const std::vector<int>& nodes() const { return nodes_; }  // sorted
  bool contains(int node) const;
  std::vector<int> complement() const;  // S - S_P, sorted

  // Indices into positive_roots() of the roots supported on the subset.
  std::vector<int> positive_root_indices() const;

  bool operator==(const ParabolicSubset& other) const;

 private:
  RootSystemPtr sys_;
  std::vector<int> nodes_;
};

// A minimal-length coset representative in W / W_P: no right descent lies
// in S_P. Construction enforces the invariant.
struct CosetRep {
  WeylElement elem;
  ParabolicSubset parabolic;

  CosetRep(WeylElement e, ParabolicSubset p);
};

// The unique W^P element of w W_P, by stripping right descents in S_P.
CosetRep min_coset_rep(const WeylElement& w, const ParabolicSubset& P);

// Longest element of W_P (greedy length increase; idempotent result).
WeylElement longest_element(const ParabolicSubset& P);

// For S_P contained in S_Q, split w in W^P as w = wQ * wQP with wQ in W^Q,
// wQP in W_Q with no right descent in S_P, and lengths adding up.
std::pair<CosetRep, WeylElement> coset_decompose(const CosetRep& w,
                                                 const ParabolicSubset& Q);

// Full group enumeration, for tests and small-rank diagram output only.
// Refuses systems with |W| above the cap (default 10^6, overridable via
// COADJOINT_WIDTH_MAX_ENUM) unless force is set.
std::vector<WeylElement> enumerate_weyl_group(RootSystemPtr sys,
                                              bool force = false);

Int enumeration_limit();

}  // namespace coadwidth
