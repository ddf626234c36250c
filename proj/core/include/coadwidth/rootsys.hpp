#pragma once

#include "coadwidth/numeric.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coadwidth {

// A root, as integer coordinates in the simple-root basis. Positive roots
// have all coefficients >= 0, negative roots all <= 0.
struct Root {
  IntVec coeffs;

  bool operator==(const Root& other) const = default;
  auto operator<=>(const Root& other) const = default;
};

// A coroot, as integer coordinates in the simple-coroot basis. With long
// roots normalized to squared length 2 these coefficients are always
// integral.
struct CorootVector {
  IntVec coeffs;

  bool operator==(const CorootVector& other) const = default;
};

// A weight, as rational coordinates in the fundamental-weight basis, so
// coords[i] = <weight, simple coroot i>. rho is the all-ones vector.
struct Weight {
  RatVec coords;

  bool operator==(const Weight& other) const = default;
};

// Immutable table for one root system: Cartan data, the positive roots in
// height order, and the coroot of each. Built once, then shared freely;
// every operation on it is pure.
class RootSystem {
 public:
  // cartan.at(i, j) = <alpha_j, coroot of alpha_i>.
  static std::shared_ptr<const RootSystem> from_cartan(IntMat cartan,
                                                       std::string label);

  const std::string& label() const { return label_; }
  std::optional<char> type_letter() const { return type_letter_; }
  int rank() const { return rank_; }
  const IntMat& cartan() const { return cartan_; }
  const RatVec& symmetrizer() const { return symmetrizer_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const std::vector<CorootVector>& coroots() const { return coroots_; }
  const std::vector<std::vector<int>>& components() const { return components_; }

  Root simple_root(int i) const;

  // Index into positive_roots(), or -1 when the (positive) vector is not a
  // root. is_root also recognizes negative roots.
  int positive_root_index(const IntVec& coeffs) const;
  bool is_root(const IntVec& coeffs) const;

  // The unique positive root beta with beta + alpha_i never a root. Only
  // defined for irreducible systems.
  const Root& highest_root() const;

  // Squared length of the simple root at node i equals 2 * symmetrizer[i];
  // a node is long when its symmetrizer entry is maximal in its component.
  bool is_long_node(int i) const;

  std::optional<Int> known_weyl_order() const { return weyl_order_; }

 private:
  RootSystem() = default;
  static std::shared_ptr<RootSystem> build(IntMat cartan, std::string label);

  std::string label_;
  std::optional<char> type_letter_;
  int rank_ = 0;
  IntMat cartan_;
  RatVec symmetrizer_;
  std::vector<Root> positive_roots_;
  std::vector<CorootVector> coroots_;
  std::vector<std::vector<int>> components_;
  std::map<IntVec, int> index_;
  int highest_root_index_ = -1;
  std::optional<Int> weyl_order_;

  friend std::shared_ptr<const RootSystem> build_root_system(char, int);
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// The classified simple types: A (n>=1), B (n>=2), C (n>=2), D (n>=4),
// E (6..8), F (4), G (2). Throws invalid_input_error otherwise.
RootSystemPtr build_root_system(char type_letter, int rank);

// "F4" or "F" + rank 4 style descriptors, as accepted by the CLI.
RootSystemPtr build_root_system(const std::string& descriptor,
                                std::optional<int> rank = std::nullopt);

// The root system spanned by a subset of nodes, with the node translation
// table back into the ambient system (node_map[sub] = ambient).
struct SubSystem {
  RootSystemPtr sys;
  std::vector<int> node_map;
};
SubSystem sub_root_system(const RootSystem& rs, const std::vector<int>& nodes);

// Ad-invariant inner product on the root lattice (simple-root coordinates),
// normalized so long roots pair to 2 with themselves.
Rat inner_product(const RootSystem& rs, const RatVec& v, const RatVec& w);
Rat inner_product(const RootSystem& rs, const Root& v, const Root& w);

// 2 beta / (beta, beta), expressed in the simple-coroot basis. beta may be
// a positive or a negative root.
CorootVector coroot(const RootSystem& rs, const Root& beta);

// <weight, coroot>, the basis-free pairing everything downstream consumes.
Rat pair(const Weight& lambda, const CorootVector& beta_check);

// Exact change of basis: fundamental-weight coordinates -> simple-root
// coordinates.
RatVec weight_in_root_basis(const RootSystem& rs, const Weight& lambda);

Weight rho(const RootSystem& rs);
Weight fundamental_weight(const RootSystem& rs, int node);

// |W|, from the classification of the components (rank + root count pin
// down each factor's order).
Int weyl_group_order(const RootSystem& rs);

}  // namespace coadwidth
