#pragma once

#include "coadwidth/weyl.hpp"

#include <vector>

namespace coadwidth {

// A degree in H_2(G/P): coroot coefficients surviving the quotient by the
// S_P coroot span, i.e. the coroot coordinates at the complement nodes.
struct CurveClass {
  std::vector<int> nodes;  // S - S_P, sorted ambient node indices
  IntVec coeffs;           // parallel to nodes

  bool operator==(const CurveClass& other) const = default;
};

// The degree-A_alpha neighborhood of the base point: its T-fixed cosets,
// the unique Bruhat maximum among them, and the complex dimension. For a
// non-maximal parabolic the data is computed in the fiber subsystem and
// lifted back to ambient words.
struct CurveNeighborhood {
  ParabolicSubset parabolic;
  int node = -1;  // alpha
  CurveClass degree;
  std::vector<CosetRep> zset;
  CosetRep max;
  int dim = 0;
};

// For P maximal at alpha: the minimal representatives of the cosets
// s_beta W_P over the roots beta outside R_P+ whose coroot lies in the
// class of the generator, duplicates merged, sorted for determinism.
std::vector<CosetRep> fixed_point_set(const ParabolicSubset& P);

CurveNeighborhood curve_neighborhood_point(const ParabolicSubset& P, int alpha);

// For P maximal at a long simple root alpha: the neighborhood is the
// Schubert variety of w_p^r s_alpha, with R the parabolic dropping alpha
// and its Dynkin neighbors, and w_p^r = w_p w_r the longest element of
// W_P^R. Throws when alpha is short.
CosetRep longroot_curve_neighborhood(const ParabolicSubset& P);

// Schubert pushforward / pullback along G/P -> G/Q for S_P inside S_Q:
// X_P(w) maps to X_Q(w^Q); X_Q(wt) pulls back to X_P(wt * w_q^p).
CosetRep pushforward(const CosetRep& w, const ParabolicSubset& Q);
CosetRep pullback(const CosetRep& wt, const ParabolicSubset& P);

}  // namespace coadwidth
