#pragma once

#include "coadwidth/invariants.hpp"

#include <map>

namespace coadwidth {

// The upper bound for the Gromov width of the coadjoint orbit through
// lambda, together with everything that certifies it: the coroot attaining
// the minimum pairing, the symplectic area of each generator, and a
// verified GW certificate per generator.
struct GromovWidthReport {
  RootSystemPtr system;
  Rat bound;
  CorootVector achieving_coroot;
  ParabolicSubset parabolic;          // stabilizer of the dominant weight
  std::map<int, Rat> areas;           // node -> <lambda+, coroot>, S - S_P
  std::map<int, GWCertificate> certificates;
  Weight dominant_lambda;
  WeylElement chamber_witness;        // w with w(lambda) dominant
};

// Reflect lambda into the dominant chamber; returns (lambda+, w) with
// w(lambda) = lambda+.
std::pair<Weight, WeylElement> make_dominant(RootSystemPtr sys,
                                             const Weight& lambda);

// S_P = the nodes whose pairing with lambda vanishes. lambda must be
// dominant; the zero weight raises degenerate_orbit_error.
ParabolicSubset stabilizer_parabolic(RootSystemPtr sys, const Weight& lambda);

GromovWidthReport gromov_width_upper(const RootSystemPtr& sys,
                                     const Weight& lambda);
GromovWidthReport gromov_width_upper(char type_letter, int rank,
                                     const Weight& lambda);

// min |l_i - l_j| over distinct entries, plus the type-A weight of the
// tuple (descending-sorted consecutive differences; the trace part drops
// out) for cross-checking against the general machinery.
struct UnWidthResult {
  Rat width;
  Weight weight;  // in A_{n-1}, fundamental-weight coordinates
};
UnWidthResult un_width(const RatVec& diagonal);

// Input converters. Everything downstream is basis-free; these isolate the
// realization conventions.
//   - un_diag: n diagonal entries for a U(n) orbit -> A_{n-1} weight.
//   - euclidean: e_i coordinates. A takes rank+1 entries (differences),
//     B/C/D take rank entries in the standard realizations, F takes the
//     4-dimensional realization. G takes (a, b) meaning a e_1 + b sqrt(3)
//     e_2 in the plane realization, which keeps the pairings rational.
Weight weight_from_un_diag(const RatVec& diagonal);
Weight weight_from_euclidean(char type_letter, int rank, const RatVec& coords);

}  // namespace coadwidth
