#pragma once

#include "coadwidth/schubert.hpp"

namespace coadwidth {

// Outcome of the two-point Gromov-Witten certificate: the invariant equals
// one exactly when c1 = dim Gamma + 1. Its absence proves nothing, so the
// negative case reports "unverified", never zero.
enum class GWValue { verified_one, unverified };

struct GWCertificate {
  ParabolicSubset parabolic;
  int node = -1;
  Int c1;
  int dim_gamma = 0;
  GWValue gw = GWValue::unverified;
};

// [C_beta] in H_2(G/P): the coroot coefficients at the complement nodes.
// Throws when beta lies in R_P+ (the class would vanish).
CurveClass curve_class(const ParabolicSubset& P, const Root& beta);

// c1(T(G/P)) evaluated on a degree: the pairing of the sum of the roots in
// R+ - R_P+ against the class, an exact integer.
Int chern_number(const ParabolicSubset& P, const CurveClass& A);

// Localization consistency: for a weight eta vanishing on S_P and a root
// beta outside R_P+, <eta, coroot(beta)> must equal the evaluation of eta
// on [C_beta].
bool bott_degree_check(const ParabolicSubset& P, const Weight& eta,
                       const Root& beta);

// Weyl dimension formula for a dominant integral weight; exact rational
// accumulation with a final integrality assertion.
Int weyl_dim(const RootSystem& rs, const Weight& eta);

// The certificate for the generator A_alpha on G/P: c1 and dim Gamma are
// both computed on the fiber subsystem through alpha (c1 agrees with the
// ambient value; the cross-check lives in the tests).
GWCertificate gw_certificate(const ParabolicSubset& P, int alpha);

}  // namespace coadwidth
