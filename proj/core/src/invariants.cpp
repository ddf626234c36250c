#include "coadwidth/invariants.hpp"

#include "coadwidth/errors.hpp"

#include <algorithm>

namespace coadwidth {

CurveClass curve_class(const ParabolicSubset& P, const Root& beta) {
  const auto& sys = P.system();
  const CorootVector bv = coroot(*sys, beta);
  CurveClass out;
  out.nodes = P.complement();
  out.coeffs.reserve(out.nodes.size());
  bool zero = true;
  for (int node : out.nodes) {
    out.coeffs.push_back(bv.coeffs[node]);
    if (bv.coeffs[node] != 0) zero = false;
  }
  if (zero)
    throw invalid_input_error("curve class of a root inside R_P+ vanishes");
  return out;
}

Int chern_number(const ParabolicSubset& P, const CurveClass& A) {
  const auto& sys = P.system();
  if (A.nodes != P.complement())
    throw invalid_input_error("curve class does not match the parabolic");
  // Sum the roots of R+ - R_P+ in root coordinates, then pair with each
  // generator coroot: <v, coroot_i> = (C v)_i.
  IntVec total(sys->rank(), Int(0));
  for (const Root& gamma : sys->positive_roots()) {
    bool in_levi = true;
    for (int i = 0; i < sys->rank() && in_levi; ++i)
      if (gamma.coeffs[i] != 0 && !P.contains(i)) in_levi = false;
    if (in_levi) continue;
    for (int i = 0; i < sys->rank(); ++i) total[i] += gamma.coeffs[i];
  }
  Int out = 0;
  for (size_t k = 0; k < A.nodes.size(); ++k) {
    if (A.coeffs[k] == 0) continue;
    const int node = A.nodes[k];
    Int pairing = 0;
    for (int j = 0; j < sys->rank(); ++j)
      if (total[j] != 0) pairing += sys->cartan().at(node, j) * total[j];
    out += A.coeffs[k] * pairing;
  }
  return out;
}

bool bott_degree_check(const ParabolicSubset& P, const Weight& eta,
                       const Root& beta) {
  const auto& sys = P.system();
  if (eta.coords.size() != static_cast<size_t>(sys->rank()))
    throw invalid_input_error("weight dimension mismatch");
  for (int i : P.nodes())
    if (eta.coords[i] != 0)
      throw invalid_input_error("weight must vanish on S_P");
  const Rat lhs = pair(eta, coroot(*sys, beta));
  const CurveClass cls = curve_class(P, beta);
  Rat rhs = 0;
  for (size_t k = 0; k < cls.nodes.size(); ++k)
    rhs += eta.coords[cls.nodes[k]] * Rat(cls.coeffs[k]);
  return lhs == rhs;
}

Int weyl_dim(const RootSystem& rs, const Weight& eta) {
  if (eta.coords.size() != static_cast<size_t>(rs.rank()))
    throw invalid_input_error("weight dimension mismatch");
  for (const Rat& c : eta.coords) {
    if (c < 0) throw invalid_input_error("weight is not dominant");
    if (denominator(c) != 1) throw invalid_input_error("weight is not integral");
  }
  Rat product = 1;
  for (const CorootVector& gamma_check : rs.coroots()) {
    Int num = 0, den = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      const Int& m = gamma_check.coeffs[i];
      if (m == 0) continue;
      num += (numerator(eta.coords[i]) + 1) * m;
      den += m;
    }
    product *= Rat(num, den);
  }
  if (denominator(product) != 1)
    throw internal_inconsistency_error("Weyl dimension is not integral");
  return numerator(product);
}

GWCertificate gw_certificate(const ParabolicSubset& P, int alpha) {
  const auto& sys = P.system();
  if (alpha < 0 || alpha >= sys->rank() || P.contains(alpha))
    throw invalid_input_error("alpha must be a node outside S_P");
  const CurveNeighborhood nbhd = curve_neighborhood_point(P, alpha);

  // c1 on the fiber subsystem through alpha; for a maximal parabolic of an
  // irreducible system this is the ambient computation itself.
  std::vector<int> fiber_nodes = P.nodes();
  fiber_nodes.push_back(alpha);
  Int c1;
  if (static_cast<int>(fiber_nodes.size()) == sys->rank() &&
      sys->components().size() == 1) {
    c1 = chern_number(P, nbhd.degree);
  } else {
    const SubSystem fiber = sub_root_system(*sys, fiber_nodes);
    std::vector<int> sub_nodes;
    int sub_alpha = -1;
    for (size_t k = 0; k < fiber.node_map.size(); ++k) {
      if (fiber.node_map[k] == alpha)
        sub_alpha = static_cast<int>(k);
      else
        sub_nodes.push_back(static_cast<int>(k));
    }
    const ParabolicSubset sub_P(fiber.sys, sub_nodes);
    CurveClass unit;
    unit.nodes = {sub_alpha};
    unit.coeffs = {Int(1)};
    c1 = chern_number(sub_P, unit);
  }

  GWCertificate cert{P, alpha, c1, nbhd.dim, GWValue::unverified};
  if (cert.c1 == Int(cert.dim_gamma) + 1) cert.gw = GWValue::verified_one;
  return cert;
}

}  // namespace coadwidth
