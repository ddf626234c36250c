#include "coadwidth/schubert.hpp"

#include "coadwidth/errors.hpp"

#include <algorithm>
#include <sstream>

namespace coadwidth {

namespace {

int maximal_node(const ParabolicSubset& P) {
  const auto comp = P.complement();
  if (comp.size() != 1)
    throw invalid_input_error("parabolic subset is not maximal");
  return comp.front();
}

void check_containment(const ParabolicSubset& inner,
                       const ParabolicSubset& outer) {
  for (int i : inner.nodes())
    if (!outer.contains(i))
      throw invalid_input_error("parabolic containment violated");
}

// Keep a running antichain of Bruhat maxima; the theory promises exactly
// one survivor, anything else is a bug signal.
CosetRep unique_maximum(const std::vector<CosetRep>& reps) {
  std::vector<const CosetRep*> maxima;
  for (const CosetRep& r : reps) {
    bool dominated = false;
    for (const CosetRep* m : maxima)
      if (bruhat_leq(r.elem, m->elem)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::erase_if(maxima, [&](const CosetRep* m) {
      return bruhat_leq(m->elem, r.elem);
    });
    maxima.push_back(&r);
  }
  if (maxima.size() != 1) {
    std::ostringstream os;
    os << "fixed point set has " << maxima.size()
       << " Bruhat-maximal cosets instead of one";
    throw internal_inconsistency_error(os.str());
  }
  return *maxima.front();
}

}  // namespace

std::vector<CosetRep> fixed_point_set(const ParabolicSubset& P) {
  const int alpha = maximal_node(P);
  const auto& sys = P.system();
  std::vector<CosetRep> out;
  for (size_t idx = 0; idx < sys->positive_roots().size(); ++idx) {
    // The class of [C_beta] in the rank-one quotient lattice is the coroot
    // coefficient at alpha; the generator A_alpha needs it to be exactly 1
    // (coefficient 0 would mean beta lies in R_P+).
    if (sys->coroots()[idx].coeffs[alpha] != 1) continue;
    const WeylElement s_beta = reflection(sys, sys->positive_roots()[idx]);
    CosetRep rep = min_coset_rep(s_beta, P);
    const bool duplicate =
        std::any_of(out.begin(), out.end(),
                    [&](const CosetRep& r) { return r.elem == rep.elem; });
    if (!duplicate) out.push_back(std::move(rep));
  }
  std::sort(out.begin(), out.end(), [](const CosetRep& a, const CosetRep& b) {
    return a.elem < b.elem;
  });
  return out;
}

CurveNeighborhood curve_neighborhood_point(const ParabolicSubset& P,
                                           int alpha) {
  const auto& sys = P.system();
  if (alpha < 0 || alpha >= sys->rank() || P.contains(alpha))
    throw invalid_input_error("alpha must be a node outside S_P");

  CurveClass degree;
  degree.nodes = P.complement();
  degree.coeffs.assign(degree.nodes.size(), Int(0));
  for (size_t k = 0; k < degree.nodes.size(); ++k)
    if (degree.nodes[k] == alpha) degree.coeffs[k] = 1;

  if (static_cast<int>(P.nodes().size()) + 1 == sys->rank() &&
      sys->components().size() == 1) {
    // Maximal parabolic of an irreducible system: scan fixed points here.
    auto zset = fixed_point_set(P);
    CosetRep max = unique_maximum(zset);
    const int dim = max.elem.length();
    return CurveNeighborhood{P, alpha, std::move(degree), std::move(zset),
                             std::move(max), dim};
  }

  // General parabolic: degree-A_alpha curves stay in the fiber of
  // G/P -> G/Q with S_Q = S_P + {alpha}, and only the connected component
  // of alpha in the induced diagram contributes. Compute there and lift
  // the words back through the node map.
  std::vector<int> comp_nodes;
  {
    std::vector<bool> in_fiber(sys->rank(), false), seen(sys->rank(), false);
    for (int i : P.nodes()) in_fiber[i] = true;
    in_fiber[alpha] = true;
    std::vector<int> stack{alpha};
    seen[alpha] = true;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      comp_nodes.push_back(i);
      for (int j = 0; j < sys->rank(); ++j)
        if (in_fiber[j] && !seen[j] && sys->cartan().at(i, j) != 0) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(comp_nodes.begin(), comp_nodes.end());
  }

  const SubSystem fiber = sub_root_system(*sys, comp_nodes);
  std::vector<int> sub_parabolic;
  int sub_alpha = -1;
  for (size_t k = 0; k < fiber.node_map.size(); ++k) {
    if (fiber.node_map[k] == alpha)
      sub_alpha = static_cast<int>(k);
    else
      sub_parabolic.push_back(static_cast<int>(k));
  }
  const ParabolicSubset sub_P(fiber.sys, sub_parabolic);
  const CurveNeighborhood inner = curve_neighborhood_point(sub_P, sub_alpha);

  const auto lift = [&](const CosetRep& rep) {
    std::vector<int> word;
    word.reserve(rep.elem.word().size());
    for (int i : rep.elem.word()) word.push_back(fiber.node_map[i]);
    return CosetRep(WeylElement::from_word(sys, word), P);
  };

  std::vector<CosetRep> zset;
  zset.reserve(inner.zset.size());
  for (const CosetRep& rep : inner.zset) zset.push_back(lift(rep));
  CosetRep max = lift(inner.max);
  const int dim = inner.dim;
  if (max.elem.length() != dim)
    throw internal_inconsistency_error("fiber lift changed the length");
  return CurveNeighborhood{P, alpha, std::move(degree), std::move(zset),
                           std::move(max), dim};
}

CosetRep longroot_curve_neighborhood(const ParabolicSubset& P) {
  const int alpha = maximal_node(P);
  const auto& sys = P.system();
  if (!sys->is_long_node(alpha))
    throw invalid_input_error("longroot route requires a long simple root");
  std::vector<int> r_nodes;
  for (int i : P.nodes())
    if (sys->cartan().at(alpha, i) == 0) r_nodes.push_back(i);
  const ParabolicSubset R(sys, r_nodes);
  const WeylElement w_p = longest_element(P);
  const WeylElement w_r = longest_element(R);
  const WeylElement s_alpha = simple_reflection(sys, alpha);
  // w_p^r = w_p w_r, and w_p^r s_alpha already lies in W^P.
  const WeylElement product = multiply(multiply(w_p, w_r), s_alpha);
  CosetRep rep = min_coset_rep(product, P);
  if (rep.elem.length() != w_p.length() - w_r.length() + 1)
    throw internal_inconsistency_error("longroot neighborhood length mismatch");
  return rep;
}

CosetRep pushforward(const CosetRep& w, const ParabolicSubset& Q) {
  return coset_decompose(w, Q).first;
}

CosetRep pullback(const CosetRep& wt, const ParabolicSubset& P) {
  const ParabolicSubset& Q = wt.parabolic;
  check_containment(P, Q);
  const WeylElement w_q_p = multiply(longest_element(Q), longest_element(P));
  const WeylElement product = multiply(wt.elem, w_q_p);
  CosetRep rep = min_coset_rep(product, P);
  if (rep.elem.length() != wt.elem.length() + w_q_p.length())
    throw internal_inconsistency_error("pullback lengths do not add");
  return rep;
}

}  // namespace coadwidth
