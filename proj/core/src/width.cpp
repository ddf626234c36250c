#include "coadwidth/width.hpp"

#include "coadwidth/errors.hpp"

#include <algorithm>

namespace coadwidth {

namespace {

bool is_zero(const Weight& lambda) {
  return std::all_of(lambda.coords.begin(), lambda.coords.end(),
                     [](const Rat& c) { return c == 0; });
}

}  // namespace

std::pair<Weight, WeylElement> make_dominant(RootSystemPtr sys,
                                             const Weight& lambda) {
  if (lambda.coords.size() != static_cast<size_t>(sys->rank()))
    throw invalid_input_error("weight dimension mismatch");
  RatVec coords = lambda.coords;
  const IntMat& c = sys->cartan();
  std::vector<int> applied;
  const size_t cap = sys->positive_roots().size() + 1;
  while (true) {
    int neg = -1;
    for (int i = 0; i < sys->rank(); ++i)
      if (coords[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    // s_i flips the sign at i and shears the neighbors:
    // l_j -= l_i C[j][i].
    const Rat li = coords[neg];
    for (int j = 0; j < sys->rank(); ++j)
      if (c.at(j, neg) != 0) coords[j] -= li * Rat(c.at(j, neg));
    applied.push_back(neg);
    if (applied.size() > cap)
      throw internal_inconsistency_error("dominance reduction failed to end");
  }
  std::reverse(applied.begin(), applied.end());
  return {Weight{std::move(coords)}, WeylElement::from_word(sys, applied)};
}

ParabolicSubset stabilizer_parabolic(RootSystemPtr sys, const Weight& lambda) {
  if (lambda.coords.size() != static_cast<size_t>(sys->rank()))
    throw invalid_input_error("weight dimension mismatch");
  if (is_zero(lambda))
    throw degenerate_orbit_error("the zero weight gives a point orbit");
  std::vector<int> nodes;
  for (int i = 0; i < sys->rank(); ++i) {
    if (lambda.coords[i] < 0)
      throw invalid_input_error("stabilizer requires a dominant weight");
    if (lambda.coords[i] == 0) nodes.push_back(i);
  }
  return ParabolicSubset(std::move(sys), std::move(nodes));
}

GromovWidthReport gromov_width_upper(const RootSystemPtr& sys,
                                     const Weight& lambda) {
  if (lambda.coords.size() != static_cast<size_t>(sys->rank()))
    throw invalid_input_error("weight dimension mismatch");
  if (is_zero(lambda))
    throw degenerate_orbit_error("the zero weight gives a point orbit");

  auto [dominant, witness] = make_dominant(sys, lambda);
  ParabolicSubset P = stabilizer_parabolic(sys, dominant);

  // The minimum runs over every coroot; the pairing multiset is stable
  // under sign flips and under W, so scanning the positive coroots against
  // the original weight covers the full coroot system.
  Rat bound;
  const CorootVector* achieving = nullptr;
  for (const CorootVector& bv : sys->coroots()) {
    Rat p = pair(lambda, bv);
    if (p == 0) continue;
    if (p < 0) p = -p;
    if (achieving == nullptr || p < bound) {
      bound = p;
      achieving = &bv;
    }
  }
  if (achieving == nullptr)
    throw degenerate_orbit_error("every coroot pairing vanishes");

  GromovWidthReport report{sys,
                           bound,
                           *achieving,
                           P,
                           {},
                           {},
                           dominant,
                           witness};
  for (int node : P.complement()) {
    report.areas.emplace(node, dominant.coords[node]);
    GWCertificate cert = gw_certificate(P, node);
    if (cert.gw != GWValue::verified_one)
      throw internal_inconsistency_error(
          "generator certificate failed the dimension constraint");
    report.certificates.emplace(node, std::move(cert));
  }
  return report;
}

GromovWidthReport gromov_width_upper(char type_letter, int rank,
                                     const Weight& lambda) {
  return gromov_width_upper(build_root_system(type_letter, rank), lambda);
}

UnWidthResult un_width(const RatVec& diagonal) {
  const size_t n = diagonal.size();
  if (n == 0) throw invalid_input_error("empty diagonal");
  Rat width;
  bool found = false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (diagonal[i] == diagonal[j]) continue;
      Rat d = diagonal[i] - diagonal[j];
      if (d < 0) d = -d;
      if (!found || d < width) {
        width = d;
        found = true;
      }
    }
  if (!found)
    throw degenerate_orbit_error("constant diagonal gives a point orbit");
  RatVec sorted = diagonal;
  std::sort(sorted.begin(), sorted.end(), std::greater<Rat>());
  RatVec coords(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) coords[i] = sorted[i] - sorted[i + 1];
  return UnWidthResult{std::move(width), Weight{std::move(coords)}};
}

Weight weight_from_un_diag(const RatVec& diagonal) {
  if (diagonal.size() < 2)
    throw invalid_input_error("un-diag input needs at least two entries");
  RatVec coords(diagonal.size() - 1);
  for (size_t i = 0; i + 1 < diagonal.size(); ++i)
    coords[i] = diagonal[i] - diagonal[i + 1];
  return Weight{std::move(coords)};
}

Weight weight_from_euclidean(char type_letter, int rank, const RatVec& x) {
  const char letter =
      static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
  const auto need = [&](size_t count) {
    if (x.size() != count)
      throw invalid_input_error("euclidean coordinate count mismatch");
  };
  RatVec c;
  switch (letter) {
    case 'A':
      need(static_cast<size_t>(rank) + 1);
      c.resize(rank);
      for (int i = 0; i < rank; ++i) c[i] = x[i] - x[i + 1];
      break;
    case 'B':
      need(rank);
      c.resize(rank);
      for (int i = 0; i + 1 < rank; ++i) c[i] = x[i] - x[i + 1];
      c[rank - 1] = Rat(2) * x[rank - 1];
      break;
    case 'C':
      need(rank);
      c.resize(rank);
      for (int i = 0; i + 1 < rank; ++i) c[i] = x[i] - x[i + 1];
      c[rank - 1] = x[rank - 1];
      break;
    case 'D':
      need(rank);
      if (rank < 4) throw invalid_input_error("type D needs rank >= 4");
      c.resize(rank);
      for (int i = 0; i + 1 < rank; ++i) c[i] = x[i] - x[i + 1];
      c[rank - 1] = x[rank - 2] + x[rank - 1];
      break;
    case 'F':
      if (rank != 4) throw invalid_input_error("type F needs rank 4");
      need(4);
      c = {x[1] - x[2], x[2] - x[3], Rat(2) * x[3], x[0] - x[1] - x[2] - x[3]};
      break;
    case 'G': {
      if (rank != 2) throw invalid_input_error("type G needs rank 2");
      need(2);
      // Input (a, b) encodes a e_1 + b sqrt(3) e_2 against the plane
      // realization with long root (-3/2, sqrt(3)/2) and short root (1, 0);
      // node 1 here is the short one.
      c = {Rat(2) * x[0], x[1] - x[0]};
      break;
    }
    default:
      throw invalid_input_error("no euclidean realization for this type");
  }
  return Weight{std::move(c)};
}

}  // namespace coadwidth
