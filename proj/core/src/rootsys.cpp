#include "coadwidth/rootsys.hpp"

#include "coadwidth/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace coadwidth {

namespace {

// Closure generation never needs heights anywhere near this; hitting the
// cap means the Cartan matrix was not of finite type.
constexpr int kMaxHeight = 256;
constexpr size_t kMaxPositiveRoots = 20000;

void validate_cartan(const IntMat& c) {
  const int n = c.n;
  if (n <= 0) throw invalid_input_error("empty Cartan matrix");
  for (int i = 0; i < n; ++i) {
    if (c.at(i, i) != 2) throw invalid_input_error("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c.at(i, j) > 0)
        throw invalid_input_error("off-diagonal Cartan entries must be <= 0");
      if ((c.at(i, j) == 0) != (c.at(j, i) == 0))
        throw invalid_input_error("Cartan zero pattern must be symmetric");
    }
  }
}

std::vector<std::vector<int>> connected_components(const IntMat& c) {
  const int n = c.n;
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(start);
    comp[start] = id;
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      out[id].push_back(i);
      for (int j = 0; j < n; ++j)
        if (j != i && comp[j] < 0 && c.at(i, j) != 0) {
          comp[j] = id;
          q.push(j);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

// d_i C[i][j] = d_j C[j][i], normalized per component so the longest roots
// get squared length 2 (d = 1).
RatVec solve_symmetrizer(const IntMat& c,
                         const std::vector<std::vector<int>>& components) {
  const int n = c.n;
  RatVec d(n, Rat(0));
  for (const auto& comp : components) {
    d[comp.front()] = 1;
    std::queue<int> q;
    q.push(comp.front());
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || c.at(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * Rat(c.at(i, j)) / Rat(c.at(j, i));
        q.push(j);
      }
    }
    Rat longest(0);
    for (int i : comp) longest = std::max(longest, d[i]);
    for (int i : comp) d[i] /= longest;
  }
  return d;
}

Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Int pow2(int n) {
  Int p = 1;
  return p << n;
}

bool simply_laced(const IntMat& c, const std::vector<int>& comp) {
  for (int i : comp)
    for (int j : comp)
      if (i != j && c.at(i, j) < -1) return false;
  return true;
}

// rank + positive-root count identify each irreducible factor, except that
// rank 6 needs the bond multiplicities to tell B6/C6 from E6.
Int component_weyl_order(const IntMat& cartan, const std::vector<int>& comp,
                         Int positive_count) {
  const int r = static_cast<int>(comp.size());
  const Int c = positive_count;
  if (c == Int(r) * (r + 1) / 2) return factorial(r + 1);
  if (r == 2 && c == 6) return 12;
  if (r == 4 && c == 24) return 1152;
  if (r == 6 && c == 36 && simply_laced(cartan, comp)) return 51840;
  if (r == 7 && c == 63) return 2903040;
  if (r == 8 && c == 120) return 696729600;
  if (c == Int(r) * r) return pow2(r) * factorial(r);
  if (c == Int(r) * (r - 1)) return pow2(r - 1) * factorial(r);
  throw internal_inconsistency_error("unrecognized irreducible root system");
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::from_cartan(IntMat cartan,
                                                          std::string label) {
  return build(std::move(cartan), std::move(label));
}

std::shared_ptr<RootSystem> RootSystem::build(IntMat cartan,
                                              std::string label) {
  validate_cartan(cartan);
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->label_ = std::move(label);
  rs->rank_ = cartan.n;
  rs->cartan_ = std::move(cartan);
  rs->components_ = connected_components(rs->cartan_);
  rs->symmetrizer_ = solve_symmetrizer(rs->cartan_, rs->components_);

  const int n = rs->rank_;
  const IntMat& c = rs->cartan_;

  // Positive roots by closure under simple-root addition: beta + alpha_i is
  // a root iff the alpha_i-string through beta has q = p - <beta, coroot_i>
  // at least 1, where p counts how far back the string already extends.
  std::vector<std::vector<int>> levels;
  levels.emplace_back();
  for (int i = 0; i < n; ++i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    rs->index_[v] = static_cast<int>(rs->positive_roots_.size());
    rs->positive_roots_.push_back(Root{std::move(v)});
    levels.back().push_back(i);
  }
  int height = 1;
  while (!levels.back().empty()) {
    if (++height > kMaxHeight)
      throw invalid_input_error("Cartan matrix is not of finite type");
    std::vector<IntVec> next;
    for (int idx : levels.back()) {
      const IntVec& b = rs->positive_roots_[idx].coeffs;
      for (int i = 0; i < n; ++i) {
        Int pairing = 0;
        for (int j = 0; j < n; ++j)
          if (b[j] != 0) pairing += c.at(i, j) * b[j];
        Int p = 0;
        IntVec back = b;
        while (true) {
          back[i] -= 1;
          bool zero = std::all_of(back.begin(), back.end(),
                                  [](const Int& x) { return x == 0; });
          if (zero || !rs->index_.count(back)) break;
          p += 1;
        }
        if (p - pairing < 1) continue;
        IntVec fwd = b;
        fwd[i] += 1;
        next.push_back(std::move(fwd));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels.emplace_back();
    for (auto& v : next) {
      if (rs->index_.count(v)) continue;
      const int idx = static_cast<int>(rs->positive_roots_.size());
      rs->index_[v] = idx;
      levels.back().push_back(idx);
      rs->positive_roots_.push_back(Root{std::move(v)});
      if (rs->positive_roots_.size() > kMaxPositiveRoots)
        throw invalid_input_error("Cartan matrix is not of finite type");
    }
  }

  // Coroot table: 2 beta / (beta, beta) has coefficients 2 d_i b_i / (beta,
  // beta) in the simple-coroot basis, integral under the normalization.
  rs->coroots_.reserve(rs->positive_roots_.size());
  for (const Root& beta : rs->positive_roots_) {
    Rat norm = 0;
    for (int i = 0; i < n; ++i) {
      if (beta.coeffs[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (beta.coeffs[j] != 0)
          norm += Rat(beta.coeffs[i]) * rs->symmetrizer_[i] *
                  Rat(c.at(i, j)) * Rat(beta.coeffs[j]);
    }
    IntVec m(n);
    for (int i = 0; i < n; ++i) {
      const Rat mi = Rat(2) * rs->symmetrizer_[i] * Rat(beta.coeffs[i]) / norm;
      if (denominator(mi) != 1)
        throw internal_inconsistency_error("non-integral coroot coefficient");
      m[i] = numerator(mi);
    }
    rs->coroots_.push_back(CorootVector{std::move(m)});
  }

  if (rs->components_.size() == 1) {
    int found = -1;
    for (size_t idx = 0; idx < rs->positive_roots_.size(); ++idx) {
      const IntVec& b = rs->positive_roots_[idx].coeffs;
      bool maximal = true;
      for (int i = 0; i < n && maximal; ++i) {
        IntVec up = b;
        up[i] += 1;
        if (rs->index_.count(up)) maximal = false;
      }
      if (!maximal) continue;
      if (found >= 0)
        throw internal_inconsistency_error("highest root is not unique");
      found = static_cast<int>(idx);
    }
    rs->highest_root_index_ = found;
  }

  // |W| as the product of the component orders.
  Int order = 1;
  for (const auto& comp : rs->components_) {
    Int count = 0;
    for (const Root& beta : rs->positive_roots_) {
      bool supported = true;
      for (int i = 0; i < n && supported; ++i)
        if (beta.coeffs[i] != 0 &&
            std::find(comp.begin(), comp.end(), i) == comp.end())
          supported = false;
      if (supported) count += 1;
    }
    order *= component_weyl_order(c, comp, count);
  }
  rs->weyl_order_ = order;

  return rs;
}

Root RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank_) throw invalid_input_error("node out of range");
  IntVec v(rank_, Int(0));
  v[i] = 1;
  return Root{std::move(v)};
}

int RootSystem::positive_root_index(const IntVec& coeffs) const {
  const auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const IntVec& coeffs) const {
  if (positive_root_index(coeffs) >= 0) return true;
  IntVec neg(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  return positive_root_index(neg) >= 0;
}

const Root& RootSystem::highest_root() const {
  if (highest_root_index_ < 0)
    throw invalid_input_error("highest root requires an irreducible system");
  return positive_roots_[highest_root_index_];
}

bool RootSystem::is_long_node(int i) const {
  if (i < 0 || i >= rank_) throw invalid_input_error("node out of range");
  for (const auto& comp : components_) {
    if (std::find(comp.begin(), comp.end(), i) == comp.end()) continue;
    Rat longest(0);
    for (int j : comp) longest = std::max(longest, symmetrizer_[j]);
    return symmetrizer_[i] == longest;
  }
  throw internal_inconsistency_error("node missing from component table");
}

namespace {

IntMat classified_cartan(char letter, int n) {
  const auto bad = [&] {
    std::ostringstream os;
    os << "invalid simple type " << letter << n;
    return invalid_input_error(os.str());
  };
  const auto chain = [](IntMat& c, int from, int to) {
    for (int i = from; i < to; ++i) {
      c.at(i, i + 1) = -1;
      c.at(i + 1, i) = -1;
    }
  };
  IntMat c(n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  switch (letter) {
    case 'A':
      if (n < 1) throw bad();
      chain(c, 0, n - 1);
      return c;
    case 'B':
      if (n < 2) throw bad();
      chain(c, 0, n - 2);
      c.at(n - 2, n - 1) = -1;
      c.at(n - 1, n - 2) = -2;
      return c;
    case 'C':
      if (n < 2) throw bad();
      chain(c, 0, n - 2);
      c.at(n - 2, n - 1) = -2;
      c.at(n - 1, n - 2) = -1;
      return c;
    case 'D':
      if (n < 4) throw bad();
      chain(c, 0, n - 2);
      c.at(n - 3, n - 1) = -1;
      c.at(n - 1, n - 3) = -1;
      return c;
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      // Bourbaki: 1-3-4-5-..., node 2 hangs off node 4.
      const auto link = [&](int i, int j) {
        c.at(i, j) = -1;
        c.at(j, i) = -1;
      };
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i < n - 1; ++i) link(i, i + 1);
      return c;
    }
    case 'F':
      if (n != 4) throw bad();
      chain(c, 0, 3);
      c.at(1, 2) = -1;
      c.at(2, 1) = -2;
      return c;
    case 'G':
      if (n != 2) throw bad();
      c.at(0, 1) = -3;
      c.at(1, 0) = -1;
      return c;
    default:
      throw bad();
  }
}

}  // namespace

RootSystemPtr build_root_system(char type_letter, int rank) {
  const char letter =
      static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
  IntMat cartan = classified_cartan(letter, rank);
  std::string label;
  label += letter;
  label += std::to_string(rank);
  auto rs = RootSystem::build(std::move(cartan), label);
  rs->type_letter_ = letter;
  return rs;
}

RootSystemPtr build_root_system(const std::string& descriptor,
                                std::optional<int> rank) {
  if (descriptor.empty()) throw invalid_input_error("empty type descriptor");
  const char letter = descriptor[0];
  if (descriptor.size() == 1) {
    if (!rank) throw invalid_input_error("type letter requires a rank");
    return build_root_system(letter, *rank);
  }
  int embedded = 0;
  for (size_t i = 1; i < descriptor.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(descriptor[i])))
      throw invalid_input_error("malformed type descriptor: " + descriptor);
    embedded = embedded * 10 + (descriptor[i] - '0');
  }
  if (rank && *rank != embedded)
    throw invalid_input_error("rank given twice and inconsistently");
  return build_root_system(letter, embedded);
}

SubSystem sub_root_system(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw invalid_input_error("empty node subset");
  for (int i : sorted)
    if (i < 0 || i >= rs.rank()) throw invalid_input_error("node out of range");
  const int k = static_cast<int>(sorted.size());
  IntMat sub(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub.at(a, b) = rs.cartan().at(sorted[a], sorted[b]);
  std::ostringstream label;
  label << rs.label() << "[";
  for (int a = 0; a < k; ++a) label << (a ? "," : "") << (sorted[a] + 1);
  label << "]";
  return SubSystem{RootSystem::from_cartan(std::move(sub), label.str()), sorted};
}

Rat inner_product(const RootSystem& rs, const RatVec& v, const RatVec& w) {
  const int n = rs.rank();
  if (v.size() != static_cast<size_t>(n) || w.size() != static_cast<size_t>(n))
    throw invalid_input_error("inner product dimension mismatch");
  Rat out = 0;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (w[j] != 0)
        out += v[i] * rs.symmetrizer()[i] * Rat(rs.cartan().at(i, j)) * w[j];
  }
  return out;
}

Rat inner_product(const RootSystem& rs, const Root& v, const Root& w) {
  RatVec a(v.coeffs.size()), b(w.coeffs.size());
  for (size_t i = 0; i < v.coeffs.size(); ++i) a[i] = Rat(v.coeffs[i]);
  for (size_t i = 0; i < w.coeffs.size(); ++i) b[i] = Rat(w.coeffs[i]);
  return inner_product(rs, a, b);
}

CorootVector coroot(const RootSystem& rs, const Root& beta) {
  int idx = rs.positive_root_index(beta.coeffs);
  if (idx >= 0) return rs.coroots()[idx];
  IntVec neg(beta.coeffs.size());
  for (size_t i = 0; i < beta.coeffs.size(); ++i) neg[i] = -beta.coeffs[i];
  idx = rs.positive_root_index(neg);
  if (idx < 0) throw invalid_input_error("vector is not a root");
  IntVec m = rs.coroots()[idx].coeffs;
  for (Int& x : m) x = -x;
  return CorootVector{std::move(m)};
}

Rat pair(const Weight& lambda, const CorootVector& beta_check) {
  if (lambda.coords.size() != beta_check.coeffs.size())
    throw invalid_input_error("pairing dimension mismatch");
  Rat out = 0;
  for (size_t i = 0; i < lambda.coords.size(); ++i)
    out += lambda.coords[i] * Rat(beta_check.coeffs[i]);
  return out;
}

RatVec weight_in_root_basis(const RootSystem& rs, const Weight& lambda) {
  if (lambda.coords.size() != static_cast<size_t>(rs.rank()))
    throw invalid_input_error("weight dimension mismatch");
  return solve_rational(rs.cartan(), lambda.coords);
}

Weight rho(const RootSystem& rs) {
  return Weight{RatVec(rs.rank(), Rat(1))};
}

Weight fundamental_weight(const RootSystem& rs, int node) {
  if (node < 0 || node >= rs.rank())
    throw invalid_input_error("node out of range");
  RatVec coords(rs.rank(), Rat(0));
  coords[node] = 1;
  return Weight{std::move(coords)};
}

Int weyl_group_order(const RootSystem& rs) {
  if (auto order = rs.known_weyl_order()) return *order;
  throw internal_inconsistency_error("Weyl group order unavailable");
}

}  // namespace coadwidth
