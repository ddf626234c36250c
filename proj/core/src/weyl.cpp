#include "coadwidth/weyl.hpp"

#include "coadwidth/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace coadwidth {

namespace {

// In-place rank-one updates for multiplication by a simple reflection.
// Right: columns move, col_j -= C[i][j] col_i. Left: only row i moves.
void right_mult_simple(IntMat& m, const IntMat& cartan, int i) {
  const int n = m.n;
  IntVec col_i(n);
  for (int r = 0; r < n; ++r) col_i[r] = m.at(r, i);
  for (int j = 0; j < n; ++j) {
    const Int& c = cartan.at(i, j);
    if (c == 0) continue;
    for (int r = 0; r < n; ++r) m.at(r, j) -= c * col_i[r];
  }
}

void left_mult_simple(IntMat& m, const IntMat& cartan, int i) {
  const int n = m.n;
  for (int j = 0; j < n; ++j) {
    Int acc = 0;
    for (int k = 0; k < n; ++k)
      if (cartan.at(i, k) != 0) acc += cartan.at(i, k) * m.at(k, j);
    m.at(i, j) -= acc;
  }
}

// Column j of m is the image of alpha_j; roots keep a uniform sign, so the
// first nonzero entry decides.
bool column_is_negative(const IntMat& m, int j) {
  for (int r = 0; r < m.n; ++r) {
    if (m.at(r, j) < 0) return true;
    if (m.at(r, j) > 0) return false;
  }
  throw internal_inconsistency_error("action sent a simple root to zero");
}

// Canonical reduced word: repeatedly peel off the smallest left descent.
// i is a left descent of w iff w^{-1}(alpha_i) < 0, read from the inverse
// action which we update alongside.
std::vector<int> canonical_word(IntMat m, const IntMat& cartan) {
  std::vector<int> word;
  if (m.is_identity()) return word;
  IntMat inv = inverse_unimodular(m);
  const int n = m.n;
  while (!m.is_identity()) {
    int descent = -1;
    for (int i = 0; i < n; ++i)
      if (column_is_negative(inv, i)) {
        descent = i;
        break;
      }
    if (descent < 0)
      throw internal_inconsistency_error("no left descent on a non-identity element");
    word.push_back(descent);
    left_mult_simple(m, cartan, descent);
    right_mult_simple(inv, cartan, descent);
  }
  return word;
}

void check_same_system(const RootSystemPtr& a, const RootSystemPtr& b) {
  if (a == b) return;
  if (a && b && a->cartan() == b->cartan()) return;
  throw invalid_input_error("root system mismatch");
}

}  // namespace

WeylElement WeylElement::identity(RootSystemPtr sys) {
  const int n = sys->rank();
  return WeylElement(std::move(sys), {}, IntMat::identity(n));
}

WeylElement WeylElement::from_action(RootSystemPtr sys, IntMat action) {
  if (action.n != sys->rank())
    throw invalid_input_error("action dimension mismatch");
  auto word = canonical_word(action, sys->cartan());
  return WeylElement(std::move(sys), std::move(word), std::move(action));
}

WeylElement WeylElement::from_word(RootSystemPtr sys,
                                   const std::vector<int>& word) {
  IntMat m = IntMat::identity(sys->rank());
  for (int i : word) {
    if (i < 0 || i >= sys->rank())
      throw invalid_input_error("reflection index out of range");
    right_mult_simple(m, sys->cartan(), i);
  }
  return from_action(std::move(sys), std::move(m));
}

WeylElement WeylElement::inverse() const {
  IntMat m = IntMat::identity(sys_->rank());
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    right_mult_simple(m, sys_->cartan(), *it);
  return from_action(sys_, std::move(m));
}

IntVec WeylElement::apply(const IntVec& root_coords) const {
  return action_ * root_coords;
}

Root WeylElement::apply(const Root& beta) const {
  return Root{action_ * beta.coeffs};
}

Weight WeylElement::apply(const Weight& lambda) const {
  if (lambda.coords.size() != static_cast<size_t>(sys_->rank()))
    throw invalid_input_error("weight dimension mismatch");
  // Weights live in the dual basis; apply the canonical word reflection by
  // reflection: s_i(l)_j = l_j - l_i C[j][i].
  RatVec coords = lambda.coords;
  const IntMat& c = sys_->cartan();
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    const int i = *it;
    const Rat li = coords[i];
    if (li == 0) continue;
    for (int j = 0; j < sys_->rank(); ++j)
      if (c.at(j, i) != 0) coords[j] -= li * Rat(c.at(j, i));
  }
  return Weight{std::move(coords)};
}

bool WeylElement::has_right_descent(int node) const {
  return column_is_negative(action_, node);
}

bool WeylElement::has_left_descent(int node) const {
  // w^{-1}(alpha_i) < 0 iff row i of the action has a negative... the row
  // test is wrong in general, so go through the inverse word instead:
  // left descents of w are right descents of w^{-1}, and the reversed word
  // of w is a reduced word for w^{-1}.
  IntMat m = IntMat::identity(sys_->rank());
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    right_mult_simple(m, sys_->cartan(), *it);
  return column_is_negative(m, node);
}

bool WeylElement::operator==(const WeylElement& other) const {
  check_same_system(sys_, other.sys_);
  return action_ == other.action_;
}

bool WeylElement::operator<(const WeylElement& other) const {
  if (word_.size() != other.word_.size())
    return word_.size() < other.word_.size();
  return word_ < other.word_;
}

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::ostringstream os;
  for (size_t k = 0; k < word_.size(); ++k)
    os << (k ? " " : "") << "s" << (word_[k] + 1);
  return os.str();
}

WeylElement simple_reflection(RootSystemPtr sys, int node) {
  if (node < 0 || node >= sys->rank())
    throw invalid_input_error("node out of range");
  return WeylElement::from_word(std::move(sys), {node});
}

WeylElement reflection(RootSystemPtr sys, const Root& beta) {
  if (!sys->is_root(beta.coeffs))
    throw invalid_input_error("reflection requires a root");
  const int n = sys->rank();
  const CorootVector bv = coroot(*sys, beta);
  // v -> v - <v, coroot(beta)> beta, with <v, coroot(beta)> = m^T C v.
  IntVec row(n);
  for (int j = 0; j < n; ++j) {
    Int acc = 0;
    for (int i = 0; i < n; ++i)
      if (bv.coeffs[i] != 0) acc += bv.coeffs[i] * sys->cartan().at(i, j);
    row[j] = acc;
  }
  IntMat m = IntMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) -= beta.coeffs[i] * row[j];
  return WeylElement::from_action(std::move(sys), std::move(m));
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  check_same_system(u.system(), v.system());
  return WeylElement::from_action(u.system(), u.action() * v.action());
}

int inversion_count(const WeylElement& w) {
  int count = 0;
  for (const Root& beta : w.system()->positive_roots()) {
    const IntVec image = w.action() * beta.coeffs;
    for (const Int& x : image) {
      if (x < 0) {
        ++count;
        break;
      }
      if (x > 0) break;
    }
  }
  return count;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  check_same_system(u.system(), w.system());
  if (u.length() > w.length()) return false;
  if (u.length() == w.length()) return u == w;
  // Lifting property, walking the reduced word of w from the right: with s
  // a right descent of w, u <= w iff (us <= ws when l(us) < l(u), else
  // u <= ws). Ends at w = e, where only u = e survives.
  IntMat x = u.action();
  int x_len = u.length();
  const IntMat& cartan = u.system()->cartan();
  const auto& word = w.word();
  int remaining = static_cast<int>(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it, --remaining) {
    if (x_len == 0) return true;
    if (x_len > remaining) return false;
    const int s = *it;
    if (column_is_negative(x, s)) {
      right_mult_simple(x, cartan, s);
      --x_len;
    }
  }
  return x_len == 0;
}

ParabolicSubset::ParabolicSubset(RootSystemPtr sys, std::vector<int> nodes)
    : sys_(std::move(sys)), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  for (int i : nodes_)
    if (i < 0 || i >= sys_->rank())
      throw invalid_input_error("parabolic node out of range");
}

bool ParabolicSubset::contains(int node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

std::vector<int> ParabolicSubset::complement() const {
  std::vector<int> out;
  for (int i = 0; i < sys_->rank(); ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

std::vector<int> ParabolicSubset::positive_root_indices() const {
  std::vector<int> out;
  const auto& roots = sys_->positive_roots();
  for (size_t idx = 0; idx < roots.size(); ++idx) {
    bool supported = true;
    for (int i = 0; i < sys_->rank() && supported; ++i)
      if (roots[idx].coeffs[i] != 0 && !contains(i)) supported = false;
    if (supported) out.push_back(static_cast<int>(idx));
  }
  return out;
}

bool ParabolicSubset::operator==(const ParabolicSubset& other) const {
  check_same_system(sys_, other.sys_);
  return nodes_ == other.nodes_;
}

CosetRep::CosetRep(WeylElement e, ParabolicSubset p)
    : elem(std::move(e)), parabolic(std::move(p)) {
  check_same_system(elem.system(), parabolic.system());
  for (int i : parabolic.nodes())
    if (elem.has_right_descent(i))
      throw invalid_input_error("coset representative is not minimal");
}

CosetRep min_coset_rep(const WeylElement& w, const ParabolicSubset& P) {
  check_same_system(w.system(), P.system());
  IntMat m = w.action();
  const IntMat& cartan = w.system()->cartan();
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i : P.nodes())
      if (column_is_negative(m, i)) {
        right_mult_simple(m, cartan, i);
        stripped = true;
      }
  }
  return CosetRep(WeylElement::from_action(w.system(), std::move(m)), P);
}

WeylElement longest_element(const ParabolicSubset& P) {
  const auto& sys = P.system();
  IntMat m = IntMat::identity(sys->rank());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : P.nodes())
      if (!column_is_negative(m, i)) {
        right_mult_simple(m, sys->cartan(), i);
        grew = true;
      }
  }
  return WeylElement::from_action(sys, std::move(m));
}

std::pair<CosetRep, WeylElement> coset_decompose(const CosetRep& w,
                                                 const ParabolicSubset& Q) {
  check_same_system(w.parabolic.system(), Q.system());
  for (int i : w.parabolic.nodes())
    if (!Q.contains(i))
      throw invalid_input_error("coset_decompose requires S_P inside S_Q");
  CosetRep wq = min_coset_rep(w.elem, Q);
  WeylElement wqp = multiply(wq.elem.inverse(), w.elem);
  if (wq.elem.length() + wqp.length() != w.elem.length())
    throw internal_inconsistency_error("coset decomposition lengths do not add");
  return {std::move(wq), std::move(wqp)};
}

Int enumeration_limit() {
  if (const char* env = std::getenv("COADJOINT_WIDTH_MAX_ENUM")) {
    try {
      return Int(env);
    } catch (const std::exception&) {
      throw invalid_input_error("malformed COADJOINT_WIDTH_MAX_ENUM");
    }
  }
  return Int(1000000);
}

std::vector<WeylElement> enumerate_weyl_group(RootSystemPtr sys, bool force) {
  const Int order = weyl_group_order(*sys);
  if (!force && order > enumeration_limit()) {
    std::ostringstream os;
    os << "refusing to enumerate W(" << sys->label() << ") of order " << order
       << " (limit " << enumeration_limit() << ")";
    throw enumeration_guard_error(os.str());
  }
  // Orbit of the identity under right multiplication, deduplicated by
  // action matrix.
  std::map<std::vector<Int>, bool> seen;
  std::vector<IntMat> frontier{IntMat::identity(sys->rank())};
  seen[frontier.front().a] = true;
  std::vector<WeylElement> out;
  out.push_back(WeylElement::identity(sys));
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const IntMat& m : frontier)
      for (int i = 0; i < sys->rank(); ++i) {
        IntMat product = m;
        right_mult_simple(product, sys->cartan(), i);
        if (seen.emplace(product.a, true).second) {
          out.push_back(WeylElement::from_action(sys, product));
          next.push_back(std::move(product));
        }
      }
    frontier = std::move(next);
  }
  if (Int(out.size()) != order)
    throw internal_inconsistency_error("enumeration size disagrees with |W|");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coadwidth
