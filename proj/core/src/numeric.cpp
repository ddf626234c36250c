#include "coadwidth/numeric.hpp"

#include "coadwidth/errors.hpp"

#include <cctype>

namespace coadwidth {

IntMat IntMat::identity(int size) {
  IntMat m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMat::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntVec IntMat::column(int j) const {
  IntVec c(n);
  for (int i = 0; i < n; ++i) c[i] = at(i, j);
  return c;
}

IntMat operator*(const IntMat& lhs, const IntMat& rhs) {
  if (lhs.n != rhs.n) throw invalid_input_error("matrix dimension mismatch");
  IntMat out(lhs.n);
  for (int i = 0; i < lhs.n; ++i)
    for (int k = 0; k < lhs.n; ++k) {
      const Int& x = lhs.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < lhs.n; ++j) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

IntVec operator*(const IntMat& m, const IntVec& v) {
  if (static_cast<size_t>(m.n) != v.size())
    throw invalid_input_error("matrix/vector dimension mismatch");
  IntVec out(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

namespace {

// Gauss-Jordan over the rationals; returns the inverse columns applied to
// the identity (or to an arbitrary right-hand side).
std::vector<RatVec> solve_columns(const IntMat& m, std::vector<RatVec> rhs) {
  const int n = m.n;
  std::vector<RatVec> rows(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = Rat(m.at(i, j));

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw invalid_input_error("singular matrix");
    std::swap(rows[col], rows[pivot]);
    for (auto& b : rhs) std::swap(b[col], b[pivot]);
    const Rat inv = Rat(1) / rows[col][col];
    for (int j = 0; j < n; ++j) rows[col][j] *= inv;
    for (auto& b : rhs) b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      const Rat factor = rows[r][col];
      for (int j = 0; j < n; ++j) rows[r][j] -= factor * rows[col][j];
      for (auto& b : rhs) b[r] -= factor * b[col];
    }
  }
  return rhs;
}

}  // namespace

IntMat inverse_unimodular(const IntMat& m) {
  const int n = m.n;
  std::vector<RatVec> cols(n, RatVec(n));
  for (int j = 0; j < n; ++j) cols[j][j] = 1;
  cols = solve_columns(m, std::move(cols));
  IntMat inv(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const Rat& x = cols[j][i];
      if (denominator(x) != 1)
        throw invalid_input_error("matrix inverse is not integral");
      inv.at(i, j) = numerator(x);
    }
  return inv;
}

RatVec solve_rational(const IntMat& m, const RatVec& b) {
  if (static_cast<size_t>(m.n) != b.size())
    throw invalid_input_error("matrix/vector dimension mismatch");
  std::vector<RatVec> rhs{b};
  return solve_columns(m, std::move(rhs))[0];
}

Rat parse_rational(const std::string& text) {
  const auto bad = [&] {
    return invalid_input_error("malformed rational: '" + text + "'");
  };
  if (text.empty()) throw bad();
  const auto is_int = [&](const std::string& s) {
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) throw bad();
      return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw bad();
    const Int d(den);
    if (d == 0) throw bad();
    return Rat(Int(num), d);
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string format_rational(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) out += "/" + denominator(value).str();
  return out;
}

}  // namespace coadwidth
