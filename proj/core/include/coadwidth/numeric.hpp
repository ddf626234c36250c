#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace coadwidth {

// Exact arithmetic only. Lattice data lives in arbitrary-precision
// integers, everything else in rationals; no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Small dense square integer matrix, row-major. Ranks here never exceed 8.
struct IntMat {
  int n = 0;
  std::vector<Int> a;

  IntMat() = default;
  explicit IntMat(int size) : n(size), a(static_cast<size_t>(size) * size) {}

  static IntMat identity(int size);

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  bool is_identity() const;
  IntVec column(int j) const;

  bool operator==(const IntMat& other) const = default;
};

IntMat operator*(const IntMat& lhs, const IntMat& rhs);
IntVec operator*(const IntMat& m, const IntVec& v);

// Exact inverse of a unimodular matrix (all Weyl actions are). Throws
// invalid_input_error if the matrix is singular or the inverse is not
// integral.
IntMat inverse_unimodular(const IntMat& m);

// Solve m * x = b exactly over the rationals (m integer, nonsingular).
RatVec solve_rational(const IntMat& m, const RatVec& b);

// Rational I/O in the "p" / "p/q" wire format used by the CLI.
Rat parse_rational(const std::string& text);
std::string format_rational(const Rat& value);

}  // namespace coadwidth
