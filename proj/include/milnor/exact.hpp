#pragma once

// Exact scalar types and dense exact linear algebra.
//
// All matrices are Eigen dense matrices over arbitrary-precision integers or
// rationals. Elimination routines are templated on the scalar so the same
// code serves both BigInt (fraction-free Bareiss) and Rational (plain
// Gauss-Jordan) callers.

#include "milnor/detail/boost_eigen_compat.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace milnor {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<BigInt>;
using RatVector = Vector<Rational>;

inline BigInt numerator_of(const Rational& r) { return BigInt(boost::multiprecision::numerator(r)); }
inline BigInt denominator_of(const Rational& r) {
  return BigInt(boost::multiprecision::denominator(r));
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}
inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return BigInt(0);
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

/// Residue of an integer modulo a machine-word prime, in [0, p).
inline std::uint32_t mod_p(const BigInt& value, std::uint32_t p) {
  BigInt r = value % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

/// Residue of a p-integral rational modulo p. The caller guarantees the
/// denominator is a unit mod p.
std::uint32_t mod_p(const Rational& value, std::uint32_t p);

/// Rescales a rational row to the primitive integer vector spanning the same
/// line, with positive leading nonzero entry. Returns the vector and the
/// scalar `s` with `row == s * result`.
template <typename Derived>
std::pair<IntVector, Rational> primitive_integer(const Eigen::MatrixBase<Derived>& row) {
  BigInt den_lcm(1);
  for (Index i = 0; i < row.size(); ++i) den_lcm = lcm(den_lcm, denominator_of(Rational(row(i))));
  IntVector out(row.size());
  BigInt g(0);
  for (Index i = 0; i < row.size(); ++i) {
    Rational scaled = Rational(row(i)) * Rational(den_lcm);
    out(i) = numerator_of(scaled);
    g = gcd(g, out(i));
  }
  if (g == 0) return {out, Rational(0)};
  Index lead = 0;
  while (out(lead) == 0) ++lead;
  if (out(lead) < 0) g = -g;
  for (Index i = 0; i < out.size(); ++i) out(i) /= g;
  return {out, Rational(g) / Rational(den_lcm)};
}

/// Reduced row echelon form over the rationals.
struct Echelon {
  RatMatrix reduced;          // same shape as the input
  std::vector<Index> pivots;  // pivot column of each nonzero row, increasing

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
Echelon row_reduce(const Eigen::MatrixBase<Derived>& input) {
  Echelon e;
  e.reduced = input.template cast<Rational>();
  RatMatrix& m = e.reduced;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(m).rank();
}

/// Determinant of a square integer matrix by fraction-free Bareiss
/// elimination; every intermediate value is an exact minor.
template <typename Derived>
BigInt determinant(const Eigen::MatrixBase<Derived>& input) {
  IntMatrix m = input.template cast<BigInt>();
  const Index n = m.rows();
  if (n == 0) return BigInt(1);
  BigInt sign(1);
  BigInt prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return BigInt(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Incremental row space of rational vectors, kept in reduced form so that
/// membership is a single reduction pass.
class RowSpace {
 public:
  explicit RowSpace(Index ambient) : ambient_(ambient) {}

  Index ambient() const { return ambient_; }
  Index dimension() const { return static_cast<Index>(basis_.size()); }

  bool contains(const RatVector& v) const { return reduce(v).isZero(); }

  /// Adds `v`; returns false when it was already in the span.
  bool insert(const RatVector& v);

 private:
  RatVector reduce(RatVector v) const;

  Index ambient_;
  std::vector<RatVector> basis_;  // basis_[i](pivot_[i]) == 1
  std::vector<Index> pivot_;
};

}  // namespace milnor
