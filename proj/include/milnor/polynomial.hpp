#pragma once

#include "milnor/exact.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace milnor {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> ascending);
  explicit IntPolynomial(std::vector<BigInt> ascending);

  static IntPolynomial monomial(BigInt coefficient, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^k; zero past the degree.
  BigInt coefficient(std::size_t k) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt operator()(const BigInt& t) const;

  /// Substitution `this(inner(t))`.
  IntPolynomial compose(const IntPolynomial& inner) const;

  /// Exact quotient by (t - root). Throws ConsistencyError when the
  /// remainder is nonzero.
  IntPolynomial divide_by_linear(const BigInt& root) const;

  /// Multiplicity of `root` as a root (0 when it is not a root). The zero
  /// polynomial reports -1.
  int root_multiplicity(const BigInt& root) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Ascending-degree text with an explicit sign on every term, e.g.
  /// "+3 -3t +t^2". The zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

BigInt binomial(long long n, long long k);

}  // namespace milnor
