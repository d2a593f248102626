#include "milnor/polynomial.hpp"

#include "milnor/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace milnor {

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, std::size_t degree) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPolynomial::operator()(const BigInt& t) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += IntPolynomial(std::vector<BigInt>{*it});
  }
  return acc;
}

IntPolynomial IntPolynomial::divide_by_linear(const BigInt& root) const {
  if (coeffs_.empty()) return {};
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt carry(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    BigInt value = coeffs_[i] + carry * root;
    if (i == 0) {
      if (value != 0) throw ConsistencyError("division by (t - root) is not exact");
    } else {
      q[i - 1] = value;
    }
    carry = value;
  }
  return IntPolynomial(std::move(q));
}

int IntPolynomial::root_multiplicity(const BigInt& root) const {
  if (is_zero()) return -1;
  int mult = 0;
  IntPolynomial cur = *this;
  while (cur(root) == 0) {
    cur = cur.divide_by_linear(root);
    ++mult;
  }
  return mult;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << (c < 0 ? '-' : '+');
    const BigInt mag = boost::multiprecision::abs(c);
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt r(1);
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace milnor
