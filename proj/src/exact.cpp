#include "milnor/exact.hpp"

#include "milnor/error.hpp"

namespace milnor {

std::uint32_t mod_p(const Rational& value, std::uint32_t p) {
  const std::uint64_t num = mod_p(numerator_of(value), p);
  const std::uint64_t den = mod_p(denominator_of(value), p);
  if (den == 0) throw PreconditionError("denominator is not invertible modulo " + std::to_string(p));
  // Fermat inverse; p is prime.
  std::uint64_t inv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(num * inv % p);
}

RatVector RowSpace::reduce(RatVector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = v(pivot_[i]);
    if (f != 0) v -= f * basis_[i];
  }
  return v;
}

bool RowSpace::insert(const RatVector& v) {
  RatVector r = reduce(v);
  Index lead = 0;
  while (lead < r.size() && r(lead) == 0) ++lead;
  if (lead == r.size()) return false;
  r /= Rational(r(lead));
  basis_.push_back(std::move(r));
  pivot_.push_back(lead);
  return true;
}

}  // namespace milnor
