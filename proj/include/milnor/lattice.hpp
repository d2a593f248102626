#pragma once

#include "milnor/arrangement.hpp"
#include "milnor/polynomial.hpp"

#include <vector>

namespace milnor {

/// An intersection of hyperplanes, identified by the closed set of all
/// hyperplanes containing it.
struct Flat {
  std::vector<Index> members;  // sorted
  Index rank = 0;              // codimension of the intersection

  /// True when this flat lies above `other` (other.members is a subset).
  bool contains(const Flat& other) const;
};

/// Flats ordered by rank (ties broken lexicographically on members) with
/// mobius[i] = mu(0, flats[i]).
class IntersectionLattice {
 public:
  IntersectionLattice(Index ambient_dim, Index hyperplane_count, std::vector<Flat> flats);

  Index ambient_dim() const { return ambient_dim_; }
  Index hyperplane_count() const { return hyperplane_count_; }
  /// Rank of the top flat.
  Index rank() const { return flats_.back().rank; }
  bool essential() const { return rank() == ambient_dim_; }

  const std::vector<Flat>& flats() const { return flats_; }
  const std::vector<BigInt>& mobius() const { return mobius_; }
  std::size_t size() const { return flats_.size(); }

 private:
  Index ambient_dim_;
  Index hyperplane_count_;
  std::vector<Flat> flats_;
  std::vector<BigInt> mobius_;
};

/// Breadth-first closure of intersections, rank level by rank level.
IntersectionLattice build_lattice(const CentralArrangement& a);

/// chi(t) = sum over flats of mu(X) t^{dim X}. Requires an essential
/// arrangement.
IntPolynomial characteristic_polynomial(const IntersectionLattice& lattice);

/// chi(t) / (t - 1): the count polynomial of the projective complement.
IntPolynomial projective_count_polynomial(const IntersectionLattice& lattice);

/// Euler characteristic of the projective complement (the projective count
/// polynomial at t = 1). Zero exactly for reducible arrangements.
BigInt projective_euler_characteristic(const IntersectionLattice& lattice);

/// Betti numbers b_0..b_n of a projective complement from its count
/// polynomial of degree n: b_m = (-1)^m [t^{n-m}] P. Throws
/// PreconditionError unless the coefficients strictly alternate in sign.
std::vector<BigInt> betti_from_count_poly(const IntPolynomial& count);

}  // namespace milnor
