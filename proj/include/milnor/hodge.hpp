#pragma once

#include "milnor/arrangement.hpp"
#include "milnor/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace milnor {

/// beta = exp(2 pi i index / modulus).
struct Eigenvalue {
  Index index = 0;
  Index modulus = 1;

  std::string to_string() const { return std::to_string(index) + "/" + std::to_string(modulus); }
};

/// Classes of one cohomology group: Tate classes of type (p, p) keyed by p,
/// plus classes whose Hodge type is not known.
struct DegreePart {
  std::map<int, BigInt> typed;
  BigInt untyped{0};

  BigInt dim() const;
  bool empty() const { return dim() == 0; }
};

/// Eigenspace decomposition of the cohomology of a smooth variety of complex
/// dimension `dimension` under a finite-order operator whose eigenvalues lie
/// in mu_modulus.
class CohomologyTable {
 public:
  CohomologyTable(int dimension, Index modulus);

  int dimension() const { return dimension_; }
  Index modulus() const { return modulus_; }

  const DegreePart& part(Index eigen_index, int degree) const;
  BigInt dim(Index eigen_index, int degree) const { return part(eigen_index, degree).dim(); }
  BigInt total_dim(Index eigen_index) const;

  void add_typed(Index eigen_index, int degree, int p, const BigInt& count);
  void add_untyped(Index eigen_index, int degree, const BigInt& count);

  /// One line per nonzero (eigenvalue, degree) pair.
  std::string to_string() const;

 private:
  DegreePart& mutable_part(Index eigen_index, int degree);

  int dimension_;
  Index modulus_;
  std::vector<std::vector<DegreePart>> parts_;  // [eigen_index][degree]
};

/// Milnor fiber of G_n (n even): eigenvalues in mu_{n+2}.
CohomologyTable generic_factor_table(int n);

/// The torus (C^*)^{q-1}.
CohomologyTable torus_table(Index q);

/// Cohomology of the projective complement, pure of type (m, m) in degree m.
/// Requires an essential arrangement.
CohomologyTable projective_complement_table(const CentralArrangement& a);

/// H^*(T) (x) H^*(F_1)_beta (x) ... (x) H^*(F_q)_beta for beta in mu_{d_0},
/// d_0 = gcd(factor_sizes). Factor j must carry every eigenvalue of mu_{d_0}.
CohomologyTable product_table(const std::vector<CohomologyTable>& factors,
                              const std::vector<Index>& factor_sizes);

/// Milnor fiber of an essential arrangement, assembled from its irreducible
/// factors. Supported when d_0 = 1 or every factor is some G_n with n even;
/// otherwise throws PreconditionError.
CohomologyTable milnor_fiber_table(const CentralArrangement& a);

/// Every class has a known type (p, p).
bool tate_check(const CohomologyTable& t);

/// HD(t) with t = xy: each class of type (p, p) in H^m contributes
/// (-1)^m t^{dim - p}. Throws PreconditionError on untyped classes.
IntPolynomial e_polynomial(const CohomologyTable& t);

/// The only possible count polynomial of a Tate variety with this table.
IntPolynomial katz_candidate(const CohomologyTable& t);

/// Each eigenspace has alternating dimension sum equal to `chi`.
bool zeta_check(const CohomologyTable& t, const BigInt& chi);

}  // namespace milnor
