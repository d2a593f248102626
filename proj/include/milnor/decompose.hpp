#pragma once

#include "milnor/arrangement.hpp"

#include <vector>

namespace milnor {

/// Finest splitting A = A_1 x ... x A_q of an essential central arrangement.
///
/// With y_j = coordinate_maps[j] * x (the rows are the original normals that
/// form the basis of block j), the defining polynomial factors exactly as
///   Q(x) = scale * Q_1(y_1) * ... * Q_q(y_q),
/// where Q_j is the product of the canonical normals of factors[j].
struct Decomposition {
  std::vector<std::vector<Index>> blocks;  // ordered by smallest member
  std::vector<Index> factor_sizes;         // d_j
  std::vector<Index> block_ranks;          // ambient dimension of each factor
  Index gcd = 0;                           // d_0
  std::vector<CentralArrangement> factors;
  std::vector<IntMatrix> coordinate_maps;
  Rational scale{1};

  Index q() const { return static_cast<Index>(blocks.size()); }
  bool reducible() const { return q() > 1; }
};

/// Connected components of the linear matroid of the normals, found from the
/// fundamental circuits of one exact basis. Requires an essential
/// arrangement. Verifies the direct-sum rank condition and that every block
/// is irreducible; a failure there throws ConsistencyError.
Decomposition irreducible_decomposition(const CentralArrangement& a);

/// Order of the monodromy on the cohomology of the Milnor fiber: d_0.
Index monodromy_order(const CentralArrangement& a);

struct TrivialityWitness {
  bool trivial = false;
  Index q = 0;
  std::vector<Index> factor_sizes;
  Index d0 = 0;
  BigInt euler_characteristic;  // of the projective complement
  bool stv_reducible = false;   // euler_characteristic == 0
};

/// Decides d_0 == 1 and cross-checks reducibility against the vanishing
/// of the projective Euler characteristic. Disagreement throws
/// ConsistencyError.
TrivialityWitness is_monodromy_trivial(const CentralArrangement& a);

}  // namespace milnor
