#include "milnor/hodge.hpp"

#include "milnor/decompose.hpp"
#include "milnor/error.hpp"
#include "milnor/lattice.hpp"

#include <numeric>
#include <sstream>

namespace milnor {

BigInt DegreePart::dim() const {
  BigInt total = untyped;
  for (const auto& [p, count] : typed) total += count;
  return total;
}

CohomologyTable::CohomologyTable(int dimension, Index modulus) : dimension_(dimension), modulus_(modulus) {
  if (dimension < 0) throw PreconditionError("negative dimension");
  if (modulus < 1) throw PreconditionError("eigenvalue modulus must be positive");
  parts_.assign(static_cast<std::size_t>(modulus), std::vector<DegreePart>(static_cast<std::size_t>(dimension) + 1));
}

const DegreePart& CohomologyTable::part(Index eigen_index, int degree) const {
  if (eigen_index < 0 || eigen_index >= modulus_ || degree < 0 || degree > dimension_) {
    throw PreconditionError("cohomology index out of range");
  }
  return parts_[static_cast<std::size_t>(eigen_index)][static_cast<std::size_t>(degree)];
}

DegreePart& CohomologyTable::mutable_part(Index eigen_index, int degree) {
  return const_cast<DegreePart&>(part(eigen_index, degree));
}

BigInt CohomologyTable::total_dim(Index eigen_index) const {
  BigInt total(0);
  for (int m = 0; m <= dimension_; ++m) total += dim(eigen_index, m);
  return total;
}

void CohomologyTable::add_typed(Index eigen_index, int degree, int p, const BigInt& count) {
  if (p < 0 || p > degree) throw PreconditionError("Tate weight outside 0..degree");
  if (count == 0) return;
  mutable_part(eigen_index, degree).typed[p] += count;
}

void CohomologyTable::add_untyped(Index eigen_index, int degree, const BigInt& count) {
  mutable_part(eigen_index, degree).untyped += count;
}

std::string CohomologyTable::to_string() const {
  std::ostringstream os;
  for (Index k = 0; k < modulus_; ++k) {
    for (int m = 0; m <= dimension_; ++m) {
      const DegreePart& part = this->part(k, m);
      if (part.empty()) continue;
      os << "beta=" << Eigenvalue{k, modulus_}.to_string() << " H^" << m << " dim=" << part.dim();
      for (const auto& [p, count] : part.typed) os << " (" << p << ',' << p << ")x" << count;
      if (part.untyped != 0) os << " untyped x" << part.untyped;
      os << '\n';
    }
  }
  return os.str();
}

CohomologyTable generic_factor_table(int n) {
  if (n < 2 || n % 2) throw PreconditionError("generic factor tables are known only for even n >= 2");
  const Index modulus = n + 2;
  CohomologyTable t(n, modulus);
  for (int m = 0; m <= n; ++m) t.add_typed(0, m, m, binomial(n + 1, m));
  for (Index k = 1; k < modulus; ++k) {
    if (2 * k == modulus) {
      t.add_typed(k, n, n / 2, BigInt(1));
    } else {
      t.add_untyped(k, n, BigInt(1));
    }
  }
  return t;
}

CohomologyTable torus_table(Index q) {
  if (q < 1) throw PreconditionError("torus table needs q >= 1");
  const int dim = static_cast<int>(q - 1);
  CohomologyTable t(dim, 1);
  for (int k = 0; k <= dim; ++k) t.add_typed(0, k, k, binomial(dim, k));
  return t;
}

CohomologyTable projective_complement_table(const CentralArrangement& a) {
  const auto betti = betti_from_count_poly(projective_count_polynomial(build_lattice(a)));
  const int dim = static_cast<int>(betti.size()) - 1;
  CohomologyTable t(dim, 1);
  for (int m = 0; m <= dim; ++m) t.add_typed(0, m, m, betti[static_cast<std::size_t>(m)]);
  return t;
}

namespace {

// Graded tensor product of the eigen_a part of `a` with the eigen_b part of
// `b`, written into eigenvalue `target` of `out`.
void tensor_into(const CohomologyTable& a, Index eigen_a, const CohomologyTable& b, Index eigen_b,
                 CohomologyTable& out, Index target) {
  for (int ma = 0; ma <= a.dimension(); ++ma) {
    const DegreePart& pa = a.part(eigen_a, ma);
    if (pa.empty()) continue;
    for (int mb = 0; mb <= b.dimension(); ++mb) {
      const DegreePart& pb = b.part(eigen_b, mb);
      if (pb.empty()) continue;
      const int m = ma + mb;
      for (const auto& [p, ca] : pa.typed) {
        for (const auto& [q, cb] : pb.typed) out.add_typed(target, m, p + q, ca * cb);
      }
      // A product class is typed only when both tensor factors are.
      const BigInt da = pa.dim(), db = pb.dim();
      const BigInt untyped = da * db - (da - pa.untyped) * (db - pb.untyped);
      if (untyped != 0) out.add_untyped(target, m, untyped);
    }
  }
}

}  // namespace

CohomologyTable product_table(const std::vector<CohomologyTable>& factors, const std::vector<Index>& factor_sizes) {
  if (factors.empty() || factors.size() != factor_sizes.size()) {
    throw PreconditionError("need one factor size per factor table");
  }
  Index d0 = 0;
  for (Index s : factor_sizes) d0 = std::gcd(d0, s);
  for (const auto& f : factors) {
    if (f.modulus() % d0 != 0) {
      throw PreconditionError("factor table with eigenvalues in mu_" + std::to_string(f.modulus()) +
                              " does not carry mu_" + std::to_string(d0));
    }
  }
  CohomologyTable acc = torus_table(static_cast<Index>(factors.size()));
  // Lift the torus (eigenvalue 1 only) to modulus d0.
  CohomologyTable lifted(acc.dimension(), d0);
  for (Index k = 0; k < d0; ++k) {
    for (int m = 0; m <= acc.dimension(); ++m) {
      for (const auto& [p, c] : acc.part(0, m).typed) lifted.add_typed(k, m, p, c);
    }
  }
  acc = std::move(lifted);
  for (const auto& f : factors) {
    CohomologyTable next(acc.dimension() + f.dimension(), d0);
    const Index stride = f.modulus() / d0;
    for (Index k = 0; k < d0; ++k) tensor_into(acc, k, f, k * stride, next, k);
    acc = std::move(next);
  }
  return acc;
}

CohomologyTable milnor_fiber_table(const CentralArrangement& a) {
  const Decomposition dec = irreducible_decomposition(a);
  std::vector<CohomologyTable> tables;
  for (std::size_t j = 0; j < dec.factors.size(); ++j) {
    const CentralArrangement& f = dec.factors[j];
    const Index r = dec.block_ranks[j];
    if (dec.gcd == 1) {
      tables.push_back(projective_complement_table(f));
    } else if (f.size() == r + 1 && r >= 3 && (r - 1) % 2 == 0) {
      // An irreducible arrangement of r + 1 hyperplanes in C^r is generic,
      // hence linearly equivalent to G_{r-1}.
      tables.push_back(generic_factor_table(static_cast<int>(r - 1)));
    } else {
      throw PreconditionError("no Hodge data for factor " + std::to_string(j) + " (" + std::to_string(f.size()) +
                              " hyperplanes in C^" + std::to_string(r) + ") when d0 = " + std::to_string(dec.gcd));
    }
  }
  return product_table(tables, dec.factor_sizes);
}

bool tate_check(const CohomologyTable& t) {
  for (Index k = 0; k < t.modulus(); ++k) {
    for (int m = 0; m <= t.dimension(); ++m) {
      if (t.part(k, m).untyped != 0) return false;
    }
  }
  return true;
}

IntPolynomial e_polynomial(const CohomologyTable& t) {
  if (!tate_check(t)) throw PreconditionError("E-polynomial needs every class typed");
  IntPolynomial hd;
  for (Index k = 0; k < t.modulus(); ++k) {
    for (int m = 0; m <= t.dimension(); ++m) {
      for (const auto& [p, count] : t.part(k, m).typed) {
        hd += IntPolynomial::monomial(m % 2 ? BigInt(-count) : count, static_cast<std::size_t>(t.dimension() - p));
      }
    }
  }
  return hd;
}

IntPolynomial katz_candidate(const CohomologyTable& t) { return e_polynomial(t); }

bool zeta_check(const CohomologyTable& t, const BigInt& chi) {
  for (Index k = 0; k < t.modulus(); ++k) {
    BigInt sum(0);
    for (int m = 0; m <= t.dimension(); ++m) {
      if (m % 2) {
        sum -= t.dim(k, m);
      } else {
        sum += t.dim(k, m);
      }
    }
    if (sum != chi) return false;
  }
  return true;
}

}  // namespace milnor
