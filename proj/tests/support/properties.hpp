#pragma once

// Seeded property sweeps shared by the unit suite and the acceptance binary.
// Each sweep reports how many cases it checked and describes every failure.

#include "milnor/decompose.hpp"
#include "milnor/error.hpp"
#include "milnor/ffcount.hpp"
#include "milnor/hodge.hpp"
#include "milnor/katz.hpp"
#include "milnor/lattice.hpp"
#include "milnor/spectrum2d.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace milnor::testing {

struct SweepSummary {
  int arrangements = 0;
  int checks = 0;
  int skipped = 0;  // prime or case where the compared method does not apply
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition) failures.push_back(what);
  }
};

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  return primes;
}

inline std::string describe(const CentralArrangement& a, std::uint32_t p) {
  return serialize_arrangement(a) + " p=" + std::to_string(p);
}

/// Brute-force fiber count against the factored count, and complement
/// counts against chi(p) and chi(p)/(p - 1) at good primes.
inline SweepSummary oracle_equivalence_sweep(std::uint64_t seed, int arrangements) {
  SweepSummary s;
  Rng rng(seed);
  for (int i = 0; i < arrangements; ++i) {
    const auto a = random_arrangement(rng, {4, 7});
    ++s.arrangements;
    const auto dec = irreducible_decomposition(a);
    const auto chi = characteristic_polynomial(build_lattice(a));
    const auto projective = chi.divide_by_linear(BigInt(1));
    const auto bad = bad_primes(a);
    for (std::uint32_t p : small_primes()) {
      const PrimeField field(p);
      const BigInt brute = count_milnor_fiber_bruteforce(a, field).value;
      try {
        s.expect(count_milnor_fiber_factored(dec, field).value == brute, "factored " + describe(a, p));
      } catch (const PreconditionError&) {
        ++s.skipped;
      }
      s.expect(brute == BigInt(naive_level_count(a, p, 1)), "naive fiber " + describe(a, p));
      if (bad.count(BigInt(p))) {
        ++s.skipped;
        continue;
      }
      s.expect(count_affine_complement(a, field).value == chi(BigInt(p)), "affine " + describe(a, p));
      s.expect(BigInt(naive_projective_complement(a, p)) == projective(BigInt(p)), "projective " + describe(a, p));
    }
  }
  return s;
}

/// Reducible <=> spectrum on (0, 1) vanishes <=> (t - 1)^2 divides chi.
inline SweepSummary line_arrangement_sweep(std::uint64_t seed, int arrangements) {
  SweepSummary s;
  Rng rng(seed);
  int reducible_seen = 0;
  for (int i = 0; i < arrangements; ++i) {
    const auto a = random_line_arrangement(rng, 8);
    ++s.arrangements;
    const bool reducible = irreducible_decomposition(a).reducible();
    const bool vanishes = spectrum_unit_interval(a).vanishes();
    const bool double_root = characteristic_polynomial(build_lattice(a)).root_multiplicity(BigInt(1)) >= 2;
    reducible_seen += reducible ? 1 : 0;
    std::ostringstream what;
    what << serialize_arrangement(a) << " reducible=" << reducible << " vanishes=" << vanishes
         << " double_root=" << double_root;
    s.expect(reducible == vanishes && vanishes == double_root, what.str());
    try {
      s.expect(line_arrangement_report(a).all_agree(), "report " + what.str());
    } catch (const ConsistencyError& e) {
      s.expect(false, std::string("report threw: ") + e.what());
    }
  }
  // Both sides of the equivalence must be exercised.
  s.expect(reducible_seen > 0 && reducible_seen < arrangements, "sweep lacks reducible or irreducible cases");
  return s;
}

/// With d_0 = 1 the fiber has polynomial count P_M(t) = chi(t) / (t - 1).
inline SweepSummary trivial_monodromy_sweep(std::uint64_t seed, int arrangements) {
  SweepSummary s;
  Rng rng(seed);
  for (int i = 0; i < arrangements; ++i) {
    const auto a = random_arrangement(rng, {4, 7});
    if (monodromy_order(a) != 1) continue;
    ++s.arrangements;
    const auto polynomial = projective_count_polynomial(build_lattice(a));
    const auto bad = bad_primes(a);
    std::vector<CountResult> counts;
    for (std::uint32_t p : small_primes()) {
      if (bad.count(BigInt(p))) {
        ++s.skipped;
        continue;
      }
      const auto count = count_milnor_fiber_bruteforce(a, PrimeField(p));
      s.expect(count.value == polynomial(BigInt(p)), describe(a, p));
      counts.push_back(count);
    }
    s.expect(!polynomial_count_check(counts, polynomial, bad).falsified(), "katz " + serialize_arrangement(a));
  }
  return s;
}

/// Every table the hodge module builds: fixed families plus the fibers and
/// complements of random arrangements where the tables are defined.
inline std::vector<std::pair<CohomologyTable, BigInt>> hodge_tables(std::uint64_t seed, int arrangements) {
  std::vector<std::pair<CohomologyTable, BigInt>> out;
  for (Index q = 1; q <= 4; ++q) out.emplace_back(torus_table(q), BigInt(q == 1 ? 1 : 0));
  for (int n : {2, 4, 6}) out.emplace_back(generic_factor_table(n), BigInt(1));
  // chi of a product is the product of the factor polynomials; the large
  // families are too big for a direct lattice.
  const auto chi2 = characteristic_polynomial(build_lattice(generic_arrangement(2)));
  const auto chi4 = characteristic_polynomial(build_lattice(generic_arrangement(4)));
  for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 0}, {0, 2}}) {
    IntPolynomial chi{1};
    for (int i = 0; i < u; ++i) chi *= chi2;
    for (int i = 0; i < v; ++i) chi *= chi4;
    const BigInt euler = chi.divide_by_linear(BigInt(1))(BigInt(1));
    const auto a = product_of_generic(u, v);
    out.emplace_back(milnor_fiber_table(a), euler);
    if (u + v <= 2) out.emplace_back(projective_complement_table(a), euler);
  }
  const auto g2 = generic_factor_table(2);
  const auto g6 = generic_factor_table(6);
  out.emplace_back(product_table({g2, g6}, {4, 8}), BigInt(0));
  Rng rng(seed);
  for (int i = 0; i < arrangements; ++i) {
    const auto a = random_arrangement(rng, {4, 7});
    const BigInt chi = projective_euler_characteristic(build_lattice(a));
    out.emplace_back(projective_complement_table(a), chi);
    if (monodromy_order(a) == 1) out.emplace_back(milnor_fiber_table(a), chi);
  }
  return out;
}

inline SweepSummary zeta_sweep(std::uint64_t seed, int arrangements) {
  SweepSummary s;
  for (const auto& [table, chi] : hodge_tables(seed, arrangements)) {
    ++s.arrangements;
    s.expect(zeta_check(table, chi), table.to_string());
  }
  return s;
}

}  // namespace milnor::testing
