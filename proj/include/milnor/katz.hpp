#pragma once

#include "milnor/ffcount.hpp"
#include "milnor/polynomial.hpp"

#include <set>
#include <string>
#include <vector>

namespace milnor {

struct Verdict {
  std::uint32_t p = 0;
  BigInt counted;
  BigInt predicted;
  bool match = false;
  unsigned counted_mod8 = 0;
  unsigned predicted_mod8 = 0;
};

struct Report {
  IntPolynomial candidate;
  std::vector<Verdict> verdicts;

  bool falsified() const;
  std::vector<std::uint32_t> falsifying_primes() const;
  /// "consistent-so-far" or "falsified at {89,97}".
  std::string conclusion() const;
};

/// Compares counts at good primes with the candidate count polynomial.
/// Throws PreconditionError for a count taken at a prime in `bad`.
Report polynomial_count_check(const std::vector<CountResult>& counts, const IntPolynomial& candidate,
                              const std::set<BigInt>& bad);

/// The degree-7 Katz candidate of the G_2 x G_4 Milnor fiber.
IntPolynomial a11_candidate();

struct Mod8Obstruction {
  std::uint32_t p = 0;
  BigInt k;                       // p = 4k + 3
  SymmetricCount counts;
  BigInt predicted;               // P_F(p)
  bool predicted_divisible_by_8 = false;  // via the closed form in k, as an identity
  bool fibers_divisible_by_4 = false;     // n1' = n2' = 0 mod 4
  bool count_not_divisible_by_8 = false;  // A(p) != 0 mod 8
};

/// The polynomial identity P_F(4k + 3) = 8 (2k + 1)(1024k^6 + 2560k^5 +
/// 2752k^4 + 1632k^3 + 584k^2 + 129k + 15), checked by exact expansion.
bool mod8_identity_holds();

/// Requires p = 11 mod 12.
Mod8Obstruction mod8_obstruction(std::uint32_t p, const CountOptions& opts = {});

struct Rk2Row {
  std::uint32_t p = 0;
  BigInt count;
  BigInt predicted;
  bool match = false;
};

/// The eleven primes of the published comparison table.
std::vector<std::uint32_t> rk2_primes();

/// Factored fast-path counts of the G_2 x G_4 Milnor fiber against the
/// candidate polynomial.
std::vector<Rk2Row> reproduce_rk2(const std::vector<std::uint32_t>& primes, const CountOptions& opts = {});

/// "p count predicted match count_mod8 predicted_mod8" rows.
std::string format_verdicts(const Report& report);

}  // namespace milnor
