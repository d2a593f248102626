#pragma once

#include "milnor/arrangement.hpp"
#include "milnor/decompose.hpp"
#include "milnor/error.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace milnor {

/// F_p with lookup tables for Legendre symbols, inverses and discrete logs
/// to a fixed generator. Read-only after construction.
class PrimeField {
 public:
  /// Throws PreconditionError unless p is a prime below 2^24.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t generator() const { return generator_; }

  int legendre(std::uint32_t a) const { return legendre_[a % p_]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  /// Exponent e in [0, p-1) with generator^e = a; a != 0.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  /// generator^e for e in [0, p-1).
  std::uint32_t power(std::uint32_t e) const { return power_[e % (p_ - 1)]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

 private:
  std::uint32_t p_;
  std::uint32_t generator_ = 1;
  std::vector<std::int8_t> legendre_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> power_;
};

bool is_prime(std::uint64_t n);

/// Legendre symbol (a / p) in {-1, 0, +1}.
int legendre(std::uint32_t a, const PrimeField& field);

struct CountOptions {
  /// Maximum number of field evaluations for one call.
  std::uint64_t budget = 1'000'000'000;
  unsigned threads = 1;
};

enum class CountMethod { brute, factored, fast };
std::string to_string(CountMethod m);
CountMethod parse_count_method(const std::string& name);

struct CountResult {
  std::uint32_t p = 0;
  BigInt value;
  CountMethod method = CountMethod::brute;
};

/// Splits [lo, hi) into `threads` contiguous ranges and sums fn(lo', hi')
/// over them. Partial sums are independent, so the split does not change
/// the total.
template <typename RangeFn>
std::uint64_t partitioned_sum(std::uint32_t lo, std::uint32_t hi, unsigned threads, RangeFn&& fn) {
  if (threads <= 1 || hi - lo < 2) return fn(lo, hi);
  threads = std::min<unsigned>(threads, hi - lo);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  const std::uint32_t step = (hi - lo + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint32_t a = lo + t * step;
    const std::uint32_t b = std::min(hi, a + step);
    if (a >= b) break;
    pool.emplace_back([&, t, a, b] { partial[t] = fn(a, b); });
  }
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (std::uint64_t s : partial) total += s;
  return total;
}

/// Throws BudgetError when p^dim exceeds the budget.
void check_budget(std::uint32_t p, Index dim, std::uint64_t budget);

/// Number of x in F_p^dim with pred(x) true, by full enumeration. The first
/// coordinate is the partitioned outer loop.
template <typename Predicate>
std::uint64_t count_solutions(Index dim, const PrimeField& field, Predicate&& pred, const CountOptions& opts = {}) {
  const std::uint32_t p = field.p();
  check_budget(p, dim, opts.budget);
  return partitioned_sum(0, p, opts.threads, [&](std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> x(static_cast<std::size_t>(dim), 0);
    std::uint64_t hits = 0;
    for (std::uint32_t x0 = lo; x0 < hi; ++x0) {
      x.assign(x.size(), 0);
      x[0] = x0;
      while (true) {
        if (pred(std::span<const std::uint32_t>(x))) ++hits;
        Index c = dim - 1;
        while (c > 0 && ++x[static_cast<std::size_t>(c)] == p) x[static_cast<std::size_t>(c--)] = 0;
        if (c == 0) break;
      }
    }
    return hits;
  });
}

/// Canonical normals reduced mod p, row-major [hyperplane][coordinate].
struct ModularForms {
  Index dim = 0;
  Index count = 0;
  std::vector<std::uint32_t> coeffs;

  ModularForms(const IntMatrix& normals, std::uint32_t p);
};

/// |{x in F_p^{n+1} : Q(x) != 0}| by enumeration; equals chi_A(p) at good
/// primes.
CountResult count_affine_complement(const CentralArrangement& a, const PrimeField& field,
                                    const CountOptions& opts = {});

/// |{x in F_p^{n+1} : Q(x) = 1}| by enumeration, Q the product of the
/// canonical normals.
CountResult count_milnor_fiber_bruteforce(const CentralArrangement& a, const PrimeField& field,
                                          const CountOptions& opts = {});

enum class FiberBackend {
  automatic,  // quadratic fast path for generic factors, enumeration otherwise
  brute,
};

/// n(a) = |{y : Q(y) = a}| for one representative a = generator^c of each
/// coset c of (F_p^*)^{d} in F_p^*, where there are gcd(d, p - 1) cosets.
struct FiberCountTable {
  Index factor = 0;
  Index degree = 0;
  std::uint32_t p = 0;
  std::vector<std::uint64_t> counts;  // counts[c] = n(generator^c)
  bool used_fast_path = false;

  std::uint32_t cosets() const { return static_cast<std::uint32_t>(counts.size()); }
  /// n(a) for any a != 0, through its coset.
  std::uint64_t at(std::uint32_t a, const PrimeField& field) const {
    return counts[field.log(a) % counts.size()];
  }
};

FiberCountTable factor_fiber_counts(const CentralArrangement& factor, Index degree, const PrimeField& field,
                                    FiberBackend backend = FiberBackend::automatic,
                                    const CountOptions& opts = {}, Index factor_index = 0);

/// Milnor fiber count as a convolution over F_p^* of the factor fiber
/// tables: the number of tuples (a_1..a_q) with prod a_j = 1 / scale,
/// weighted by prod n_j(a_j). Throws PreconditionError when the coordinate
/// change of the decomposition degenerates mod p.
CountResult count_milnor_fiber_factored(const Decomposition& dec, const PrimeField& field,
                                        FiberBackend backend = FiberBackend::automatic,
                                        const CountOptions& opts = {});

/// Fiber counts of the G_2 x G_4 example for p = 11 mod 12; primes mark the
/// value at 1, double primes at a non-square.
struct SymmetricCount {
  std::uint32_t p = 0;
  std::uint64_t n1p = 0, n1pp = 0, n2p = 0, n2pp = 0;
  BigInt total;  // ((p - 1) / 2) (n1p n2p + n1pp n2pp)
};

SymmetricCount symmetric_fiber_count(const PrimeField& field, const CountOptions& opts = {});

/// Primes dividing some nonzero minor of the normal matrix.
std::set<BigInt> bad_primes(const CentralArrangement& a);

}  // namespace milnor
