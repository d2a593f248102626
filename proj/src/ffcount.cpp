#include "milnor/ffcount.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace milnor {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 24) || !is_prime(p)) throw PreconditionError(std::to_string(p) + " is not a supported prime");
  legendre_.assign(p, -1);
  legendre_[0] = 0;
  for (std::uint64_t x = 1; x < p; ++x) legendre_[x * x % p] = 1;

  inverse_.assign(p, 0);
  for (std::uint32_t a = 1; a < p; ++a) {
    if (inverse_[a]) continue;
    for (std::uint32_t b = a; b < p; ++b) {
      if (std::uint64_t{a} * b % p == 1) {
        inverse_[a] = b;
        inverse_[b] = a;
        break;
      }
    }
  }

  // Smallest generator: order p - 1, tested against the prime divisors of p - 1.
  std::vector<std::uint32_t> divisors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    divisors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) divisors.push_back(m);
  auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::uint32_t g = 1; g < p; ++g) {
    bool ok = true;
    for (std::uint32_t q : divisors) ok = ok && pow_mod(g, (p - 1) / q) != 1;
    if (ok) {
      generator_ = g;
      break;
    }
  }

  log_.assign(p, 0);
  power_.assign(p - 1, 0);
  std::uint64_t x = 1;
  for (std::uint32_t e = 0; e + 1 < p; ++e) {
    power_[e] = static_cast<std::uint32_t>(x);
    log_[x] = e;
    x = x * generator_ % p;
  }
}

int legendre(std::uint32_t a, const PrimeField& field) { return field.legendre(a); }

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::factored: return "factored";
    case CountMethod::fast: return "fast";
  }
  return "?";
}

CountMethod parse_count_method(const std::string& name) {
  if (name == "brute") return CountMethod::brute;
  if (name == "factored") return CountMethod::factored;
  if (name == "fast") return CountMethod::fast;
  throw PreconditionError("unknown count method '" + name + "'");
}

void check_budget(std::uint32_t p, Index dim, std::uint64_t budget) {
  unsigned __int128 total = 1;
  for (Index i = 0; i < dim; ++i) {
    total *= p;
    if (total > budget) {
      throw BudgetError("enumerating " + std::to_string(p) + "^" + std::to_string(dim) +
                        " points exceeds the budget of " + std::to_string(budget) + " evaluations");
    }
  }
}

ModularForms::ModularForms(const IntMatrix& normals, std::uint32_t p)
    : dim(normals.cols()), count(normals.rows()), coeffs(static_cast<std::size_t>(dim * count)) {
  for (Index i = 0; i < count; ++i) {
    for (Index c = 0; c < dim; ++c) coeffs[static_cast<std::size_t>(i * dim + c)] = mod_p(normals(i, c), p);
  }
}

namespace {

// Runs fn(t, lo', hi') on `threads` disjoint contiguous slices of [lo, hi).
void for_each_slice(std::uint32_t lo, std::uint32_t hi, unsigned threads,
                    const std::function<void(unsigned, std::uint32_t, std::uint32_t)>& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, hi > lo ? hi - lo : 1));
  if (threads == 1) {
    fn(0, lo, hi);
    return;
  }
  const std::uint32_t step = (hi - lo + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint32_t a = std::min(hi, lo + t * step), b = std::min(hi, a + step);
    pool.emplace_back([&fn, t, a, b] { fn(t, a, b); });
  }
  for (auto& th : pool) th.join();
}

// Visits Q(x) = prod of the forms for every x in F_p^dim with x_0 in
// [lo, hi). Form values are updated incrementally: bumping coordinate c by
// one adds column c, including the wrap from p - 1 to 0.
template <typename Visit>
void enumerate_products(const ModularForms& forms, const PrimeField& field, std::uint32_t lo, std::uint32_t hi,
                        Visit&& visit) {
  const std::uint32_t p = field.p();
  const auto dim = static_cast<std::size_t>(forms.dim);
  const auto count = static_cast<std::size_t>(forms.count);
  std::vector<std::uint32_t> x(dim), vals(count);
  for (std::uint32_t x0 = lo; x0 < hi; ++x0) {
    std::fill(x.begin(), x.end(), 0);
    x[0] = x0;
    for (std::size_t i = 0; i < count; ++i) vals[i] = field.mul(forms.coeffs[i * dim], x0);
    while (true) {
      std::uint32_t q = 1;
      for (std::size_t i = 0; i < count && q; ++i) q = field.mul(q, vals[i]);
      visit(q);
      std::size_t c = dim - 1;
      while (c > 0) {
        for (std::size_t i = 0; i < count; ++i) vals[i] = field.add(vals[i], forms.coeffs[i * dim + c]);
        if (++x[c] < p) break;
        x[c--] = 0;
      }
      if (c == 0) break;
    }
  }
}

std::uint64_t count_products(const CentralArrangement& a, const PrimeField& field, const CountOptions& opts,
                             bool fiber) {
  check_budget(field.p(), a.ambient_dim(), opts.budget);
  const ModularForms forms(a.normals(), field.p());
  return partitioned_sum(0, field.p(), opts.threads, [&](std::uint32_t lo, std::uint32_t hi) {
    std::uint64_t hits = 0;
    enumerate_products(forms, field, lo, hi, [&](std::uint32_t q) { hits += fiber ? q == 1 : q != 0; });
    return hits;
  });
}

// Coordinates in which a generic factor (r + 1 hyperplanes in C^r, any r of
// them independent) reads y_0 ... y_{r-1} (lambda_0 y_0 + ... ). Empty when
// the factor has another shape or the chart degenerates mod p.
std::vector<std::uint32_t> generic_chart(const CentralArrangement& f, std::uint32_t p) {
  const Index r = f.ambient_dim();
  if (p == 2 || r < 2 || f.size() != r + 1) return {};
  const IntMatrix basis = f.normals().topRows(r);
  if (mod_p(determinant(basis), p) == 0) return {};
  RatMatrix system(r, r + 1);
  system.leftCols(r) = basis.transpose().cast<Rational>();
  system.col(r) = f.normals().row(r).transpose().cast<Rational>();
  const Echelon e = row_reduce(system);
  if (e.rank() != r || e.pivots.back() != r - 1) return {};
  std::vector<std::uint32_t> lambda(static_cast<std::size_t>(r));
  for (Index i = 0; i < r; ++i) {
    const Rational& l = e.reduced(i, r);
    if (l == 0 || mod_p(denominator_of(l), p) == 0) return {};
    lambda[static_cast<std::size_t>(i)] = mod_p(l, p);
    if (lambda[static_cast<std::size_t>(i)] == 0) return {};
  }
  return lambda;
}

// For y_0..y_{r-2} nonzero, Q = c y (s + y) in the last variable with
// c = lambda_{r-1} prod y_i and s = sum lambda_i y_i / lambda_{r-1}; the
// number of roots of c y (s + y) = a is 1 + legendre(s^2 + 4 a / c).
std::vector<std::uint64_t> fast_generic_counts(const std::vector<std::uint32_t>& lambda, const PrimeField& field,
                                               std::uint32_t cosets, const CountOptions& opts) {
  const std::uint32_t p = field.p();
  const std::size_t r = lambda.size();
  {
    unsigned __int128 work = cosets;
    for (std::size_t i = 0; i + 1 < r; ++i) work *= (p - 1);
    if (work > opts.budget) {
      throw BudgetError("quadratic fast path needs more than " + std::to_string(opts.budget) + " evaluations");
    }
  }
  std::vector<std::uint32_t> four_a(cosets);
  for (std::uint32_t c = 0; c < cosets; ++c) four_a[c] = field.mul(4, field.power(c));
  const std::uint32_t lambda_last = lambda[r - 1];
  const std::uint32_t inv_lambda_last = field.inverse(lambda_last);

  std::vector<std::vector<std::uint64_t>> partial(std::max(1u, opts.threads), std::vector<std::uint64_t>(cosets, 0));
  for_each_slice(1, p, opts.threads, [&](unsigned t, std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint64_t>& acc = partial[t];
    auto finish = [&](std::uint32_t prod, std::uint32_t sum) {
      const std::uint32_t inv_c = field.inverse(field.mul(prod, lambda_last));
      const std::uint32_t s = field.mul(sum, inv_lambda_last);
      const std::uint32_t s2 = field.mul(s, s);
      for (std::uint32_t c = 0; c < cosets; ++c) {
        acc[c] += static_cast<std::uint64_t>(1 + field.legendre(field.add(s2, field.mul(four_a[c], inv_c))));
      }
    };
    std::function<void(std::size_t, std::uint32_t, std::uint32_t)> walk = [&](std::size_t depth, std::uint32_t prod,
                                                                             std::uint32_t sum) {
      if (depth + 1 == r) {
        finish(prod, sum);
        return;
      }
      const std::uint32_t l = lambda[depth];
      if (depth + 2 == r) {
        // Innermost free coordinate: unrolled to avoid the recursive call.
        std::uint32_t py = prod, sy = field.add(sum, l);
        for (std::uint32_t y = 1; y < p; ++y) {
          finish(py, sy);
          py = field.add(py, prod);
          sy = field.add(sy, l);
        }
        return;
      }
      for (std::uint32_t y = 1; y < p; ++y) walk(depth + 1, field.mul(prod, y), field.add(sum, field.mul(l, y)));
    };
    const std::uint32_t l0 = lambda[0];
    for (std::uint32_t y0 = lo; y0 < hi; ++y0) {
      if (r == 2) {
        finish(y0, field.mul(l0, y0));
      } else {
        walk(1, y0, field.mul(l0, y0));
      }
    }
  });
  std::vector<std::uint64_t> counts(cosets, 0);
  for (const auto& part : partial) {
    for (std::uint32_t c = 0; c < cosets; ++c) counts[c] += part[c];
  }
  return counts;
}

std::vector<std::uint64_t> brute_coset_counts(const CentralArrangement& f, const PrimeField& field,
                                              std::uint32_t cosets, const CountOptions& opts) {
  const std::uint32_t p = field.p();
  check_budget(p, f.ambient_dim(), opts.budget);
  const ModularForms forms(f.normals(), p);
  std::vector<std::vector<std::uint64_t>> partial(std::max(1u, opts.threads), std::vector<std::uint64_t>(cosets, 0));
  for_each_slice(0, p, opts.threads, [&](unsigned t, std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint64_t>& hist = partial[t];
    enumerate_products(forms, field, lo, hi, [&](std::uint32_t q) {
      if (q) ++hist[field.log(q) % cosets];
    });
  });
  const std::uint64_t coset_size = (p - 1) / cosets;
  std::vector<std::uint64_t> counts(cosets, 0);
  for (std::uint32_t c = 0; c < cosets; ++c) {
    std::uint64_t total = 0;
    for (const auto& part : partial) total += part[c];
    if (total % coset_size) throw ConsistencyError("fiber counts are not constant on a coset");
    counts[c] = total / coset_size;
  }
  return counts;
}

}  // namespace

CountResult count_affine_complement(const CentralArrangement& a, const PrimeField& field, const CountOptions& opts) {
  return {field.p(), BigInt(count_products(a, field, opts, false)), CountMethod::brute};
}

CountResult count_milnor_fiber_bruteforce(const CentralArrangement& a, const PrimeField& field,
                                          const CountOptions& opts) {
  return {field.p(), BigInt(count_products(a, field, opts, true)), CountMethod::brute};
}

FiberCountTable factor_fiber_counts(const CentralArrangement& factor, Index degree, const PrimeField& field,
                                    FiberBackend backend, const CountOptions& opts, Index factor_index) {
  if (degree < 1) throw PreconditionError("factor degree must be positive");
  FiberCountTable table;
  table.factor = factor_index;
  table.degree = degree;
  table.p = field.p();
  const auto cosets = static_cast<std::uint32_t>(std::gcd<std::uint64_t>(static_cast<std::uint64_t>(degree), field.p() - 1));
  if (backend == FiberBackend::automatic && factor.size() == degree) {
    const auto lambda = generic_chart(factor, field.p());
    if (!lambda.empty()) {
      table.counts = fast_generic_counts(lambda, field, cosets, opts);
      table.used_fast_path = true;
      return table;
    }
  }
  table.counts = brute_coset_counts(factor, field, cosets, opts);
  return table;
}

CountResult count_milnor_fiber_factored(const Decomposition& dec, const PrimeField& field, FiberBackend backend,
                                        const CountOptions& opts) {
  const std::uint32_t p = field.p();
  Index dim = 0;
  for (Index r : dec.block_ranks) dim += r;
  IntMatrix change(dim, dim);
  Index row = 0;
  for (const auto& m : dec.coordinate_maps) {
    change.middleRows(row, m.rows()) = m;
    row += m.rows();
  }
  if (mod_p(determinant(change), p) == 0) {
    throw PreconditionError("decomposition coordinates are singular mod " + std::to_string(p) + " (bad prime)");
  }
  if (mod_p(numerator_of(dec.scale), p) == 0 || mod_p(denominator_of(dec.scale), p) == 0) {
    throw PreconditionError("factorization constant is not a unit mod " + std::to_string(p) + " (bad prime)");
  }
  const std::uint32_t target = field.inverse(mod_p(dec.scale, p));

  // Convolution over Z/(p-1) in discrete-log coordinates.
  const std::uint32_t order = p - 1;
  std::vector<BigInt> acc(order, BigInt(0));
  acc[0] = 1;
  for (std::size_t j = 0; j < dec.factors.size(); ++j) {
    const FiberCountTable t = factor_fiber_counts(dec.factors[j], dec.factor_sizes[j], field, backend, opts,
                                                  static_cast<Index>(j));
    std::vector<BigInt> next(order, BigInt(0));
    for (std::uint32_t e = 0; e < order; ++e) {
      if (acc[e] == 0) continue;
      for (std::uint32_t f = 0; f < order; ++f) {
        const std::uint64_t n = t.counts[f % t.cosets()];
        if (n) next[(e + f) % order] += acc[e] * n;
      }
    }
    acc = std::move(next);
  }
  return {p, acc[field.log(target)],
          backend == FiberBackend::automatic ? CountMethod::fast : CountMethod::factored};
}

SymmetricCount symmetric_fiber_count(const PrimeField& field, const CountOptions& opts) {
  const std::uint32_t p = field.p();
  if (p % 12 != 11) throw PreconditionError("symmetric count needs p = 11 mod 12, got " + std::to_string(p));
  const FiberCountTable g2 = factor_fiber_counts(generic_arrangement(2), 4, field, FiberBackend::automatic, opts, 0);
  const FiberCountTable g4 = factor_fiber_counts(generic_arrangement(4), 6, field, FiberBackend::automatic, opts, 1);
  if (g2.cosets() != 2 || g4.cosets() != 2) throw ConsistencyError("expected the squares as common index-2 image");
  SymmetricCount s;
  s.p = p;
  // The generator is a non-square, so coset 1 holds the non-squares; the
  // inverse of a non-square is a non-square, so n2 needs no reindexing.
  s.n1p = g2.counts[0];
  s.n1pp = g2.counts[1];
  s.n2p = g4.counts[0];
  s.n2pp = g4.counts[1];
  s.total = BigInt((p - 1) / 2) * (BigInt(s.n1p) * s.n2p + BigInt(s.n1pp) * s.n2pp);
  return s;
}

namespace {

void add_prime_factors(BigInt n, std::set<BigInt>& out) {
  n = boost::multiprecision::abs(n);
  for (BigInt f(2); f * f <= n; ++f) {
    if (n % f != 0) continue;
    out.insert(f);
    while (n % f == 0) n /= f;
    if (n > 1 && boost::multiprecision::miller_rabin_test(n, 25)) break;
  }
  if (n > 1) out.insert(n);
}

// Calls fn with every k-subset of [0, n) in lexicographic order.
template <typename Fn>
void for_each_subset(Index n, Index k, Fn&& fn) {
  std::vector<Index> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::set<BigInt> bad_primes(const CentralArrangement& a) {
  const IntMatrix& n = a.normals();
  std::set<BigInt> minors;
  for (Index k = 1; k <= std::min(n.rows(), n.cols()); ++k) {
    for_each_subset(n.rows(), k, [&](const std::vector<Index>& rows) {
      for_each_subset(n.cols(), k, [&](const std::vector<Index>& cols) {
        IntMatrix sub(k, k);
        for (Index i = 0; i < k; ++i) {
          for (Index j = 0; j < k; ++j) sub(i, j) = n(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        }
        BigInt det = boost::multiprecision::abs(determinant(sub));
        if (det > 1) minors.insert(std::move(det));
      });
    });
  }
  std::set<BigInt> primes;
  for (const BigInt& m : minors) add_prime_factors(m, primes);
  return primes;
}

}  // namespace milnor
