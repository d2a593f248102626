#pragma once

// Independent reference computations. Each one is deliberately naive and
// shares no code path with the library routine it checks beyond the exact
// rank of a matrix.

#include "milnor/arrangement.hpp"
#include "milnor/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace milnor::testing {

inline Index subset_rank(const CentralArrangement& a, std::uint32_t mask) {
  std::vector<Index> rows;
  for (Index i = 0; i < a.size(); ++i)
    if (mask >> i & 1u) rows.push_back(i);
  if (rows.empty()) return 0;
  IntMatrix m(static_cast<Index>(rows.size()), a.ambient_dim());
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Index>(r)) = a.normals().row(rows[r]);
  return rank(m);
}

/// Whitney's formula: chi(t) = sum over subsets S of (-1)^|S| t^{n+1-rank S}.
inline IntPolynomial whitney_characteristic(const CentralArrangement& a) {
  std::vector<BigInt> c(static_cast<std::size_t>(a.ambient_dim()) + 1, BigInt(0));
  const std::uint32_t full = 1u << a.size();
  for (std::uint32_t s = 0; s < full; ++s) {
    const int sign = std::popcount(s) % 2 == 0 ? 1 : -1;
    c[static_cast<std::size_t>(a.ambient_dim() - subset_rank(a, s))] += sign;
  }
  return IntPolynomial(c);
}

/// Flats as the distinct closures of all subsets.
inline std::set<std::uint32_t> brute_flats(const CentralArrangement& a) {
  std::set<std::uint32_t> flats;
  const std::uint32_t full = 1u << a.size();
  for (std::uint32_t s = 0; s < full; ++s) {
    const Index r = subset_rank(a, s);
    std::uint32_t closure = s;
    for (Index i = 0; i < a.size(); ++i)
      if (subset_rank(a, s | 1u << i) == r) closure |= 1u << i;
    flats.insert(closure);
  }
  return flats;
}

/// Connected components as the minimal nonempty separators: S separates
/// when rank(S) + rank(complement) = rank(all).
inline std::vector<std::vector<Index>> brute_components(const CentralArrangement& a) {
  const std::uint32_t full = (1u << a.size()) - 1;
  const Index total = subset_rank(a, full);
  std::vector<std::uint32_t> separators;
  for (std::uint32_t s = 1; s <= full; ++s)
    if (subset_rank(a, s) + subset_rank(a, full & ~s) == total) separators.push_back(s);
  std::vector<std::vector<Index>> blocks;
  for (std::uint32_t s : separators) {
    bool minimal = true;
    for (std::uint32_t t : separators)
      if (t != s && (t & s) == t) minimal = false;
    if (!minimal) continue;
    std::vector<Index> block;
    for (Index i = 0; i < a.size(); ++i)
      if (s >> i & 1u) block.push_back(i);
    blocks.push_back(block);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

/// Normals as machine integers, reduced to [0, p).
inline std::vector<std::int64_t> reduced_normals(const CentralArrangement& a, std::uint64_t p) {
  std::vector<std::int64_t> out;
  for (Index i = 0; i < a.size(); ++i)
    for (Index k = 0; k < a.ambient_dim(); ++k) {
      std::int64_t c = a.normals()(i, k).convert_to<std::int64_t>() % static_cast<std::int64_t>(p);
      out.push_back(c < 0 ? c + static_cast<std::int64_t>(p) : c);
    }
  return out;
}

/// Q(x) mod p from the reduced normals.
inline std::uint64_t eval_q(const std::vector<std::int64_t>& normals, Index dim, const std::vector<std::uint64_t>& x,
                            std::uint64_t p) {
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < normals.size(); i += static_cast<std::size_t>(dim)) {
    std::uint64_t form = 0;
    for (std::size_t k = 0; k < x.size(); ++k) form += static_cast<std::uint64_t>(normals[i + k]) * x[k];
    q = q * (form % p) % p;
  }
  return q;
}

/// Visits every x in F_p^dim.
template <typename Fn>
void for_each_point(Index dim, std::uint64_t p, Fn&& fn) {
  std::vector<std::uint64_t> x(static_cast<std::size_t>(dim), 0);
  while (true) {
    fn(x);
    std::size_t k = 0;
    while (k < x.size() && ++x[k] == p) x[k++] = 0;
    if (k == x.size()) return;
  }
}

/// |{x : Q(x) = target}| in F_p^{n+1}.
inline std::uint64_t naive_level_count(const CentralArrangement& a, std::uint64_t p, std::uint64_t target) {
  const auto n = reduced_normals(a, p);
  std::uint64_t hits = 0;
  for_each_point(a.ambient_dim(), p, [&](const std::vector<std::uint64_t>& x) {
    if (eval_q(n, a.ambient_dim(), x, p) == target) ++hits;
  });
  return hits;
}

/// Points of P^n(F_p) off the arrangement, one representative per line
/// (first nonzero coordinate equal to 1).
inline std::uint64_t naive_projective_complement(const CentralArrangement& a, std::uint64_t p) {
  const auto n = reduced_normals(a, p);
  std::uint64_t hits = 0;
  for_each_point(a.ambient_dim(), p, [&](const std::vector<std::uint64_t>& x) {
    auto lead = std::find_if(x.begin(), x.end(), [](std::uint64_t v) { return v != 0; });
    if (lead == x.end() || *lead != 1) return;
    if (eval_q(n, a.ambient_dim(), x, p) != 0) ++hits;
  });
  return hits;
}

/// Poincare polynomial sum_m b_m s^m from Betti numbers.
inline IntPolynomial poincare(const std::vector<BigInt>& betti) { return IntPolynomial(betti); }

}  // namespace milnor::testing
