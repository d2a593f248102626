#include "milnor/decompose.hpp"

#include "milnor/error.hpp"
#include "milnor/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace milnor {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Decomposition irreducible_decomposition(const CentralArrangement& a) {
  if (!is_essential(a)) throw PreconditionError("decomposition requires an essential arrangement");
  const Index d = a.size();
  // Columns are normals. Column j of the reduced matrix gives the unique
  // expression of normal j in the pivot basis; its support plus j is the
  // fundamental circuit of j.
  const Echelon e = row_reduce(a.normals().transpose());
  DisjointSets sets(static_cast<std::size_t>(d));
  std::vector<Index> pivot_row(static_cast<std::size_t>(d), -1);
  for (Index r = 0; r < e.rank(); ++r) pivot_row[static_cast<std::size_t>(e.pivots[r])] = r;
  for (Index j = 0; j < d; ++j) {
    if (pivot_row[static_cast<std::size_t>(j)] >= 0) continue;
    for (Index r = 0; r < e.rank(); ++r) {
      if (e.reduced(r, j) != 0) sets.unite(static_cast<std::size_t>(j), static_cast<std::size_t>(e.pivots[r]));
    }
  }

  std::map<std::size_t, std::vector<Index>> by_root;
  for (Index i = 0; i < d; ++i) by_root[sets.find(static_cast<std::size_t>(i))].push_back(i);

  Decomposition out;
  for (auto& [root, members] : by_root) out.blocks.push_back(std::move(members));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  Index rank_sum = 0;
  for (const auto& block : out.blocks) {
    std::vector<Index> basis;
    for (Index i : block) {
      if (pivot_row[static_cast<std::size_t>(i)] >= 0) basis.push_back(i);
    }
    const Index r = static_cast<Index>(basis.size());
    RatMatrix coords = RatMatrix::Zero(static_cast<Index>(block.size()), r);
    IntMatrix map(r, a.ambient_dim());
    for (Index k = 0; k < r; ++k) map.row(k) = a.normals().row(basis[static_cast<std::size_t>(k)]);
    for (std::size_t t = 0; t < block.size(); ++t) {
      for (Index k = 0; k < r; ++k) {
        coords(static_cast<Index>(t), k) = e.reduced(pivot_row[static_cast<std::size_t>(basis[k])], block[t]);
      }
      out.scale *= primitive_integer(coords.row(static_cast<Index>(t))).second;
    }
    CentralArrangement factor(coords);

    if (factor.rank() != r || a.restrict_to(block).rank() != r) {
      throw ConsistencyError("block rank disagrees with its basis size");
    }
    if (projective_euler_characteristic(build_lattice(factor)) == 0) {
      throw ConsistencyError("matroid component is reducible");
    }
    rank_sum += r;
    out.factor_sizes.push_back(static_cast<Index>(block.size()));
    out.block_ranks.push_back(r);
    out.factors.push_back(std::move(factor));
    out.coordinate_maps.push_back(std::move(map));
  }
  if (rank_sum != a.ambient_dim()) throw ConsistencyError("blocks do not form a direct sum");

  out.gcd = 0;
  for (Index s : out.factor_sizes) out.gcd = std::gcd(out.gcd, s);
  return out;
}

Index monodromy_order(const CentralArrangement& a) { return irreducible_decomposition(a).gcd; }

TrivialityWitness is_monodromy_trivial(const CentralArrangement& a) {
  const Decomposition dec = irreducible_decomposition(a);
  TrivialityWitness w;
  w.q = dec.q();
  w.factor_sizes = dec.factor_sizes;
  w.d0 = dec.gcd;
  w.trivial = dec.gcd == 1;
  w.euler_characteristic = projective_euler_characteristic(build_lattice(a));
  w.stv_reducible = w.euler_characteristic == 0;
  if (w.stv_reducible != dec.reducible()) {
    throw ConsistencyError("matroid decomposition and Euler characteristic disagree on reducibility");
  }
  return w;
}

}  // namespace milnor
