#include "milnor/lattice.hpp"

#include "milnor/error.hpp"

#include <algorithm>
#include <map>

namespace milnor {

bool Flat::contains(const Flat& other) const {
  return std::includes(members.begin(), members.end(), other.members.begin(), other.members.end());
}

IntersectionLattice::IntersectionLattice(Index ambient_dim, Index hyperplane_count, std::vector<Flat> flats)
    : ambient_dim_(ambient_dim), hyperplane_count_(hyperplane_count), flats_(std::move(flats)) {
  std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.members < b.members;
  });
  if (flats_.empty() || !flats_.front().members.empty()) {
    throw ConsistencyError("lattice must start at the empty flat");
  }
  mobius_.resize(flats_.size());
  mobius_[0] = 1;
  for (std::size_t i = 1; i < flats_.size(); ++i) {
    BigInt sum(0);
    for (std::size_t j = 0; j < i && flats_[j].rank < flats_[i].rank; ++j) {
      if (flats_[i].contains(flats_[j])) sum += mobius_[j];
    }
    mobius_[i] = -sum;
  }
}

IntersectionLattice build_lattice(const CentralArrangement& a) {
  const Index d = a.size();
  std::vector<RatVector> normals;
  normals.reserve(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) normals.push_back(a.normals().row(i).transpose().cast<Rational>());

  struct Node {
    Flat flat;
    RowSpace span;
  };
  std::vector<Flat> all{Flat{}};
  std::vector<Node> level{Node{Flat{}, RowSpace(a.ambient_dim())}};
  while (!level.empty()) {
    std::map<std::vector<Index>, Node> next;
    for (const Node& node : level) {
      for (Index h = 0; h < d; ++h) {
        if (std::binary_search(node.flat.members.begin(), node.flat.members.end(), h)) continue;
        RowSpace span = node.span;
        span.insert(normals[static_cast<std::size_t>(h)]);
        std::vector<Index> closure;
        for (Index i = 0; i < d; ++i) {
          if (span.contains(normals[static_cast<std::size_t>(i)])) closure.push_back(i);
        }
        if (next.count(closure)) continue;
        Flat f{closure, span.dimension()};
        next.emplace(std::move(closure), Node{std::move(f), std::move(span)});
      }
    }
    level.clear();
    for (auto& [key, node] : next) {
      all.push_back(node.flat);
      level.push_back(std::move(node));
    }
  }
  return IntersectionLattice(a.ambient_dim(), d, std::move(all));
}

namespace {

void require_essential(const IntersectionLattice& lattice) {
  if (!lattice.essential()) {
    throw PreconditionError("arrangement is not essential (rank " + std::to_string(lattice.rank()) +
                            " < ambient dimension " + std::to_string(lattice.ambient_dim()) + ")");
  }
}

}  // namespace

IntPolynomial characteristic_polynomial(const IntersectionLattice& lattice) {
  require_essential(lattice);
  std::vector<BigInt> c(static_cast<std::size_t>(lattice.ambient_dim()) + 1);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    c[static_cast<std::size_t>(lattice.ambient_dim() - lattice.flats()[i].rank)] += lattice.mobius()[i];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial projective_count_polynomial(const IntersectionLattice& lattice) {
  return characteristic_polynomial(lattice).divide_by_linear(BigInt(1));
}

BigInt projective_euler_characteristic(const IntersectionLattice& lattice) {
  return projective_count_polynomial(lattice)(BigInt(1));
}

std::vector<BigInt> betti_from_count_poly(const IntPolynomial& count) {
  if (count.is_zero()) throw PreconditionError("zero count polynomial");
  const int n = count.degree();
  std::vector<BigInt> betti(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    BigInt b = count.coefficient(static_cast<std::size_t>(n - m));
    if (m % 2) b = -b;
    if (b <= 0) {
      throw PreconditionError("coefficients of " + count.to_string() +
                              " do not alternate in sign; not an arrangement count polynomial");
    }
    betti[static_cast<std::size_t>(m)] = b;
  }
  return betti;
}

}  // namespace milnor
