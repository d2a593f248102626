#include "milnor/spectrum2d.hpp"

#include "milnor/decompose.hpp"
#include "milnor/error.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

namespace {

void require_plane(const CentralArrangement& a) {
  if (a.ambient_dim() != 3) throw PreconditionError("line arrangement must live in C^3");
  if (a.size() < 2) throw PreconditionError("line arrangement needs at least two lines");
  if (!is_essential(a)) throw PreconditionError("line arrangement must be essential");
}

BigInt choose2(const BigInt& n) { return n < 2 ? BigInt(0) : n * (n - 1) / 2; }

// ceil(num / den) for den > 0.
BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (q * den < num) ++q;
  return q;
}

}  // namespace

bool SpectrumTable::vanishes() const {
  for (const auto& [alpha, m] : entries) {
    if (m != 0) return false;
  }
  return true;
}

const BigInt& SpectrumTable::at(Index j) const {
  auto it = entries.find(Rational(j) / Rational(degree));
  if (it == entries.end()) throw PreconditionError("spectrum index out of range");
  return it->second;
}

std::vector<MultiplePoint> multiple_points(const CentralArrangement& a) {
  require_plane(a);
  const IntMatrix& n = a.normals();
  std::map<std::vector<BigInt>, MultiplePoint> points;
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = i + 1; j < a.size(); ++j) {
      const Eigen::Matrix<BigInt, 3, 1> u = n.row(i).transpose(), v = n.row(j).transpose();
      const RatVector cross = u.cross(v).cast<Rational>();
      IntVector p = primitive_integer(cross).first;
      std::vector<BigInt> key(p.data(), p.data() + 3);
      if (points.count(key)) continue;
      MultiplePoint mp{p, {}};
      for (Index k = 0; k < a.size(); ++k) {
        if (n.row(k).transpose().dot(p) == 0) mp.lines.push_back(k);
      }
      points.emplace(std::move(key), std::move(mp));
    }
  }
  std::vector<MultiplePoint> out;
  BigInt pairs(0);
  for (auto& [key, mp] : points) {
    pairs += choose2(BigInt(mp.multiplicity()));
    out.push_back(std::move(mp));
  }
  if (pairs != choose2(BigInt(a.size()))) throw ConsistencyError("multiple points miss some line pairs");
  return out;
}

SpectrumTable spectrum_unit_interval(const CentralArrangement& a) {
  const auto points = multiple_points(a);
  const BigInt d(a.size());
  SpectrumTable table;
  table.degree = a.size();
  for (Index j = 1; j < a.size(); ++j) {
    BigInt m = choose2(BigInt(j - 1));
    for (const auto& p : points) {
      if (p.multiplicity() < 3) continue;
      m -= choose2(ceil_div(BigInt(j) * p.multiplicity(), d) - 1);
    }
    if (m < 0) throw ConsistencyError("negative spectral multiplicity");
    table.entries.emplace(Rational(j) / Rational(a.size()), std::move(m));
  }
  return table;
}

LineArrangementReport line_arrangement_report(const CentralArrangement& a) {
  require_plane(a);
  const Decomposition dec = irreducible_decomposition(a);
  LineArrangementReport r;
  r.reducible = dec.reducible();
  r.trivial_monodromy = dec.gcd == 1;
  r.spectrum_vanishes = spectrum_unit_interval(a).vanishes();
  r.trivial_monodromy_hodge = r.spectrum_vanishes;
  if (!r.all_agree()) throw ConsistencyError("line arrangement conditions disagree");
  return r;
}

}  // namespace milnor
