#include "milnor/decompose.hpp"
#include "milnor/error.hpp"
#include "milnor/lattice.hpp"
#include "milnor/spectrum2d.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace milnor;

namespace {

CentralArrangement from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<RatVector> v;
  for (auto r : rows) {
    RatVector x(static_cast<Index>(r.size()));
    Index i = 0;
    for (long long c : r) x(i++) = c;
    v.push_back(x);
  }
  return CentralArrangement(v);
}

const CentralArrangement near_pencil = from_rows({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});

std::vector<Index> multiplicities(const CentralArrangement& a) {
  std::vector<Index> m;
  for (const auto& pt : multiple_points(a)) m.push_back(pt.multiplicity());
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_CASE("multiple points") {
  CHECK(multiplicities(generic_arrangement(2)) == std::vector<Index>(6, 2));
  CHECK(multiplicities(boolean_arrangement(3)) == std::vector<Index>(3, 2));

  const auto pts = multiple_points(near_pencil);
  REQUIRE(pts.size() == 4);
  int triples = 0;
  for (const auto& pt : pts) {
    if (pt.multiplicity() == 3) {
      ++triples;
      CHECK(pt.point(0) == 0);
      CHECK(pt.point(1) == 0);
      CHECK(pt.point(2) == 1);
    } else {
      CHECK(pt.point(2) == 0);  // the double points lie on z = 0
    }
  }
  CHECK(triples == 1);
}

TEST_CASE("spectrum preconditions") {
  CHECK_THROWS_AS(spectrum_unit_interval(generic_arrangement(4)), PreconditionError);
  CHECK_THROWS_AS(multiple_points(from_rows({{1, 0, 0}, {0, 1, 0}})), PreconditionError);
}

TEST_CASE("spectrum values") {
  const auto g2 = spectrum_unit_interval(generic_arrangement(2));
  CHECK(g2.degree == 4);
  CHECK(g2.at(1) == 0);
  CHECK(g2.at(2) == 0);
  CHECK(g2.at(3) == 1);
  CHECK(g2.entries.at(Rational(3, 4)) == 1);
  CHECK_FALSE(g2.vanishes());
  CHECK(spectrum_unit_interval(boolean_arrangement(3)).vanishes());
  const auto np = spectrum_unit_interval(near_pencil);
  CHECK(np.entries.size() == 3);
  CHECK(np.vanishes());
}

TEST_CASE("ceiling is exact at integer boundaries") {
  // Six lines with three triple points: j m / d is an integer at j = 2, 4.
  const auto a = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  const auto t = spectrum_unit_interval(a);
  std::vector<Index> m = multiplicities(a);
  // m_{j/6} = C(j-1,2) - (#triple) C(ceil(j/2)-1, 2)
  for (Index j = 1; j < 6; ++j) {
    const long long base = (j - 1) * (j - 2) / 2;
    long long sub = 0;
    for (Index mult : m) {
      if (mult < 3) continue;
      const long long c = (j * mult + 5) / 6 - 1;
      sub += c * (c - 1) / 2;
    }
    CHECK(t.at(j) == base - sub);
  }
}

TEST_CASE("four equivalent conditions on examples") {
  const auto np = line_arrangement_report(near_pencil);
  CHECK((np.trivial_monodromy_hodge && np.reducible && np.trivial_monodromy && np.spectrum_vanishes));
  const auto g2 = line_arrangement_report(generic_arrangement(2));
  CHECK_FALSE((g2.trivial_monodromy_hodge || g2.reducible || g2.trivial_monodromy || g2.spectrum_vanishes));
  const auto tri = line_arrangement_report(boolean_arrangement(3));
  CHECK((tri.all_agree() && tri.reducible));
}

TEST_CASE("point count identity and nonnegativity on random line arrangements") {
  testing::Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_line_arrangement(rng);
    CAPTURE(serialize_arrangement(a));
    BigInt pairs(0);
    for (const auto& pt : multiple_points(a)) pairs += binomial(pt.multiplicity(), 2);
    CHECK(pairs == binomial(a.size(), 2));
    const auto t = spectrum_unit_interval(a);
    for (const auto& [x, m] : t.entries) CHECK(m >= 0);

    // Invariance under a coordinate change: same values.
    const auto b = change_coordinates(a, testing::random_unimodular(rng, 3));
    CHECK(spectrum_unit_interval(b).entries == t.entries);
  }
}
