#include "support/properties.hpp"

#include <doctest.h>

using namespace milnor;

namespace {

void report(const testing::SweepSummary& s) {
  for (const auto& f : s.failures) FAIL_CHECK(f);
  MESSAGE(s.arrangements << " cases, " << s.checks << " checks, " << s.skipped << " skipped");
}

}  // namespace

TEST_CASE("fiber and complement counts agree across methods") {
  const auto s = testing::oracle_equivalence_sweep(0x5eed0001, 200);
  report(s);
  CHECK(s.arrangements >= 200);
}

TEST_CASE("line arrangements: reducible, vanishing spectrum and double root at 1 coincide") {
  const auto s = testing::line_arrangement_sweep(0x5eed0002, 250);
  report(s);
  CHECK(s.arrangements >= 200);
}

TEST_CASE("trivial monodromy gives polynomial count") {
  const auto s = testing::trivial_monodromy_sweep(0x5eed0003, 300);
  report(s);
  CHECK(s.arrangements >= 50);
}

TEST_CASE("every hodge table passes the zeta check") {
  const auto s = testing::zeta_sweep(0x5eed0004, 200);
  report(s);
  CHECK(s.checks > 200);
}
