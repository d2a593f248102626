#pragma once

#include "milnor/arrangement.hpp"

#include <map>
#include <vector>

namespace milnor {

/// A point of P^2 where at least two lines of the arrangement meet.
struct MultiplePoint {
  IntVector point;            // primitive, positive leading entry
  std::vector<Index> lines;   // sorted indices of the lines through it
  Index multiplicity() const { return static_cast<Index>(lines.size()); }
};

/// m_{j/d} for j = 1..d-1, keyed by the exact rational j/d.
struct SpectrumTable {
  Index degree = 0;  // d
  std::map<Rational, BigInt> entries;

  bool vanishes() const;
  /// m_{j/d}; 0 < j < d.
  const BigInt& at(Index j) const;
};

/// Requires three homogeneous coordinates and an essential arrangement of
/// at least two lines. Points are ordered lexicographically.
std::vector<MultiplePoint> multiple_points(const CentralArrangement& a);

/// m_{j/d} = C(j-1, 2) - sum over points with m_s >= 3 of
/// C(ceil(j m_s / d) - 1, 2), with C(a, 2) = 0 for a < 2.
SpectrumTable spectrum_unit_interval(const CentralArrangement& a);

/// The four equivalent conditions for line arrangements. `trivial_monodromy_hodge`
/// is the Hodge-theoretic condition, reported through its equality with
/// spectrum vanishing on (0, 1).
struct LineArrangementReport {
  bool trivial_monodromy_hodge = false;
  bool reducible = false;
  bool trivial_monodromy = false;
  bool spectrum_vanishes = false;
  bool all_agree() const {
    return trivial_monodromy_hodge == reducible && reducible == trivial_monodromy &&
           trivial_monodromy == spectrum_vanishes;
  }
};

/// Throws ConsistencyError when the conditions disagree.
LineArrangementReport line_arrangement_report(const CentralArrangement& a);

}  // namespace milnor
