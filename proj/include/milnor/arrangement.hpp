#pragma once

#include "milnor/exact.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace milnor {

/// A linear form with primitive integer coefficients and positive leading
/// nonzero entry.
struct Hyperplane {
  IntVector normal;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.normal.size() == b.normal.size() && a.normal == b.normal;
  }
};

/// Canonical form of a nonzero rational normal vector.
Hyperplane canonical_hyperplane(const RatVector& normal);

/// A central arrangement of d >= 1 distinct hyperplanes in C^{n+1}, stored
/// as the d x (n+1) integer matrix of canonical normals. Immutable.
class CentralArrangement {
 public:
  /// Canonicalizes every row. Throws PreconditionError on zero rows,
  /// duplicates after canonicalization, an empty list or zero ambient
  /// dimension.
  explicit CentralArrangement(const RatMatrix& normals, std::string name = {});
  explicit CentralArrangement(const std::vector<RatVector>& normals, std::string name = {});

  Index ambient_dim() const { return normals_.cols(); }
  Index size() const { return normals_.rows(); }
  const IntMatrix& normals() const { return normals_; }
  Hyperplane hyperplane(Index i) const { return {normals_.row(i).transpose()}; }
  const std::string& name() const { return name_; }

  /// Rank of the normal matrix.
  Index rank() const;

  /// Sub-arrangement on the given hyperplane indices, same ambient space.
  CentralArrangement restrict_to(const std::vector<Index>& members) const;

 private:
  IntMatrix normals_;
  std::string name_;
};

/// Parses the JSON arrangement document: {"name": ..., "hyperplanes":
/// [["1","0"], ["1/2","3"], ...]}. Entries may be integers or strings "a" or
/// "a/b". Throws ParseError on malformed documents and PreconditionError on
/// invalid arrangements.
CentralArrangement parse_arrangement(std::string_view document);
CentralArrangement load_arrangement(const std::string& path);

/// Document with canonical integer entries; parse(serialize(A)) == A.
std::string serialize_arrangement(const CentralArrangement& a);

bool is_essential(const CentralArrangement& a);

/// Expresses every normal in a basis of their rational span (the pivot
/// normals of exact row reduction). The result lives in C^{rank}.
CentralArrangement essentialize(const CentralArrangement& a);

/// Substitutes x = M y; normals transform as n -> M^T n.
CentralArrangement change_coordinates(const CentralArrangement& a, const IntMatrix& m);

/// Product arrangement in C^{n1+n2}: a's forms on the first variables, b's on
/// the rest.
CentralArrangement product(const CentralArrangement& a, const CentralArrangement& b);

/// x_0 x_1 ... x_n (x_0 + ... + x_n) in C^{n+1}.
CentralArrangement generic_arrangement(int n);
/// Coordinate hyperplanes of C^n.
CentralArrangement boolean_arrangement(int n);
/// u copies of G_2 times v copies of G_4.
CentralArrangement product_of_generic(int u, int v);

/// Resolves "@g2", "@g4", "@a11", "@boolean:n", "@g:n", "@auv:u,v", or
/// otherwise loads the path.
CentralArrangement resolve_arrangement(const std::string& name);

bool operator==(const CentralArrangement& a, const CentralArrangement& b);

}  // namespace milnor
