#pragma once

#include <cstddef>
#include <vector>

#include "qojump/rational.hpp"

namespace qojump {

struct HermiteForm {
  // Nonzero rows in echelon form: pivots strictly increase to the right, are
  // positive, and entries above each pivot lie in [0, pivot).
  std::vector<IntVector> rows;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Row-style Hermite normal form of the lattice spanned by `rows`.
/// An empty input, or one made only of zero rows, yields rank 0.
HermiteForm hermite_normal_form(const std::vector<IntVector>& rows);

/// True iff `v` lies in the lattice whose Hermite form is `hnf`.
bool lattice_contains(const HermiteForm& hnf, const IntVector& v);

/// Index [sup : sub] of two full-rank lattices of the same dimension.
/// Throws NotInLattice if sub is not contained in sup and InvalidArgument if
/// either lattice is not of full rank.
Integer lattice_index(const std::vector<IntVector>& sup, const std::vector<IntVector>& sub);

struct Primitive {
  IntVector primitive;
  Integer scale;
};

/// v = scale * primitive with gcd(primitive) = 1. Zero vectors are rejected.
Primitive primitivize(const IntVector& v);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

}  // namespace qojump
