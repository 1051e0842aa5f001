#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qojump/lattice.hpp"
#include "qojump/rational.hpp"

namespace qojump {

struct CharacteristicData {
  std::size_t d = 0;
  std::size_t g = 0;
  std::vector<QVector> alphas;      // alpha_1..alpha_g
  std::vector<Integer> char_ints;   // n_1..n_g
  std::vector<Integer> e;           // e_0..e_g
  std::vector<QVector> gammas;      // gamma_1..gamma_g
  // axis_mult[i][l] for i in 0..d-1 (axis i+1), l in 0..g
  std::vector<std::vector<Integer>> axis_mult;

  Integer common_denominator;             // lcm of all denominators of the alphas
  std::vector<HermiteForm> scaled_lattice;  // HNF of common_denominator * M_l, l = 0..g

  std::size_t ambient_dim() const { return d + g + 1; }
  Integer degree() const { return e.front(); }

  // 1-based accessors with the conventions n_0 = 1, alpha_0 = gamma_0 = 0.
  const Integer& n(std::size_t j) const;
  QVector alpha(std::size_t j) const;
  QVector gamma(std::size_t j) const;
  // n_from * ... * n_to, 1 when from > to
  Integer n_product(std::size_t from, std::size_t to) const;
};

/// Validates the exponents and computes every derived invariant.
CharacteristicData build(std::size_t d, const std::vector<QVector>& alphas);

/// epsilon_i^(l) = k[i][l] * e_i as an integer vector of dim d (i is 1-based).
IntVector primitive_axis_vector(const CharacteristicData& cd, std::size_t i, std::size_t level);

struct SemigroupRepresentation {
  IntVector u;
  std::vector<Integer> digits;  // i_1..i_l

  bool operator==(const SemigroupRepresentation&) const = default;
};

/// Unique representation u + sum i_j gamma_j with 0 <= i_j < n_j, or nullopt
/// if the vector does not lie in the semigroup at that level.
std::optional<SemigroupRepresentation> semigroup_represent(const CharacteristicData& cd, std::size_t level,
                                                           const QVector& value);

/// Whether the rational vector lies in the lattice M_l.
bool in_lattice_m(const CharacteristicData& cd, std::size_t level, const QVector& v);

}  // namespace qojump
