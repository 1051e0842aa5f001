#pragma once

#include <cstddef>
#include <vector>

#include "qojump/branch.hpp"
#include "qojump/chardata.hpp"
#include "qojump/rational.hpp"
#include "qojump/valuations.hpp"

namespace qojump {

/// Upward-closed set of exponent tuples in N^dim, kept as the antichain of
/// its componentwise-minimal elements (sorted).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t dim) : dim_(dim) {}
  MonomialIdeal(std::size_t dim, std::vector<IntVector> generators);

  static MonomialIdeal unit(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  bool contains(const IntVector& exponent) const;
  bool is_unit() const;

  /// componentwise max of all generator pairs, minimized
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  /// multiplication by the monomial with the given exponent
  MonomialIdeal shifted(const IntVector& exponent) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> generators_;
};

/// Keeps only the componentwise-minimal tuples, sorted and deduplicated.
std::vector<IntVector> minimal_elements(std::vector<IntVector> tuples);

Rational xi_of(const CharacteristicData& cd, const DivisorTable& table, const IntVector& monomial);

/// {I : <trop, I> > xi * trop_f - lambda} for one exceptional divisor.
MonomialIdeal threshold_ideal(const DivisorRecord& divisor, const Rational& xi);

/// Multiplier ideal of the exponent lattice for 0 <= xi < 1; `threads` > 1
/// computes the per-divisor threshold ideals concurrently.
MonomialIdeal multiplier_ideal(const CharacteristicData& cd, const DivisorTable& table, const Rational& xi,
                               unsigned threads = 1);

/// Any xi >= 0, reducing xi >= 1 by multiplying with f^floor(xi).
MonomialIdeal multiplier_ideal_periodic(const CharacteristicData& cd, const DivisorTable& table,
                                        const Rational& xi, unsigned threads = 1);

/// Tuples with xi < xi_M <= xi + 1 inside the box 0 <= I <= bound.
std::vector<IntVector> band_set(const CharacteristicData& cd, const DivisorTable& table, const Rational& xi,
                                const IntVector& bound);

struct Jump {
  Rational xi;
  std::vector<IntVector> witnesses;
};

struct JumpingReport {
  Rational lct;
  std::vector<Jump> jumps;  // strictly increasing, last one is 1
  std::size_t candidates_examined = 0;
};

JumpingReport jumping_numbers(const CharacteristicData& cd, const DivisorTable& table, unsigned threads = 1);

/// Membership of a generalized monomial in the multiplier ideal decided from
/// the Newton polyhedra of the semi-roots at every level, independently of
/// the divisor table.
bool newton_membership_check(const CharacteristicData& cd, const IntVector& monomial, const Rational& xi);

/// Membership of a polynomial given by its expansion, 0 <= xi < 1.
bool membership_of_polynomial(const CharacteristicData& cd, const DivisorTable& table,
                              const GeneralizedExpansion& h, const Rational& xi);

}  // namespace qojump
