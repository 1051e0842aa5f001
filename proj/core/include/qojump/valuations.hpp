#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qojump/branch.hpp"
#include "qojump/chardata.hpp"
#include "qojump/rational.hpp"

namespace qojump {

/// u = v + r * e_{d+1} at a given level of the toroidal process.
struct QuasiMonomialPoint {
  std::size_t level = 0;
  QVector base;
  Rational height;
};

/// T_l(v) in Q^{d+g+1}.
QVector trop_embed(const CharacteristicData& cd, std::size_t level, const QVector& v);
IntVector trop_embed(const CharacteristicData& cd, std::size_t level, const IntVector& v);

/// Value of the quasi-monomial valuation on x_j (j is 1-based, up to d+g+1).
Rational value_on_semiroot(const CharacteristicData& cd, const QuasiMonomialPoint& point, std::size_t j);

/// Throws PreconditionViolated unless the digit bounds and dimensions hold.
void check_expansion(const CharacteristicData& cd, const GeneralizedExpansion& h);

/// Minimum over the expansion terms; only valid on the closed cone where the
/// level-l strict transform does not dominate the next characteristic term.
Rational value_on_expansion(const CharacteristicData& cd, const QuasiMonomialPoint& point,
                            const GeneralizedExpansion& h);

/// alpha_l + (1,...,1) padded to dimension d+1.
QVector log_discrepancy_vector(const CharacteristicData& cd, std::size_t level);

/// <u, lambda_l> for u primitive in N_l x Z.
Rational log_discrepancy(const CharacteristicData& cd, std::size_t level, const IntVector& u);

struct DivisorRecord {
  std::string id;
  std::size_t level = 0;
  std::size_t axis = 0;        // 1..d, or d+1 for the strict transform of a semi-root
  IntVector lattice_vector;    // in Z^{d+1}
  IntVector trop;              // in Z^{d+g+1}
  Integer log_discrepancy;
  bool exceptional = false;
  std::vector<std::string> aliases;  // ids of records merged into this one
};

struct DivisorTable {
  std::vector<DivisorRecord> records;
  std::vector<std::string> diagnostics;

  std::vector<const DivisorRecord*> exceptional() const;
};

DivisorTable divisor_table(const CharacteristicData& cd);

}  // namespace qojump
