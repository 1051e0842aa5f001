#include "qojump/chardata.hpp"

#include <string>

#include "qojump/error.hpp"

namespace qojump {

namespace {

IntVector scale_to_int(const QVector& v, const Integer& factor) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    const Rational s = Rational(factor) * x;
    if (!s.is_integer()) return {};
    out.push_back(s.numerator());
  }
  return out;
}

std::vector<IntVector> lattice_rows(std::size_t d, const std::vector<QVector>& alphas, std::size_t level,
                                    const Integer& denom) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector r(d, Integer(0));
    r[i] = denom;
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < level; ++j) rows.push_back(scale_to_int(alphas[j], denom));
  return rows;
}

}  // namespace

const Integer& CharacteristicData::n(std::size_t j) const {
  static const Integer one = 1;
  if (j == 0) return one;
  if (j > g) throw Error(ErrorKind::IndexOutOfRange, "n_" + std::to_string(j));
  return char_ints[j - 1];
}

QVector CharacteristicData::alpha(std::size_t j) const {
  if (j == 0) return QVector(d);
  if (j > g) throw Error(ErrorKind::IndexOutOfRange, "alpha_" + std::to_string(j));
  return alphas[j - 1];
}

QVector CharacteristicData::gamma(std::size_t j) const {
  if (j == 0) return QVector(d);
  if (j > g) throw Error(ErrorKind::IndexOutOfRange, "gamma_" + std::to_string(j));
  return gammas[j - 1];
}

Integer CharacteristicData::n_product(std::size_t from, std::size_t to) const {
  Integer p = 1;
  for (std::size_t j = from; j <= to; ++j) p *= n(j);
  return p;
}

CharacteristicData build(std::size_t d, const std::vector<QVector>& alphas) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "d must be positive");
  if (alphas.empty()) throw Error(ErrorKind::InvalidArgument, "at least one exponent is required");
  for (const auto& a : alphas) {
    if (a.size() != d) {
      throw Error(ErrorKind::DimensionMismatch, "exponent " + to_string(a) + " is not of dimension " +
                                                    std::to_string(d));
    }
    if (!all_nonnegative(a)) throw Error(ErrorKind::NegativeExponent, "exponent " + to_string(a));
  }
  if (alphas.front() == QVector(d)) throw Error(ErrorKind::OrderViolation, "alpha_1 is zero");
  for (std::size_t j = 0; j + 1 < alphas.size(); ++j) {
    if (!leq(alphas[j], alphas[j + 1]) || alphas[j] == alphas[j + 1]) {
      throw Error(ErrorKind::OrderViolation, "alpha_" + std::to_string(j + 1) + " = " + to_string(alphas[j]) +
                                                 " is not strictly below alpha_" + std::to_string(j + 2) +
                                                 " = " + to_string(alphas[j + 1]));
    }
  }

  CharacteristicData cd;
  cd.d = d;
  cd.g = alphas.size();
  cd.alphas = alphas;

  Integer denom = 1;
  for (const auto& a : alphas) {
    for (const auto& x : a) denom = lcm(denom, x.denominator());
  }
  cd.common_denominator = denom;

  for (std::size_t l = 0; l <= cd.g; ++l) {
    cd.scaled_lattice.push_back(hermite_normal_form(lattice_rows(d, alphas, l, denom)));
  }
  for (std::size_t j = 1; j <= cd.g; ++j) {
    const Integer nj = lattice_index(lattice_rows(d, alphas, j, denom), lattice_rows(d, alphas, j - 1, denom));
    if (nj == 1) {
      throw Error(ErrorKind::DegenerateIndex,
                  "alpha_" + std::to_string(j) + " = " + to_string(alphas[j - 1]) + " lies in M_" +
                      std::to_string(j - 1));
    }
    cd.char_ints.push_back(nj);
  }

  Integer total = 1;
  for (const auto& nj : cd.char_ints) total *= nj;
  cd.e.push_back(total);
  for (std::size_t j = 1; j <= cd.g; ++j) cd.e.push_back(cd.e.back() / cd.char_ints[j - 1]);

  cd.gammas.push_back(alphas[0]);
  for (std::size_t j = 1; j < cd.g; ++j) {
    cd.gammas.push_back(Rational(cd.char_ints[j - 1]) * cd.gammas[j - 1] + (alphas[j] - alphas[j - 1]));
  }

  cd.axis_mult.assign(d, std::vector<Integer>(cd.g + 1, Integer(1)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t l = 1; l <= cd.g; ++l) {
      cd.axis_mult[i][l] = lcm(cd.axis_mult[i][l - 1], alphas[l - 1][i].denominator());
    }
  }

  for (std::size_t l = 1; l <= cd.g; ++l) {
    if (!semigroup_represent(cd, l - 1, Rational(cd.n(l)) * cd.gamma(l))) {
      throw Error(ErrorKind::InternalInconsistency,
                  "n_" + std::to_string(l) + " gamma_" + std::to_string(l) + " is not in the semigroup");
    }
  }
  return cd;
}

IntVector primitive_axis_vector(const CharacteristicData& cd, std::size_t i, std::size_t level) {
  if (i < 1 || i > cd.d) throw Error(ErrorKind::IndexOutOfRange, "axis " + std::to_string(i));
  if (level > cd.g) throw Error(ErrorKind::IndexOutOfRange, "level " + std::to_string(level));
  IntVector v(cd.d, Integer(0));
  v[i - 1] = cd.axis_mult[i - 1][level];
  return v;
}

bool in_lattice_m(const CharacteristicData& cd, std::size_t level, const QVector& v) {
  if (level > cd.g) throw Error(ErrorKind::IndexOutOfRange, "level " + std::to_string(level));
  if (v.size() != cd.d) throw Error(ErrorKind::DimensionMismatch, "vector of dimension " + std::to_string(v.size()));
  const IntVector scaled = scale_to_int(v, cd.common_denominator);
  if (scaled.empty()) return false;
  return lattice_contains(cd.scaled_lattice[level], scaled);
}

std::optional<SemigroupRepresentation> semigroup_represent(const CharacteristicData& cd, std::size_t level,
                                                           const QVector& value) {
  if (level > cd.g) throw Error(ErrorKind::IndexOutOfRange, "level " + std::to_string(level));
  if (!in_lattice_m(cd, level, value)) return std::nullopt;
  // M_j / M_{j-1} is cyclic of order n_j generated by gamma_j, so exactly one
  // digit in [0, n_j) moves the remainder into M_{j-1}.
  std::vector<Integer> digits(level, Integer(0));
  QVector rest = value;
  for (std::size_t j = level; j >= 1; --j) {
    bool found = false;
    for (Integer k = 0; k < cd.n(j); ++k) {
      const QVector candidate = rest - Rational(k) * cd.gamma(j);
      if (in_lattice_m(cd, j - 1, candidate)) {
        digits[j - 1] = k;
        rest = candidate;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::InternalInconsistency, "no digit found at level " + std::to_string(j));
    }
  }
  if (!all_nonnegative(rest)) return std::nullopt;
  return SemigroupRepresentation{to_int_vector(rest), std::move(digits)};
}

}  // namespace qojump
