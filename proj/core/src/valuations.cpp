#include "qojump/valuations.hpp"

#include <algorithm>
#include <map>

#include "qojump/error.hpp"
#include "qojump/lattice.hpp"

namespace qojump {

namespace {

void check_level(const CharacteristicData& cd, std::size_t level) {
  if (level > cd.g) throw Error(ErrorKind::IndexOutOfRange, "level " + std::to_string(level));
}

void check_point(const CharacteristicData& cd, const QuasiMonomialPoint& p) {
  check_level(cd, p.level);
  if (p.base.size() != cd.d) throw Error(ErrorKind::DimensionMismatch, "point base " + to_string(p.base));
  if (!all_nonnegative(p.base) || p.height.sign() < 0) {
    throw Error(ErrorKind::InvalidArgument, "point outside the positive orthant");
  }
}

}  // namespace

QVector trop_embed(const CharacteristicData& cd, std::size_t level, const QVector& v) {
  check_level(cd, level);
  if (v.size() != cd.d) throw Error(ErrorKind::DimensionMismatch, "vector " + to_string(v));
  if (!all_nonnegative(v)) throw Error(ErrorKind::InvalidArgument, "negative input " + to_string(v));
  QVector out = v;
  const Rational base = dot(v, cd.gamma(level));
  for (std::size_t i = 1; i <= cd.g + 1; ++i) {
    if (i <= level) {
      out.push_back(dot(v, cd.gamma(i)));
    } else {
      out.push_back(Rational(cd.n_product(level, i - 1)) * base);
    }
  }
  return out;
}

IntVector trop_embed(const CharacteristicData& cd, std::size_t level, const IntVector& v) {
  return to_int_vector(trop_embed(cd, level, to_qvector(v)));
}

Rational value_on_semiroot(const CharacteristicData& cd, const QuasiMonomialPoint& point, std::size_t j) {
  check_point(cd, point);
  if (j < 1 || j > cd.ambient_dim()) throw Error(ErrorKind::IndexOutOfRange, "x_" + std::to_string(j));
  const QVector& v = point.base;
  if (j <= cd.d) return v[j - 1];
  const std::size_t s = j - cd.d - 1;
  const std::size_t l = point.level;
  if (s < l) return dot(v, cd.gamma(s + 1));
  const Rational lead = Rational(cd.n_product(l, s)) * dot(v, cd.gamma(l));
  if (s == l) return lead + point.height;
  const Rational next = dot(v, cd.alpha(l + 1) - cd.alpha(l));
  const Rational tail = std::min(next, point.height) * Rational(cd.n(l + 1));
  return lead + Rational(cd.n_product(l + 2, s)) * tail;
}

void check_expansion(const CharacteristicData& cd, const GeneralizedExpansion& h) {
  for (const auto& t : h.terms) {
    if (t.exponent.size() != cd.ambient_dim()) {
      throw Error(ErrorKind::DimensionMismatch, "expansion exponent " + to_string(t.exponent));
    }
    for (const auto& x : t.exponent) {
      if (x < 0) throw Error(ErrorKind::PreconditionViolated, "negative expansion exponent");
    }
    // x_{d+j} carries the digit bounded by n_j
    for (std::size_t j = 1; j <= cd.g; ++j) {
      if (t.exponent[cd.d + j - 1] >= cd.n(j)) {
        throw Error(ErrorKind::PreconditionViolated,
                    "expansion digit of x_" + std::to_string(cd.d + j) + " is not below n_" + std::to_string(j));
      }
    }
  }
}

Rational value_on_expansion(const CharacteristicData& cd, const QuasiMonomialPoint& point,
                            const GeneralizedExpansion& h) {
  check_point(cd, point);
  if (h.terms.empty()) throw Error(ErrorKind::EmptyExpansion, "expansion has no terms");
  check_expansion(cd, h);
  if (point.level < cd.g) {
    const Rational bound = dot(point.base, cd.alpha(point.level + 1) - cd.alpha(point.level));
    if (point.height > bound) {
      throw Error(ErrorKind::PreconditionViolated, "height " + point.height.to_string() + " exceeds " +
                                                       bound.to_string() + " at level " +
                                                       std::to_string(point.level));
    }
  }
  QVector values;
  for (std::size_t j = 1; j <= cd.ambient_dim(); ++j) values.push_back(value_on_semiroot(cd, point, j));
  Rational best;
  bool first = true;
  for (const auto& t : h.terms) {
    const Rational v = dot(t.exponent, values);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

QVector log_discrepancy_vector(const CharacteristicData& cd, std::size_t level) {
  check_level(cd, level);
  QVector out = cd.alpha(level);
  for (auto& x : out) x += Rational(1);
  out.push_back(Rational(1));
  return out;
}

namespace {

bool in_dual_lattice(const CharacteristicData& cd, std::size_t level, const QVector& u) {
  for (const auto& x : u) {
    if (!x.is_integer()) return false;
  }
  for (std::size_t j = 1; j <= level; ++j) {
    const QVector head(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(cd.d));
    if (!dot(head, cd.alpha(j)).is_integer()) return false;
  }
  return true;
}

}  // namespace

Rational log_discrepancy(const CharacteristicData& cd, std::size_t level, const IntVector& u) {
  check_level(cd, level);
  if (u.size() != cd.d + 1) throw Error(ErrorKind::DimensionMismatch, "vector " + to_string(u));
  for (const auto& x : u) {
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "vector " + to_string(u) + " is not in the orthant");
  }
  const QVector uq = to_qvector(u);
  if (!in_dual_lattice(cd, level, uq)) {
    throw Error(ErrorKind::NotInLattice, to_string(u) + " does not pair integrally with the exponents");
  }
  const Integer c = content(u);
  if (c == 0) throw Error(ErrorKind::NotPrimitive, "zero vector");
  for (Integer k = 2; k <= c; ++k) {
    if (c % k != 0) continue;
    if (in_dual_lattice(cd, level, Rational(1, k) * uq)) {
      throw Error(ErrorKind::NotPrimitive, to_string(u) + " is divisible by " + to_string(k) + " in the lattice");
    }
  }
  return dot(uq, log_discrepancy_vector(cd, level));
}

std::vector<const DivisorRecord*> DivisorTable::exceptional() const {
  std::vector<const DivisorRecord*> out;
  for (const auto& r : records) {
    if (r.exceptional) out.push_back(&r);
  }
  return out;
}

DivisorTable divisor_table(const CharacteristicData& cd) {
  std::vector<DivisorRecord> raw;
  const std::size_t dim = cd.ambient_dim();
  for (std::size_t l = 0; l <= cd.g; ++l) {
    for (std::size_t i = 1; i <= cd.d; ++i) {
      DivisorRecord r;
      r.id = "D_" + std::to_string(i) + "^(" + std::to_string(l) + ")";
      r.level = l;
      r.axis = i;
      const IntVector eps = primitive_axis_vector(cd, i, l);
      r.lattice_vector = eps;
      r.lattice_vector.push_back(0);
      r.trop = trop_embed(cd, l, eps);
      r.log_discrepancy = log_discrepancy(cd, l, r.lattice_vector).numerator();
      bool is_axis = false;
      for (std::size_t a = 0; a < cd.d; ++a) {
        IntVector unit(dim, Integer(0));
        unit[a] = 1;
        if (r.trop == unit) is_axis = true;
      }
      r.exceptional = !is_axis;
      raw.push_back(std::move(r));
    }
    // strict transform of the semi-root x_{d+l+1}
    DivisorRecord s;
    s.id = "S_" + std::to_string(cd.d + l + 1);
    s.level = l;
    s.axis = cd.d + 1;
    s.lattice_vector.assign(cd.d + 1, Integer(0));
    s.lattice_vector[cd.d] = 1;
    s.trop.assign(dim, Integer(0));
    s.trop[cd.d + l] = 1;
    s.log_discrepancy = 1;
    s.exceptional = false;
    raw.push_back(std::move(s));
  }
  std::stable_sort(raw.begin(), raw.end(), [](const DivisorRecord& a, const DivisorRecord& b) {
    return a.level != b.level ? a.level < b.level : a.axis < b.axis;
  });

  DivisorTable table;
  std::map<IntVector, std::size_t> by_trop;
  for (auto& r : raw) {
    auto it = by_trop.find(r.trop);
    if (it != by_trop.end()) {
      DivisorRecord& keep = table.records[it->second];
      if (keep.log_discrepancy != r.log_discrepancy) {
        throw Error(ErrorKind::InternalInconsistency, keep.id + " and " + r.id + " share a valuation but have " +
                                                          "log-discrepancies " + to_string(keep.log_discrepancy) +
                                                          " and " + to_string(r.log_discrepancy));
      }
      keep.aliases.push_back(r.id);
      continue;
    }
    if (primitivize(r.trop).scale != 1) {
      table.diagnostics.push_back(r.id + ": valuation vector " + to_string(r.trop) + " is not primitive");
    }
    by_trop.emplace(r.trop, table.records.size());
    table.records.push_back(std::move(r));
  }
  return table;
}

}  // namespace qojump
