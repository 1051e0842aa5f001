#include "qojump/branch.hpp"

#include <algorithm>
#include <set>

#include "qojump/error.hpp"

namespace qojump {

void BranchSeries::add_term(const QVector& exponent, const CyclotomicNumber& coeff) {
  if (exponent.size() != d) throw Error(ErrorKind::DimensionMismatch, "series exponent " + qojump::to_string(exponent));
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void BranchSeries::add_term(const QVector& exponent, const Rational& coeff) {
  add_term(exponent, CyclotomicNumber(n, coeff));
}

BranchSeries& BranchSeries::operator+=(const BranchSeries& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

BranchSeries& BranchSeries::operator-=(const BranchSeries& o) {
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

BranchSeries operator*(const BranchSeries& a, const BranchSeries& b) {
  BranchSeries out(a.d, a.n);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string BranchSeries::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*x^" + qojump::to_string(e);
  }
  return s;
}

void validate(const BranchSeries& zeta) {
  if (zeta.d == 0 || zeta.n == 0) throw Error(ErrorKind::InvalidArgument, "series needs d >= 1 and n >= 1");
  for (const auto& [e, c] : zeta.terms) {
    if (e.size() != zeta.d) throw Error(ErrorKind::DimensionMismatch, "exponent " + to_string(e));
    if (!all_nonnegative(e)) throw Error(ErrorKind::NegativeExponent, "exponent " + to_string(e));
    for (const auto& x : e) {
      if (!(Rational(Integer(zeta.n)) * x).is_integer()) {
        throw Error(ErrorKind::InvalidArgument,
                    "exponent " + to_string(e) + " has a denominator not dividing n = " + std::to_string(zeta.n));
      }
    }
    if (c.order() != zeta.n) throw Error(ErrorKind::InvalidArgument, "coefficient of the wrong cyclotomic order");
  }
}

BranchSeries generic_branch(const CharacteristicData& cd) {
  BranchSeries zeta(cd.d, cd.common_denominator.get_ui());
  for (const auto& a : cd.alphas) zeta.add_term(a, Rational(1));
  return zeta;
}

namespace {

BranchSeries apply_phase(const BranchSeries& zeta, const std::vector<unsigned long>& k) {
  BranchSeries out(zeta.d, zeta.n);
  for (const auto& [e, c] : zeta.terms) {
    // <k, n e> mod n
    Integer phase = 0;
    for (std::size_t i = 0; i < zeta.d; ++i) {
      phase += Integer(static_cast<unsigned long>(k[i])) * (Rational(Integer(zeta.n)) * e[i]).numerator();
    }
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), phase.get_mpz_t(), zeta.n);
    out.add_term(e, c * CyclotomicNumber::root_power(zeta.n, static_cast<long>(r.get_ui())));
  }
  return out;
}

}  // namespace

std::vector<BranchSeries> conjugates(const BranchSeries& zeta) {
  validate(zeta);
  std::set<BranchSeries> seen;
  std::vector<unsigned long> k(zeta.d, 0);
  while (true) {
    seen.insert(apply_phase(zeta, k));
    std::size_t p = 0;
    while (p < zeta.d && ++k[p] == zeta.n) k[p++] = 0;
    if (p == zeta.d) break;
  }
  return {seen.begin(), seen.end()};
}

std::vector<QVector> characteristic_exponents(const BranchSeries& zeta) {
  std::set<QVector> found;
  for (const auto& other : conjugates(zeta)) {
    if (other == zeta) continue;
    const BranchSeries diff = zeta - other;
    const QVector* dominant = nullptr;
    for (const auto& [e, c] : diff.terms) {
      bool below_all = true;
      for (const auto& [f, c2] : diff.terms) {
        if (!leq(e, f)) {
          below_all = false;
          break;
        }
      }
      if (below_all) {
        dominant = &e;
        break;
      }
    }
    if (dominant == nullptr) {
      throw Error(ErrorKind::NotQuasiOrdinary, "a difference of conjugates has no dominating exponent: " +
                                                   diff.to_string());
    }
    found.insert(*dominant);
  }
  std::vector<QVector> out(found.begin(), found.end());
  for (std::size_t j = 0; j + 1 < out.size(); ++j) {
    if (!leq(out[j], out[j + 1])) {
      throw Error(ErrorKind::UnorderedExponents,
                  "characteristic exponents " + to_string(out[j]) + " and " + to_string(out[j + 1]) +
                      " are incomparable");
    }
  }
  return out;
}

BranchSeries truncation(const BranchSeries& zeta, const std::vector<QVector>& alphas, std::size_t j) {
  if (j > alphas.size()) throw Error(ErrorKind::IndexOutOfRange, "truncation index " + std::to_string(j));
  if (j == alphas.size()) return zeta;
  BranchSeries out(zeta.d, zeta.n);
  for (const auto& [e, c] : zeta.terms) {
    if (!leq(alphas[j], e)) out.add_term(e, c);
  }
  return out;
}

namespace {

Polynomial orbit_product(const BranchSeries& tau, std::size_t expected_degree) {
  const auto orbit = conjugates(tau);
  if (orbit.size() != expected_degree) {
    throw Error(ErrorKind::InternalInconsistency, "truncation orbit has " + std::to_string(orbit.size()) +
                                                      " elements, expected " + std::to_string(expected_degree));
  }
  // coefficients by y-degree
  std::vector<BranchSeries> poly{BranchSeries(tau.d, tau.n)};
  poly[0].add_term(QVector(tau.d), Rational(1));
  for (const auto& root : orbit) {
    std::vector<BranchSeries> next(poly.size() + 1, BranchSeries(tau.d, tau.n));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= root * poly[k];
    }
    poly = std::move(next);
  }
  Polynomial out(tau.d);
  for (std::size_t k = 0; k < poly.size(); ++k) {
    for (const auto& [e, c] : poly[k].terms) {
      if (!c.is_rational()) {
        throw Error(ErrorKind::InternalInconsistency, "semi-root coefficient " + c.to_string() + " is not rational");
      }
      if (!all_integer(e)) {
        throw Error(ErrorKind::InternalInconsistency, "semi-root exponent " + to_string(e) + " is not integral");
      }
      Polynomial::Monomial m(tau.d + 1);
      for (std::size_t i = 0; i < tau.d; ++i) m[i] = e[i].numerator().get_si();
      m[tau.d] = static_cast<long>(k);
      out.add_term(m, c.rational_value());
    }
  }
  return out;
}

}  // namespace

std::vector<Polynomial> semiroots(const BranchSeries& zeta) {
  const auto alphas = characteristic_exponents(zeta);
  if (alphas.empty()) throw Error(ErrorKind::InvalidArgument, "the series has no characteristic exponents");
  const auto cd = build(zeta.d, alphas);
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j <= cd.g; ++j) {
    out.push_back(orbit_product(truncation(zeta, alphas, j), cd.n_product(1, j).get_ui()));
  }
  return out;
}

Polynomial semiroot(const BranchSeries& zeta, std::size_t j) {
  const auto alphas = characteristic_exponents(zeta);
  if (alphas.empty()) throw Error(ErrorKind::InvalidArgument, "the series has no characteristic exponents");
  if (j > alphas.size()) throw Error(ErrorKind::IndexOutOfRange, "semi-root index " + std::to_string(j));
  const auto cd = build(zeta.d, alphas);
  return orbit_product(truncation(zeta, alphas, j), cd.n_product(1, j).get_ui());
}

BranchSeries substitute_y(const Polynomial& h, const BranchSeries& tau) {
  if (h.d() != tau.d) throw Error(ErrorKind::DimensionMismatch, "substitution dimension");
  BranchSeries out(tau.d, tau.n);
  const long deg = h.degree_y();
  std::vector<BranchSeries> powers;
  BranchSeries one(tau.d, tau.n);
  one.add_term(QVector(tau.d), Rational(1));
  powers.push_back(one);
  for (long k = 1; k <= deg; ++k) powers.push_back(powers.back() * tau);
  for (const auto& [m, c] : h.terms()) {
    BranchSeries mono(tau.d, tau.n);
    QVector e(tau.d);
    for (std::size_t i = 0; i < tau.d; ++i) e[i] = Rational(m[i]);
    mono.add_term(e, c);
    out += mono * powers[static_cast<std::size_t>(m[tau.d])];
  }
  return out;
}

namespace {

void expand_level(const Polynomial& h, const std::vector<Polynomial>& roots, std::size_t level, IntVector& exps,
                  std::map<IntVector, Rational>& acc) {
  const std::size_t d = h.d();
  if (h.is_zero()) return;
  // digits of h in base roots[level]
  Polynomial rest = h;
  long power = 0;
  while (!rest.is_zero()) {
    DivisionResult qr = divide_monic_y(rest, roots[level]);
    exps[d + level] = power;
    if (level == 0) {
      for (const auto& [m, c] : qr.remainder.terms()) {
        for (std::size_t i = 0; i < d; ++i) exps[i] = m[i];
        auto [it, inserted] = acc.emplace(exps, c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
      for (std::size_t i = 0; i < d; ++i) exps[i] = 0;
    } else {
      expand_level(qr.remainder, roots, level - 1, exps, acc);
    }
    exps[d + level] = 0;
    rest = std::move(qr.quotient);
    ++power;
  }
}

void check_semiroots(const std::vector<Polynomial>& roots) {
  if (roots.empty()) throw Error(ErrorKind::InvalidArgument, "no semi-roots given");
  long prev = 1;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const long deg = roots[k].degree_y();
    if (deg < 1 || deg % prev != 0 || (k == 0 && deg != 1) || (k > 0 && deg == prev)) {
      throw Error(ErrorKind::InvalidArgument, "semi-root degrees must be 1 and then strictly increasing multiples");
    }
    prev = deg;
  }
}

}  // namespace

GeneralizedExpansion expand(const Polynomial& h, const std::vector<Polynomial>& roots) {
  check_semiroots(roots);
  const std::size_t d = h.d();
  for (const auto& [m, c] : h.terms()) {
    for (long e : m) {
      if (e < 0) throw Error(ErrorKind::NonPolynomialInput, "negative exponent in " + h.to_string());
    }
  }
  std::map<IntVector, Rational> acc;
  IntVector exps(d + roots.size(), Integer(0));
  expand_level(h, roots, roots.size() - 1, exps, acc);
  GeneralizedExpansion out;
  for (auto& [e, c] : acc) out.terms.push_back({c, e});
  return out;
}

Polynomial evaluate(const GeneralizedExpansion& h, const std::vector<Polynomial>& roots) {
  if (roots.empty()) throw Error(ErrorKind::InvalidArgument, "no semi-roots given");
  const std::size_t d = roots.front().d();
  Polynomial out(d);
  for (const auto& t : h.terms) {
    if (t.exponent.size() != d + roots.size()) throw Error(ErrorKind::DimensionMismatch, "expansion exponent");
    Polynomial::Monomial m(d + 1, 0);
    for (std::size_t i = 0; i < d; ++i) m[i] = t.exponent[i].get_si();
    Polynomial term = Polynomial::monomial(d, m, t.coeff);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const unsigned long p = t.exponent[d + k].get_ui();
      if (p > 0) term = term * roots[k].pow(p);
    }
    out += term;
  }
  return out;
}

}  // namespace qojump
