#include "qojump/polynomial.hpp"

#include "qojump/error.hpp"

namespace qojump {

Polynomial Polynomial::constant(std::size_t d, const Rational& c) {
  Polynomial p(d);
  p.add_term(Monomial(d + 1, 0), c);
  return p;
}

Polynomial Polynomial::variable_y(std::size_t d) {
  Monomial m(d + 1, 0);
  m[d] = 1;
  return monomial(d, m);
}

Polynomial Polynomial::variable_x(std::size_t d, std::size_t i) {
  if (i < 1 || i > d) throw Error(ErrorKind::IndexOutOfRange, "x_" + std::to_string(i));
  Monomial m(d + 1, 0);
  m[i - 1] = 1;
  return monomial(d, m);
}

Polynomial Polynomial::monomial(std::size_t d, const Monomial& exps, const Rational& c) {
  if (exps.size() != d + 1) throw Error(ErrorKind::DimensionMismatch, "monomial size");
  for (long e : exps) {
    if (e < 0) throw Error(ErrorKind::NonPolynomialInput, "negative exponent");
  }
  Polynomial p(d);
  p.add_term(exps, c);
  return p;
}

void Polynomial::add_term(const Monomial& exps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

long Polynomial::degree_y() const {
  long deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m[d_]);
  return deg;
}

Polynomial Polynomial::coefficient_y(long k) const {
  Polynomial out(d_);
  for (const auto& [m, c] : terms_) {
    if (m[d_] != k) continue;
    Monomial x = m;
    x[d_] = 0;
    out.add_term(x, c);
  }
  return out;
}

void Polynomial::check(const Polynomial& o) const {
  if (o.d_ != d_) throw Error(ErrorKind::DimensionMismatch, "polynomials in different variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check(b);
  Polynomial out(a.d_);
  Polynomial::Monomial m(a.d_ + 1);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial result = constant(d_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // highest y-degree first, reading order otherwise
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k <= d_; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += k < d_ ? "x" + std::to_string(k + 1) : std::string("y");
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    Rational mag = c.sign() < 0 ? -c : c;
    std::string term;
    if (mono.empty()) {
      term = mag.to_string();
    } else if (mag == Rational(1)) {
      term = mono;
    } else {
      term = mag.to_string() + "*" + mono;
    }
    if (s.empty()) {
      s = c.sign() < 0 ? "-" + term : term;
    } else {
      s += c.sign() < 0 ? " - " + term : " + " + term;
    }
  }
  return s;
}

DivisionResult divide_monic_y(const Polynomial& h, const Polynomial& divisor) {
  const long dd = divisor.degree_y();
  if (dd < 0) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  const Polynomial lead = divisor.coefficient_y(dd);
  if (!(lead == Polynomial::constant(divisor.d(), Rational(1)))) {
    throw Error(ErrorKind::InvalidArgument, "divisor is not monic in y");
  }
  DivisionResult out{Polynomial(h.d()), h};
  const std::size_t d = h.d();
  while (out.remainder.degree_y() >= dd) {
    const long k = out.remainder.degree_y();
    Polynomial step = out.remainder.coefficient_y(k);
    Polynomial shifted(d);
    for (const auto& [m, c] : step.terms()) {
      Polynomial::Monomial e = m;
      e[d] = k - dd;
      shifted.add_term(e, c);
    }
    out.quotient += shifted;
    out.remainder -= shifted * divisor;
  }
  return out;
}

}  // namespace qojump
