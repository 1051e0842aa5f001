#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qojump/rational.hpp"

namespace qojump {

/// Polynomial in x_1..x_d and y with rational coefficients. A monomial key
/// holds the d exponents of x followed by the exponent of y.
class Polynomial {
 public:
  using Monomial = std::vector<long>;

  Polynomial() = default;
  explicit Polynomial(std::size_t d) : d_(d) {}

  static Polynomial constant(std::size_t d, const Rational& c);
  static Polynomial variable_y(std::size_t d);
  static Polynomial variable_x(std::size_t d, std::size_t i);  // i is 1-based
  static Polynomial monomial(std::size_t d, const Monomial& exps, const Rational& c = Rational(1));

  std::size_t d() const { return d_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^exps y^k to this polynomial, dropping the term if it cancels.
  void add_term(const Monomial& exps, const Rational& c);

  long degree_y() const;  // -1 for the zero polynomial
  /// Coefficient of y^k as a polynomial with y-degree 0.
  Polynomial coefficient_y(long k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned long k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check(const Polynomial& o) const;

  std::size_t d_ = 0;
  std::map<Monomial, Rational> terms_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division in y by a divisor that is monic in y.
DivisionResult divide_monic_y(const Polynomial& h, const Polynomial& divisor);

}  // namespace qojump
