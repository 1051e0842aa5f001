#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qojump/rational.hpp"

namespace qojump {

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(unsigned long n);

/// Element of Q(omega), omega a primitive n-th root of unity, stored densely
/// modulo Phi_n.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;  // zero of Q(omega_1) = Q
  CyclotomicNumber(unsigned long order, const Rational& value);

  /// omega^k
  static CyclotomicNumber root_power(unsigned long order, long k);

  unsigned long order() const { return order_; }
  const QVector& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  CyclotomicNumber operator-() const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.coeffs_ < b.coeffs_;
  }

  std::string to_string() const;

 private:
  void check_order(const CyclotomicNumber& o) const;
  void reduce(QVector& dense) const;

  unsigned long order_ = 1;
  QVector coeffs_{Rational(0)};
};

}  // namespace qojump
