#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qojump {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Serializes as "p/q", or "p" when q = 1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Strict parser: optional sign, decimal digits, optional "/digits".
  /// Rejects empty strings, zero denominators and anything else ("3//2").
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;

  std::string to_string() const;
  /// Decimal rendering for display only.
  std::string to_decimal(int digits = 6) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& v);

using QVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

IntVector make_int_vector(std::initializer_list<long> values);
QVector make_qvector(std::initializer_list<Rational> values);
QVector to_qvector(const IntVector& v);

Rational dot(const QVector& a, const QVector& b);
Rational dot(const IntVector& a, const QVector& b);
Integer dot(const IntVector& a, const IntVector& b);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& v);
IntVector operator*(const Integer& s, const IntVector& v);

/// Coordinatewise order: a <= b iff a_i <= b_i for all i.
bool leq(const QVector& a, const QVector& b);
bool leq(const IntVector& a, const IntVector& b);

bool all_nonnegative(const QVector& v);
bool all_integer(const QVector& v);
IntVector to_int_vector(const QVector& v);  // throws unless all_integer

std::string to_string(const QVector& v);
std::string to_string(const IntVector& v);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace qojump
