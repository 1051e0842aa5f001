#include "qojump/rational.hpp"

#include <cctype>
#include <sstream>

#include "qojump/error.hpp"

namespace qojump {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::DegenerateIndex: return "DegenerateIndex";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::NotQuasiOrdinary: return "NotQuasiOrdinary";
    case ErrorKind::UnorderedExponents: return "UnorderedExponents";
    case ErrorKind::NonPolynomialInput: return "NonPolynomialInput";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::EmptyExpansion: return "EmptyExpansion";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NoExceptionalDivisor: return "NoExceptionalDivisor";
    case ErrorKind::OutsideSupport: return "OutsideSupport";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw Error(ErrorKind::Parse, "malformed integer '" + std::string(text) + "'");
  }
  Integer v(std::string(body), 10);
  return negative ? Integer(-v) : v;
}

std::string to_string(const Integer& v) { return v.get_str(10); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), d);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::string Rational::to_decimal(int digits) const {
  mpf_class f(value_, 128);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << f;
  return os.str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

QVector make_qvector(std::initializer_list<Rational> values) { return QVector(values); }

QVector to_qvector(const IntVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "vectors of dimension " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

Rational dot(const QVector& a, const QVector& b) {
  require_same_dim(a.size(), b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const QVector& b) {
  require_same_dim(a.size(), b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  require_same_dim(a.size(), b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector operator+(const QVector& a, const QVector& b) {
  require_same_dim(a.size(), b.size());
  QVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

QVector operator-(const QVector& a, const QVector& b) {
  require_same_dim(a.size(), b.size());
  QVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

QVector operator*(const Rational& s, const QVector& v) {
  QVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

IntVector operator*(const Integer& s, const IntVector& v) {
  IntVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

bool leq(const QVector& a, const QVector& b) {
  require_same_dim(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool leq(const IntVector& a, const IntVector& b) {
  require_same_dim(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool all_nonnegative(const QVector& v) {
  for (const auto& x : v) {
    if (x.sign() < 0) return false;
  }
  return true;
}

bool all_integer(const QVector& v) {
  for (const auto& x : v) {
    if (!x.is_integer()) return false;
  }
  return true;
}

IntVector to_int_vector(const QVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_integer()) {
      throw Error(ErrorKind::InvalidArgument, "non-integral entry " + x.to_string());
    }
    out.push_back(x.numerator());
  }
  return out;
}

std::string to_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + ")";
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str(10);
  }
  return s + ")";
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace qojump
