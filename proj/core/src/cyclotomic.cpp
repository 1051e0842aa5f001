#include "qojump/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "qojump/error.hpp"

namespace qojump {

namespace {

// exact division of integer polynomials, divisor monic
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = num[k + dn];
    for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= q[k] * den[j];
  }
  for (const auto& r : num) {
    if (r != 0) throw Error(ErrorKind::InternalInconsistency, "cyclotomic division left a remainder");
  }
  return q;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic order 0");
  static std::mutex mutex;
  static std::map<unsigned long, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_m for every proper divisor m of n
  std::vector<Integer> p(n + 1, Integer(0));
  p[0] = -1;
  p[n] = 1;
  for (unsigned long m = 1; m < n; ++m) {
    if (n % m == 0) p = divide_exact(p, cyclotomic_polynomial(m));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

CyclotomicNumber::CyclotomicNumber(unsigned long order, const Rational& value) : order_(order) {
  coeffs_.assign(cyclotomic_polynomial(order).size() - 1, Rational(0));
  coeffs_[0] = value;
}

CyclotomicNumber CyclotomicNumber::root_power(unsigned long order, long k) {
  CyclotomicNumber out(order, Rational(0));
  long r = k % static_cast<long>(order);
  if (r < 0) r += static_cast<long>(order);
  QVector dense(static_cast<std::size_t>(r) + 1, Rational(0));
  dense[static_cast<std::size_t>(r)] = 1;
  out.reduce(dense);
  out.coeffs_ = std::move(dense);
  return out;
}

void CyclotomicNumber::reduce(QVector& dense) const {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = dense.size(); k-- > deg;) {
    if (dense[k].is_zero()) continue;
    const Rational lead = dense[k];
    for (std::size_t j = 0; j <= deg; ++j) dense[k - deg + j] -= lead * Rational(phi[j]);
  }
  dense.resize(deg, Rational(0));
}

void CyclotomicNumber::check_order(const CyclotomicNumber& o) const {
  if (o.order_ != order_) {
    throw Error(ErrorKind::InvalidArgument, "cyclotomic orders " + std::to_string(order_) + " and " +
                                                std::to_string(o.order_) + " differ");
  }
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "not a rational number: " + to_string());
  return coeffs_[0];
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  check_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  check_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  check_order(o);
  QVector dense(2 * coeffs_.size(), Rational(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) dense[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  reduce(dense);
  coeffs_ = std::move(dense);
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string CyclotomicNumber::to_string() const {
  if (is_rational()) return coeffs_[0].to_string();
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[k].to_string() + ")";
    if (k > 0) s += "*w^" + std::to_string(k);
  }
  return s;
}

}  // namespace qojump
