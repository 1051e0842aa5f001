#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qojump/chardata.hpp"
#include "qojump/cyclotomic.hpp"
#include "qojump/polynomial.hpp"
#include "qojump/rational.hpp"

namespace qojump {

/// Finite fractional power series in x_1..x_d whose exponents have
/// denominators dividing n; coefficients live in Q(omega_n).
struct BranchSeries {
  std::size_t d = 0;
  unsigned long n = 1;
  std::map<QVector, CyclotomicNumber> terms;

  BranchSeries() = default;
  BranchSeries(std::size_t dim, unsigned long ramification) : d(dim), n(ramification) {}

  void add_term(const QVector& exponent, const CyclotomicNumber& coeff);
  void add_term(const QVector& exponent, const Rational& coeff);
  bool is_zero() const { return terms.empty(); }

  BranchSeries& operator+=(const BranchSeries& o);
  BranchSeries& operator-=(const BranchSeries& o);
  friend BranchSeries operator+(BranchSeries a, const BranchSeries& b) { return a += b; }
  friend BranchSeries operator-(BranchSeries a, const BranchSeries& b) { return a -= b; }
  friend BranchSeries operator*(const BranchSeries& a, const BranchSeries& b);

  friend bool operator==(const BranchSeries& a, const BranchSeries& b) {
    return a.d == b.d && a.n == b.n && a.terms == b.terms;
  }
  friend bool operator<(const BranchSeries& a, const BranchSeries& b) { return a.terms < b.terms; }

  std::string to_string() const;
};

/// Checks dimensions, nonnegativity and denominators; throws InvalidArgument.
void validate(const BranchSeries& zeta);

/// sum of x^alpha_j with unit coefficients
BranchSeries generic_branch(const CharacteristicData& cd);

/// Distinct images under x_i^(1/n) -> omega^(k_i) x_i^(1/n), sorted.
std::vector<BranchSeries> conjugates(const BranchSeries& zeta);

std::vector<QVector> characteristic_exponents(const BranchSeries& zeta);

/// zeta with the terms whose exponent is >= alpha_{j+1} removed (j = g keeps all).
BranchSeries truncation(const BranchSeries& zeta, const std::vector<QVector>& alphas, std::size_t j);

/// Minimal polynomial of the j-th truncation, of y-degree n_1...n_j.
Polynomial semiroot(const BranchSeries& zeta, std::size_t j);

/// The complete sequence of semi-roots (j = 0..g); the last one is f.
std::vector<Polynomial> semiroots(const BranchSeries& zeta);

/// h(x, tau) as a fractional series.
BranchSeries substitute_y(const Polynomial& h, const BranchSeries& tau);

struct ExpansionTerm {
  Rational coeff;
  IntVector exponent;  // dimension d+g+1

  bool operator==(const ExpansionTerm&) const = default;
};

struct GeneralizedExpansion {
  std::vector<ExpansionTerm> terms;  // sorted by exponent

  bool operator==(const GeneralizedExpansion&) const = default;
};

/// Expansion of a polynomial in generalized monomials of x_1..x_d and the
/// semi-roots, by cascaded Euclidean division in y.
GeneralizedExpansion expand(const Polynomial& h, const std::vector<Polynomial>& semiroots);

/// Re-substitutes the semi-roots into an expansion.
Polynomial evaluate(const GeneralizedExpansion& h, const std::vector<Polynomial>& semiroots);

}  // namespace qojump
