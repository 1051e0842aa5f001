#include <gtest/gtest.h>

#include <random>

#include "qojump/cone.hpp"
#include "qojump/error.hpp"
#include "qojump/lattice.hpp"

using namespace qojump;

namespace {

IntVector iv(std::initializer_list<long> v) { return make_int_vector(v); }

QVector qv(std::initializer_list<long> v) { return to_qvector(make_int_vector(v)); }

// Small integer combinations of the rows, enumerated exhaustively.
bool brute_in_span(const std::vector<IntVector>& rows, const IntVector& target, int bound) {
  const std::size_t k = rows.size();
  std::vector<int> c(k, -bound);
  while (true) {
    IntVector s(target.size(), Integer(0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t j = 0; j < s.size(); ++j) s[j] += c[r] * rows[r][j];
    }
    if (s == target) return true;
    std::size_t p = 0;
    while (p < k && ++c[p] > bound) c[p++] = -bound;
    if (p == k) return false;
  }
}

}  // namespace

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-10/5").to_string(), "-2");
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").to_string(), "41152263004115226300411522630");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"3//2", "", "/2", "3/", "3/0", "1.5", "3/-2", " 3", "x"}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
}

TEST(Rational, FloorCeilAndOrder) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_LT(Rational(5, 24), Rational(15, 52));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}

TEST(Hnf, WorkedExample) {
  const std::vector<IntVector> rows{iv({2, 0}), iv({0, 2}), iv({3, 1})};
  const HermiteForm h = hermite_normal_form(rows);
  EXPECT_EQ(h.rank, 2u);
  ASSERT_EQ(h.rows.size(), 2u);
  EXPECT_EQ(h.rows[0], iv({1, 1}));
  EXPECT_EQ(h.rows[1], iv({0, 2}));
  for (long a = -5; a < 5; ++a) {
    for (long b = -5; b < 5; ++b) {
      EXPECT_EQ(lattice_contains(h, iv({a, b})), brute_in_span(rows, iv({a, b}), 6)) << a << "," << b;
    }
  }
}

TEST(Hnf, TrivialCases) {
  const HermiteForm id = hermite_normal_form({iv({1, 0}), iv({0, 1})});
  EXPECT_EQ(id.rank, 2u);
  EXPECT_EQ(id.rows[0], iv({1, 0}));
  EXPECT_EQ(id.rows[1], iv({0, 1}));
  EXPECT_EQ(hermite_normal_form({iv({0, 0})}).rank, 0u);
  EXPECT_EQ(hermite_normal_form({}).rank, 0u);
  EXPECT_THROW(hermite_normal_form({iv({1, 0}), iv({1})}), Error);
}

TEST(Hnf, RandomMatricesPreserveLattice) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> shape(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = shape(rng);
    const int cols = shape(rng);
    std::vector<IntVector> m(rows, IntVector(cols));
    for (auto& r : m) {
      for (auto& x : r) x = entry(rng);
    }
    const HermiteForm h = hermite_normal_form(m);
    for (const auto& r : m) EXPECT_TRUE(lattice_contains(h, r));
    const HermiteForm back = hermite_normal_form(h.rows);
    EXPECT_EQ(back.rows, h.rows);
    if (h.rank > 0) {
      const HermiteForm orig = h;
      for (const auto& r : h.rows) EXPECT_TRUE(lattice_contains(hermite_normal_form(m), r));
      for (std::size_t i = 1; i < orig.pivot_columns.size(); ++i) {
        EXPECT_LT(orig.pivot_columns[i - 1], orig.pivot_columns[i]);
      }
    }
  }
}

TEST(LatticeIndex, Examples) {
  // 2 M_1 and 2 M_0 for exponents with alpha_1 = (3/2, 1/2)
  const std::vector<IntVector> sup{iv({2, 0}), iv({0, 2}), iv({3, 1})};
  const std::vector<IntVector> sub{iv({2, 0}), iv({0, 2})};
  EXPECT_EQ(lattice_index(sup, sub), 2);
  EXPECT_EQ(lattice_index(sub, sub), 1);
  EXPECT_EQ(lattice_index({iv({1, 0}), iv({0, 1})}, {iv({2, 0}), iv({0, 2})}), 4);
}

TEST(LatticeIndex, ResidueCountOracle) {
  // the index of a sublattice of Z^2 equals the number of residues in a box of side det
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntVector> sub{IntVector{entry(rng), entry(rng)}, IntVector{entry(rng), entry(rng)}};
    if (hermite_normal_form(sub).rank < 2) continue;
    const Integer idx = lattice_index({iv({1, 0}), iv({0, 1})}, sub);
    const HermiteForm h = hermite_normal_form(sub);
    const long side = idx.get_si();
    std::vector<std::pair<long, long>> reps;
    for (long a = 0; a < side; ++a) {
      for (long b = 0; b < side; ++b) {
        bool fresh = true;
        for (const auto& [x, y] : reps) {
          if (lattice_contains(h, iv({a - x, b - y}))) {
            fresh = false;
            break;
          }
        }
        if (fresh) reps.emplace_back(a, b);
      }
    }
    EXPECT_EQ(static_cast<long>(reps.size()), side);
  }
}

TEST(LatticeIndex, Multiplicative) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3);
  int checked = 0;
  while (checked < 100) {
    std::vector<IntVector> a{IntVector{entry(rng), entry(rng)}, IntVector{entry(rng), entry(rng)}};
    if (hermite_normal_form(a).rank < 2) continue;
    std::vector<std::vector<Integer>> t1{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
    std::vector<std::vector<Integer>> t2{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
    auto mul = [](const std::vector<std::vector<Integer>>& t, const std::vector<IntVector>& m) {
      std::vector<IntVector> out(2, IntVector(2, Integer(0)));
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (int k = 0; k < 2; ++k) out[i][j] += t[i][k] * m[k][j];
        }
      }
      return out;
    };
    const auto b = mul(t1, a);
    const auto c = mul(t2, b);
    if (hermite_normal_form(c).rank < 2) continue;
    EXPECT_EQ(lattice_index(a, b) * lattice_index(b, c), lattice_index(a, c));
    ++checked;
  }
}

TEST(LatticeIndex, Rejections) {
  EXPECT_THROW(lattice_index({iv({1, 0})}, {iv({1, 0})}), Error);
  EXPECT_THROW(lattice_index({iv({2, 0}), iv({0, 2})}, {iv({1, 0}), iv({0, 1})}), Error);
}

TEST(Primitivize, Examples) {
  auto p = primitivize(iv({2, 0, 3, 6, 24}));
  EXPECT_EQ(p.primitive, iv({2, 0, 3, 6, 24}));
  EXPECT_EQ(p.scale, 1);
  p = primitivize(iv({4, 6}));
  EXPECT_EQ(p.primitive, iv({2, 3}));
  EXPECT_EQ(p.scale, 2);
  p = primitivize(iv({0, 0, 5}));
  EXPECT_EQ(p.primitive, iv({0, 0, 1}));
  EXPECT_EQ(p.scale, 5);
  EXPECT_THROW(primitivize(iv({0, 0})), Error);
}

TEST(Primitivize, ScalingProperty) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-20, 20);
  std::uniform_int_distribution<int> factor(1, 12);
  for (int t = 0; t < 200; ++t) {
    IntVector v{entry(rng), entry(rng), entry(rng)};
    if (content(v) == 0) continue;
    const Integer k = factor(rng);
    const auto base = primitivize(v);
    const auto scaled = primitivize(k * v);
    EXPECT_EQ(scaled.primitive, base.primitive);
    EXPECT_EQ(scaled.scale, k * base.scale);
  }
}

TEST(Cone, Examples) {
  const std::vector<QVector> quadrant{qv({1, 0}), qv({0, 1})};
  EXPECT_TRUE(cone_member(qv({1, 1}), quadrant));
  EXPECT_FALSE(cone_member(qv({-1, 0}), quadrant));
  // rho_1 for exponents (3/2,1/2),(7/4,1/2)
  const std::vector<QVector> rho1{qv({2, 0, 3, 6, 24}), qv({0, 2, 1, 2, 8})};
  const auto cert = cone_certificate(qv({2, 0, 3, 6, 24}), rho1);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ((*cert)[0], Rational(1));
  EXPECT_EQ((*cert)[1], Rational(0));
  EXPECT_FALSE(cone_member(qv({2, 0, 3, 6, 25}), rho1));
}

TEST(Cone, CertificatesReproducePoint) {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int t = 0; t < 200; ++t) {
    std::vector<QVector> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(QVector{entry(rng), entry(rng), entry(rng)});
    const QVector p{entry(rng), entry(rng), entry(rng)};
    const auto cert = cone_certificate(p, gens);
    if (!cert) continue;
    QVector sum(3);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      EXPECT_GE((*cert)[k], Rational(0));
      sum = sum + (*cert)[k] * gens[k];
    }
    EXPECT_EQ(sum, p);
  }
}

// Points built as grid combinations must be found; for the 2-D case the
// outcome is also checked against a coefficient grid over the full cone.
TEST(Cone, GridSearchOracle) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int dim = 2; dim <= 3; ++dim) {
    for (int t = 0; t < 150; ++t) {
      std::vector<QVector> gens;
      for (int k = 0; k < dim; ++k) {
        QVector g(dim);
        for (auto& x : g) x = entry(rng);
        gens.push_back(g);
      }
      QVector p(dim);
      for (auto& x : p) x = entry(rng);
      // grid of coefficients c_k in {0, 1/4, ..., 6}
      bool grid_hit = false;
      std::vector<int> c(dim, 0);
      while (!grid_hit) {
        QVector s(dim);
        for (int k = 0; k < dim; ++k) s = s + Rational(c[k], 4) * gens[k];
        if (s == p) grid_hit = true;
        int q = 0;
        while (q < dim && ++c[q] > 24) c[q++] = 0;
        if (q == dim) break;
      }
      const auto cert = cone_certificate(p, gens);
      if (grid_hit) EXPECT_TRUE(cert.has_value());
      // for full-rank generators the coefficients are unique, so an LP answer
      // lying on the grid must have been seen by the search
      std::vector<IntVector> rows;
      for (const auto& g : gens) rows.push_back(to_int_vector(g));
      if (cert && !grid_hit && hermite_normal_form(rows).rank == static_cast<std::size_t>(dim)) {
        bool on_grid = true;
        for (const auto& x : *cert) {
          if (!(Rational(4) * x).is_integer() || x > Rational(6)) on_grid = false;
        }
        EXPECT_FALSE(on_grid);
      }
    }
  }
}
