#include <gtest/gtest.h>

#include <random>

#include "qojump/chardata.hpp"
#include "qojump/error.hpp"
#include "random_data.hpp"

using namespace qojump;

namespace {

QVector q(std::initializer_list<const char*> xs) {
  QVector v;
  for (const char* x : xs) v.push_back(Rational::parse(x));
  return v;
}

CharacteristicData example() { return build(2, {q({"3/2", "1/2"}), q({"7/4", "1/2"})}); }

}  // namespace

TEST(Build, WorkedExampleInvariants) {
  const auto cd = example();
  EXPECT_EQ(cd.char_ints, (std::vector<Integer>{2, 4}));
  EXPECT_EQ(cd.e, (std::vector<Integer>{8, 4, 1}));
  EXPECT_EQ(cd.gammas[0], q({"3/2", "1/2"}));
  EXPECT_EQ(cd.gammas[1], q({"13/4", "1"}));
  EXPECT_EQ(cd.axis_mult[0], (std::vector<Integer>{1, 2, 4}));
  EXPECT_EQ(cd.axis_mult[1], (std::vector<Integer>{1, 2, 2}));
}

TEST(Build, Cusp) {
  const auto cd = build(1, {q({"3/2"})});
  EXPECT_EQ(cd.char_ints, (std::vector<Integer>{2}));
  EXPECT_EQ(cd.gammas[0], q({"3/2"}));
  EXPECT_EQ(cd.axis_mult[0], (std::vector<Integer>{1, 2}));
}

TEST(Build, Rejections) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of([] { build(2, {q({"1/2", "0"}), q({"1/2", "0"})}); }), ErrorKind::OrderViolation);
  EXPECT_EQ(kind_of([] { build(2, {q({"1/2", "1"}), q({"1/3", "2"})}); }), ErrorKind::OrderViolation);
  EXPECT_EQ(kind_of([] { build(1, {q({"1/2"}), q({"3/2"})}); }), ErrorKind::DegenerateIndex);
  EXPECT_EQ(kind_of([] { build(1, {q({"2"})}); }), ErrorKind::DegenerateIndex);
  EXPECT_EQ(kind_of([] { build(1, {q({"-1/2"})}); }), ErrorKind::NegativeExponent);
  EXPECT_THROW(build(2, {}), Error);
}

TEST(AxisVector, Examples) {
  const auto cd = example();
  EXPECT_EQ(primitive_axis_vector(cd, 1, 2), make_int_vector({4, 0}));
  EXPECT_EQ(primitive_axis_vector(cd, 2, 2), make_int_vector({0, 2}));
  EXPECT_EQ(primitive_axis_vector(cd, 2, 0), make_int_vector({0, 1}));
  EXPECT_THROW(primitive_axis_vector(cd, 3, 0), Error);
  EXPECT_THROW(primitive_axis_vector(cd, 1, 3), Error);
}

TEST(AxisVector, MinimalIntegralPairing) {
  std::mt19937 rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto cd = testdata::random_chardata(rng);
    for (std::size_t l = 0; l <= cd.g; ++l) {
      for (std::size_t i = 1; i <= cd.d; ++i) {
        const Integer k = cd.axis_mult[i - 1][l];
        for (Integer c = 1; c <= k; ++c) {
          bool integral = true;
          for (std::size_t j = 1; j <= l; ++j) {
            if (!(Rational(c) * cd.alpha(j)[i - 1]).is_integer()) integral = false;
          }
          EXPECT_EQ(integral, c == k);
        }
        if (l < cd.g) EXPECT_EQ(cd.axis_mult[i - 1][l + 1] % k, 0);
      }
    }
    for (std::size_t i = 0; i < cd.d; ++i) EXPECT_EQ(cd.degree() % cd.axis_mult[i][cd.g], 0);
  }
}

TEST(Semigroup, Examples) {
  const auto cd = example();
  auto r = semigroup_represent(cd, 2, q({"13/4", "1"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->u, make_int_vector({0, 0}));
  EXPECT_EQ(r->digits, (std::vector<Integer>{0, 1}));
  r = semigroup_represent(cd, 1, q({"3", "1"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->u, make_int_vector({3, 1}));
  EXPECT_EQ(r->digits, (std::vector<Integer>{0}));
  EXPECT_FALSE(semigroup_represent(cd, 1, q({"1/2", "0"})));
}

// brute force over digits and a box of u
TEST(Semigroup, BruteForceOracle) {
  const auto cd = example();
  for (int a = 0; a <= 16; ++a) {
    for (int b = 0; b <= 8; ++b) {
      const QVector target{Rational(a, 4), Rational(b, 2)};
      std::optional<SemigroupRepresentation> expect;
      for (int i1 = 0; i1 < 2; ++i1) {
        for (int i2 = 0; i2 < 4; ++i2) {
          const QVector rest = target - Rational(i1) * cd.gamma(1) - Rational(i2) * cd.gamma(2);
          if (all_integer(rest) && all_nonnegative(rest)) {
            expect = SemigroupRepresentation{to_int_vector(rest), {i1, i2}};
          }
        }
      }
      EXPECT_EQ(semigroup_represent(cd, 2, target), expect) << to_string(target);
    }
  }
}

TEST(Semigroup, RoundTripAndRelations) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> small(0, 6);
  for (int t = 0; t < 250; ++t) {
    const auto cd = testdata::random_chardata(rng);
    for (std::size_t l = 1; l <= cd.g; ++l) {
      ASSERT_TRUE(semigroup_represent(cd, l - 1, Rational(cd.n(l)) * cd.gamma(l)));
      if (l < cd.g) {
        EXPECT_EQ(cd.gamma(l + 1) - Rational(cd.n(l)) * cd.gamma(l), cd.alpha(l + 1) - cd.alpha(l));
      }
    }
    SemigroupRepresentation rep;
    QVector value(cd.d);
    for (std::size_t i = 0; i < cd.d; ++i) {
      rep.u.push_back(small(rng));
      value[i] = rep.u.back();
    }
    for (std::size_t j = 1; j <= cd.g; ++j) {
      std::uniform_int_distribution<long> digit(0, cd.n(j).get_si() - 1);
      rep.digits.push_back(digit(rng));
      value = value + Rational(rep.digits.back()) * cd.gamma(j);
    }
    EXPECT_EQ(semigroup_represent(cd, cd.g, value), rep);
  }
}
