#include <gtest/gtest.h>

#include <random>

#include "fhollow/linalg.hpp"
#include "test_support.hpp"

using namespace fhollow;
using fhollow::testing::iv;
using fhollow::testing::rv;

TEST(Integer, SpillsToBignumAndBack) {
  Integer a(INT64_MAX);
  Integer b = a + Integer(1);
  EXPECT_FALSE(b.is_small());
  EXPECT_EQ(b.str(), "9223372036854775808");
  Integer c = b - Integer(1);
  EXPECT_TRUE(c.is_small());
  EXPECT_EQ(c, a);
  Integer big = a * a;
  EXPECT_EQ(big / a, a);
  EXPECT_EQ(Integer::parse("-123456789012345678901234567890").str(), "-123456789012345678901234567890");
}

TEST(Integer, FloorSemantics) {
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), Integer(-4));
  EXPECT_EQ(ceil_div(Integer(-7), Integer(2)), Integer(-3));
  EXPECT_EQ(floor_mod(Integer(-7), Integer(3)), Integer(2));
  Integer s, t;
  Integer g = extended_gcd(Integer(240), Integer(46), s, t);
  EXPECT_EQ(g, Integer(2));
  EXPECT_EQ(s * Integer(240) + t * Integer(46), g);
}

TEST(Rational, CanonicalForm) {
  Rational r(Integer(4), Integer(-6));
  EXPECT_EQ(r.num(), Integer(-2));
  EXPECT_EQ(r.den(), Integer(3));
  EXPECT_EQ(Rational(Integer(0), Integer(-5)).den(), Integer(1));
  EXPECT_EQ(Rational::parse("7/6").str(), "7/6");
  EXPECT_EQ(Rational::parse("-4/2").str(), "-2");
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, ArithmeticAcrossFastPathBoundary) {
  Rational a(Integer(INT64_MAX), Integer(3));
  Rational b = a * a - a * a;
  EXPECT_TRUE(b.is_zero());
  Rational c = a / a;
  EXPECT_EQ(c, Rational(1));
  EXPECT_LT(Rational::parse("5/4"), Rational::parse("4/3"));
  EXPECT_EQ(floor(Rational::parse("-7/2")), Integer(-4));
  EXPECT_EQ(ceil(Rational::parse("-7/2")), Integer(-3));
}

TEST(PrimitiveVector, Examples) {
  EXPECT_EQ(primitive_vector(iv({4, -6})), iv({2, -3}));
  EXPECT_EQ(primitive_vector(iv({0, 0, 5})), iv({0, 0, 1}));
  EXPECT_EQ(primitive_vector(iv({3, 5})), iv({3, 5}));
  try {
    primitive_vector(iv({0, 0}));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "zero vector has no primitive form");
  }
}

TEST(PrimitiveVector, Idempotent) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> e(-30, 30);
  for (int k = 0; k < 500; ++k) {
    IntVector v = iv({e(rng), e(rng), e(rng)});
    if (content(v).is_zero()) continue;
    IntVector p = primitive_vector(v);
    EXPECT_TRUE(content(p).is_one());
    EXPECT_EQ(primitive_vector(p), p);
  }
}

namespace {

void expect_hnf(const IntMatrix& a) {
  HermiteForm h = hermite_normal_form(a);
  EXPECT_EQ(h.u * a, h.h);
  Integer det = determinant(h.u);
  EXPECT_TRUE(det == Integer(1) || det == Integer(-1));
  // Pivots positive, entries above pivots reduced, zero rows last.
  size_t col = 0;
  for (size_t r = 0; r < h.h.rows(); ++r) {
    while (col < h.h.cols() && h.h(r, col).is_zero()) {
      for (size_t rr = r; rr < h.h.rows(); ++rr) EXPECT_TRUE(h.h(rr, col).is_zero());
      ++col;
    }
    if (col == h.h.cols()) {
      EXPECT_GE(r, h.rank);
      for (size_t c = 0; c < h.h.cols(); ++c) EXPECT_TRUE(h.h(r, c).is_zero());
      continue;
    }
    EXPECT_GT(h.h(r, col).sign(), 0);
    for (size_t above = 0; above < r; ++above) {
      EXPECT_GE(h.h(above, col).sign(), 0);
      EXPECT_LT(h.h(above, col), h.h(r, col));
    }
    ++col;
  }
}

}  // namespace

TEST(HermiteNormalForm, Examples) {
  HermiteForm id = hermite_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(id.h, IntMatrix::identity(2));
  EXPECT_EQ(id.u, IntMatrix::identity(2));
  IntMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_EQ(hermite_normal_form(swap).h, IntMatrix::identity(2));
}

TEST(HermiteNormalForm, RandomMatricesSatisfyDefinition) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int k = 0; k < 200; ++k) {
    IntMatrix a(3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) a(i, j) = e(rng);
    expect_hnf(a);
  }
  for (int k = 0; k < 100; ++k) {
    IntMatrix a(2, 4);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 4; ++j) a(i, j) = e(rng);
    expect_hnf(a);
  }
  IntMatrix deficient(3, 3);
  for (size_t j = 0; j < 3; ++j) {
    deficient(0, j) = static_cast<int>(j) + 1;
    deficient(1, j) = 2 * (static_cast<int>(j) + 1);
  }
  expect_hnf(deficient);
  EXPECT_EQ(hermite_normal_form(deficient).rank, 1u);
}

TEST(SolveSquare, Examples) {
  RatMatrix id = RatMatrix::identity(3);
  EXPECT_EQ(*solve_square(id, rv({"1/2", "3", "-4"})), rv({"1/2", "3", "-4"}));

  RatMatrix a(3, 3);
  const int rows[3][3] = {{0, 1, 0}, {0, 0, 1}, {1, -1, -1}};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) a(i, j) = rows[i][j];
  EXPECT_EQ(*solve_square(a, rv({"1", "1", "1"})), rv({"3", "1", "1"}));

  RatMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  EXPECT_FALSE(solve_square(singular, rv({"1", "1"})).has_value());
  EXPECT_THROW(solve_square(singular, rv({"1"})), std::invalid_argument);
}

TEST(SolveSquare, SubstitutionReproducesRightHandSide) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int k = 0; k < 200; ++k) {
    RatMatrix a(4, 4);
    RatVector b;
    for (size_t i = 0; i < 4; ++i) {
      for (size_t j = 0; j < 4; ++j) a(i, j) = Rational(Integer(e(rng)), Integer(1 + (rng() % 3)));
      b.push_back(Rational(e(rng)));
    }
    auto x = solve_square(a, b);
    if (!x) {
      EXPECT_TRUE(determinant(a).is_zero());
      continue;
    }
    for (size_t i = 0; i < 4; ++i) {
      Rational s;
      for (size_t j = 0; j < 4; ++j) s += a(i, j) * (*x)[j];
      EXPECT_EQ(s, b[i]);
    }
  }
}

TEST(Linalg, KernelVectorAndUnimodularInverse) {
  std::vector<IntVector> rows{iv({1, 2, 3}), iv({0, 1, 4})};
  IntVector k = kernel_vector(rows, 3);
  EXPECT_TRUE(content(k).is_one());
  for (const auto& r : rows) EXPECT_TRUE(dot(r, k).is_zero());

  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    IntMatrix u = fhollow::testing::random_unimodular(rng, 4);
    EXPECT_EQ(u * unimodular_inverse(u), IntMatrix::identity(4));
  }
  IntMatrix two = IntMatrix::identity(2);
  two(0, 0) = 2;
  EXPECT_THROW(unimodular_inverse(two), std::domain_error);
}
