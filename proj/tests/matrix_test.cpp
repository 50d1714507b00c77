#include "csurg/error.hpp"
#include "csurg/matrix.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using csurg::Rational;
using csurg::RationalVector;
using csurg::SquareMatrix;

TEST(Det, SmallCases) {
  EXPECT_EQ(csurg::det(SquareMatrix::identity(2)), Rational(1));
  EXPECT_EQ(csurg::det(SquareMatrix{{0, -1}, {-1, -2}}), Rational(-1));
  EXPECT_EQ(csurg::det(SquareMatrix{{0, -1, 0}, {-1, 0, -1}, {0, -1, -2}}), Rational(2));
  // tb = -2, n = 3 push-offs: n * tb + 1 = -5.
  const SquareMatrix pushoffs{{-1, -2, -2}, {-2, -1, -2}, {-2, -2, -1}};
  EXPECT_EQ(csurg::testing::cofactor_det(pushoffs), Rational(-5));
  EXPECT_EQ(csurg::det(pushoffs), Rational(-5));
}

TEST(Det, EmptyMatrixIsOne) { EXPECT_EQ(csurg::det(SquareMatrix()), Rational(1)); }

TEST(Det, NeedsPivotSwap) {
  EXPECT_EQ(csurg::det(SquareMatrix{{0, 1}, {1, 0}}), Rational(-1));
  EXPECT_EQ(csurg::det(SquareMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), Rational(-1));
  EXPECT_EQ(csurg::det(SquareMatrix{{0, 0}, {0, 5}}), Rational(0));
}

TEST(Det, RationalEntries) {
  const SquareMatrix m{{Rational(1, 2), Rational(1, 3)}, {Rational(-2, 5), Rational(7, 4)}};
  EXPECT_EQ(csurg::det(m), Rational(1, 2) * Rational(7, 4) - Rational(1, 3) * Rational(-2, 5));
}

TEST(Det, AgreesWithCofactorOracle) {
  std::mt19937 rng(7);
  int trials = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int t = 0; t < 200; ++t, ++trials) {
      const SquareMatrix m = csurg::testing::random_integer_matrix(rng, n, -9, 9);
      ASSERT_EQ(csurg::det(m), csurg::testing::cofactor_det(m)) << m;
    }
  }
  EXPECT_GE(trials, 1000);
}

TEST(Det, AgreesWithOracleOnSparseMatrices) {
  // Many zeros exercise the row-swap path.
  std::mt19937 rng(11);
  std::bernoulli_distribution zero(0.6);
  for (int t = 0; t < 300; ++t) {
    SquareMatrix dense = csurg::testing::random_integer_matrix(rng, 5, -3, 3);
    std::vector<Rational> e(dense.entries().begin(), dense.entries().end());
    for (auto& x : e)
      if (zero(rng)) x = 0;
    const SquareMatrix m(5, std::move(e));
    ASSERT_EQ(csurg::det(m), csurg::testing::cofactor_det(m)) << m;
  }
}

TEST(Det, DuplicatedRowGivesZero) {
  std::mt19937 rng(3);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int t = 0; t < 25; ++t) {
      const SquareMatrix base = csurg::testing::random_integer_matrix(rng, n, -9, 9);
      std::vector<Rational> e(base.entries().begin(), base.entries().end());
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      const std::size_t from = pick(rng);
      std::size_t to = pick(rng);
      if (to == from) to = (from + 1) % n;
      for (std::size_t j = 0; j < n; ++j) e[to * n + j] = e[from * n + j];
      ASSERT_EQ(csurg::det(SquareMatrix(n, std::move(e))), Rational(0));
    }
  }
}

TEST(Solve, Examples) {
  const RationalVector v{3, 5};
  EXPECT_EQ(csurg::solve(SquareMatrix::identity(2), v), v);

  // tb = -2, n = 2: each entry tb/(n tb + 1) = -2/-3.
  const SquareMatrix m{{-1, -2}, {-2, -1}};
  const RationalVector x = csurg::solve(m, RationalVector{-2, -2});
  EXPECT_EQ(x, (RationalVector{Rational(2, 3), Rational(2, 3)}));
}

TEST(Solve, MultiplyBackIsExact) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dist(-20, 20);
  int solved = 0;
  while (solved < 200) {
    const SquareMatrix m = csurg::testing::random_integer_matrix(rng, 4, -9, 9);
    if (csurg::det(m).is_zero()) continue;
    RationalVector v(4);
    for (auto& x : v) x = Rational(dist(rng), 1 + std::abs(dist(rng)));
    const RationalVector x = csurg::solve(m, v);
    ASSERT_EQ(m * x, v);
    ++solved;
  }
}

TEST(Solve, NeedsPivotSwap) {
  const SquareMatrix m{{0, -1}, {-1, -2}};
  const RationalVector v{-1, 0};
  EXPECT_EQ(m * csurg::solve(m, v), v);
}

TEST(Solve, Errors) {
  try {
    csurg::solve(SquareMatrix{{1, 2}, {2, 4}}, RationalVector{1, 1});
    FAIL();
  } catch (const csurg::Error& e) {
    EXPECT_EQ(e.kind(), csurg::ErrorKind::SingularMatrix);
  }
  try {
    csurg::solve(SquareMatrix::identity(2), RationalVector{1});
    FAIL();
  } catch (const csurg::Error& e) {
    EXPECT_EQ(e.kind(), csurg::ErrorKind::DimensionMismatch);
  }
  EXPECT_TRUE(csurg::solve(SquareMatrix(), RationalVector{}).empty());
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(csurg::inner_product(RationalVector{}, RationalVector{}), Rational(0));
  EXPECT_EQ(csurg::inner_product(RationalVector{1, 0}, RationalVector{0, 1}), Rational(0));
  // rot = 1, tb = -2, n = 2: 2 * (1 * (-2 / -3)) = 4/3.
  const Rational w = Rational(-2) / Rational(2 * -2 + 1);
  EXPECT_EQ(csurg::inner_product(RationalVector{1, 1}, RationalVector{w, w}), Rational(4, 3));
  try {
    csurg::inner_product(RationalVector{1}, RationalVector{1, 2});
    FAIL();
  } catch (const csurg::Error& e) {
    EXPECT_EQ(e.kind(), csurg::ErrorKind::DimensionMismatch);
  }
}

TEST(SquareMatrix, Construction) {
  EXPECT_THROW(SquareMatrix(2, std::vector<Rational>(3)), csurg::Error);
  EXPECT_TRUE((SquareMatrix{{1, 2}, {2, 1}}).is_symmetric());
  EXPECT_FALSE((SquareMatrix{{1, 2}, {3, 1}}).is_symmetric());
  EXPECT_TRUE((SquareMatrix{{1, 2}, {3, 1}}).is_integral());
}
