#include <gtest/gtest.h>

#include <random>
#include <set>

#include "injgen/matrix.hpp"

using namespace injgen;

namespace {

Matrix random_matrix(const Field& f, std::mt19937_64& gen, std::size_t rows, std::size_t cols, int density = 2) {
  std::uniform_int_distribution<int> coin(0, density);
  std::uniform_int_distribution<std::int64_t> val(-4, 4);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(gen) != 0) m.set(r, c, f.from_int(val(gen)));
  return m;
}

// Size of the image of m over a small prime field, by enumerating all inputs.
std::size_t image_size(const Matrix& m) {
  const Field& f = m.field();
  std::int64_t p = f.characteristic();
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> digits(m.cols(), 0);
  while (true) {
    Matrix v(f, m.cols(), 1);
    for (std::size_t i = 0; i < m.cols(); ++i) v.set(i, 0, f.from_int(digits[i]));
    Matrix w = m * v;
    std::vector<std::int64_t> key;
    for (std::size_t i = 0; i < w.rows(); ++i) key.push_back(w.at(i, 0).residue());
    seen.insert(key);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return seen.size();
}

std::size_t int_pow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(Field, PrimeArithmetic) {
  Field f = Field::prime(5);
  EXPECT_EQ(f.mul(f.from_int(2), f.from_int(3)), f.one());
  EXPECT_EQ(f.inv(f.from_int(2)), f.from_int(3));
  EXPECT_EQ(f.from_int(-1), f.from_int(4));
  EXPECT_EQ(f.pow(f.from_int(2), 4), f.one());
  EXPECT_THROW(f.inv(f.zero()), std::exception);
}

TEST(Field, RationalsAreCanonical) {
  Field q = Field::rationals();
  EXPECT_EQ(q.from_fraction(2, 4), q.from_fraction(-1, -2));
  EXPECT_EQ(q.to_string(q.from_fraction(3, -6)), "-1/2");
  EXPECT_EQ(q.to_string(q.from_int(7)), "7");
  EXPECT_EQ(q.parse_element("4/6"), q.from_fraction(2, 3));
  EXPECT_EQ(q.parse_element("1/-2"), q.from_fraction(-1, 2));
}

TEST(Field, Parse) {
  EXPECT_EQ(Field::parse("fp:7"), Field::prime(7));
  EXPECT_EQ(Field::parse("q"), Field::rationals());
  EXPECT_THROW(Field::parse("fp:8"), InputError);
  EXPECT_THROW(Field::parse("gf"), InputError);
}

TEST(Rref, Identity) {
  Field q = Field::rationals();
  auto r = rref(Matrix::identity(q, 2));
  EXPECT_TRUE(r.reduced.is_identity());
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, Zero) {
  Field q = Field::rationals();
  auto r = rref(Matrix(q, 2, 3));
  EXPECT_TRUE(r.reduced.is_zero());
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, RankOneOverRationals) {
  Field q = Field::rationals();
  auto r = rref(Matrix::from_ints(q, 2, 2, {1, 2, 2, 4}));
  EXPECT_EQ(r.reduced, Matrix::from_ints(q, 2, 2, {1, 2, 0, 0}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Kernel, Examples) {
  Field q = Field::rationals();
  EXPECT_EQ(kernel_basis(Matrix::identity(q, 3)).cols(), 0u);
  EXPECT_EQ(kernel_basis(Matrix(q, 3, 3)).cols(), 3u);
  Matrix k = kernel_basis(Matrix::from_ints(q, 2, 2, {1, 2, 2, 4}));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(q.mul(k.at(0, 0), q.one()), q.mul(k.at(1, 0), q.from_int(-2)));
}

TEST(Solve, Examples) {
  Field f5 = Field::prime(5);
  auto x = solve_linear(Matrix::from_ints(f5, 1, 1, {2}), Matrix::from_ints(f5, 1, 1, {1}));
  ASSERT_TRUE(x);
  EXPECT_EQ(x->at(0, 0), f5.from_int(3));

  Field q = Field::rationals();
  Matrix v = Matrix::from_ints(q, 3, 1, {1, -2, 5});
  EXPECT_EQ(*solve_linear(Matrix::identity(q, 3), v), v);
  EXPECT_FALSE(solve_linear(Matrix(q, 3, 3), v));
  EXPECT_THROW(solve_linear(Matrix::identity(q, 2), v), std::exception);
}

TEST(Inverse, SingularAndRegular) {
  Field q = Field::rationals();
  EXPECT_FALSE(inverse(Matrix::from_ints(q, 2, 2, {1, 2, 2, 4})));
  Matrix a = Matrix::from_ints(q, 2, 2, {2, 1, 1, 1});
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_TRUE((a * *inv).is_identity());
}

class LinalgProperty : public ::testing::TestWithParam<Field> {};

TEST_P(LinalgProperty, RankNullityAndKernel) {
  const Field f = GetParam();
  std::mt19937_64 gen(101);
  for (int t = 0; t < 60; ++t) {
    std::size_t rows = 1 + gen() % 6, cols = 1 + gen() % 6;
    Matrix m = random_matrix(f, gen, rows, cols);
    Matrix k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.cols(), cols);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
    auto r = rref(m);
    for (std::size_t i = 1; i < r.pivots.size(); ++i) EXPECT_LT(r.pivots[i - 1], r.pivots[i]);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
  }
}

TEST_P(LinalgProperty, SolveMatchesAugmentedRank) {
  const Field f = GetParam();
  std::mt19937_64 gen(202);
  for (int t = 0; t < 60; ++t) {
    std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 5;
    Matrix m = random_matrix(f, gen, rows, cols, 1);
    Matrix b = gen() % 2 ? m * random_matrix(f, gen, cols, 1) : random_matrix(f, gen, rows, 1);
    auto x = solve_linear(m, b);
    bool solvable = rank(Matrix::hstack(f, rows, {m, b})) == rank(m);
    EXPECT_EQ(x.has_value(), solvable);
    if (x) {
      EXPECT_EQ(m * *x, b);
    }
  }
}

TEST_P(LinalgProperty, InverseOfProducts) {
  const Field f = GetParam();
  std::mt19937_64 gen(303);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + gen() % 5;
    Matrix a = random_matrix(f, gen, n, n, 4);
    auto inv = inverse(a);
    EXPECT_EQ(inv.has_value(), rank(a) == n);
    if (inv) {
      EXPECT_TRUE((a * *inv).is_identity());
      EXPECT_TRUE((*inv * a).is_identity());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, LinalgProperty,
                         ::testing::Values(Field::prime(2), Field::prime(3), Field::prime(101), Field::rationals()),
                         [](const auto& info) {
                           return info.param.is_prime_field() ? "F" + std::to_string(info.param.characteristic())
                                                              : std::string("Q");
                         });

// The image of m has p^rank elements.
TEST(LinalgOracle, RankAgainstImageCount) {
  std::mt19937_64 gen(404);
  for (std::int64_t p : {2, 3}) {
    Field f = Field::prime(p);
    for (int t = 0; t < 40; ++t) {
      std::size_t rows = 1 + gen() % 4, cols = 1 + gen() % 4;
      Matrix m = random_matrix(f, gen, rows, cols);
      EXPECT_EQ(image_size(m), int_pow(static_cast<std::size_t>(p), rank(m)));
    }
  }
}

TEST(LinalgOracle, RationalAgreesWithReductionModLargePrime) {
  std::mt19937_64 gen(505);
  Field q = Field::rationals(), fp = Field::prime(1000003);
  for (int t = 0; t < 40; ++t) {
    std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 5;
    std::vector<std::int64_t> entries;
    for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(static_cast<std::int64_t>(gen() % 7) - 3);
    EXPECT_EQ(rank(Matrix::from_ints(q, rows, cols, entries)), rank(Matrix::from_ints(fp, rows, cols, entries)));
  }
}
