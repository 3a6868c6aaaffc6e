#include <gtest/gtest.h>

#include <random>

#include <grakit/exactla.hpp>

using namespace grakit;

namespace {
QMatrix dense(std::vector<std::vector<long long>> rows) {
  std::vector<std::vector<Rational>> m;
  for (auto& r : rows) {
    m.emplace_back();
    for (auto v : r) m.back().emplace_back(v);
  }
  return QMatrix::from_dense(m);
}

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> val(-2, 2);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() % 3 == 0 ? val(rng) : 0);
  return m;
}
}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(QMatrix::identity(2)), 2u);
  EXPECT_EQ(rank(QMatrix(3, 4)), 0u);
  EXPECT_EQ(rank(dense({{1, 2}, {2, 4}})), 1u);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(QMatrix::identity(3)).empty());
  EXPECT_EQ(kernel_basis(QMatrix(2, 3)).size(), 3u);
  auto k = kernel_basis(dense({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
}

TEST(Rank, RandomProperties) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    QMatrix m = random_matrix(rng, r, c);
    std::size_t rk = rank(m);
    EXPECT_EQ(rk, rank(m.transpose()));
    EXPECT_LE(rk, std::min(r, c));
    auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + rk, c);
    for (const auto& v : ker)
      for (const auto& y : m.apply(v)) EXPECT_EQ(y, 0);
  }
}

TEST(Rational, ExactAndPrinted) {
  Rational third(1, 3);
  EXPECT_EQ(third * 3, 1);
  EXPECT_EQ(rational_string(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(rational_string(Rational(7)), "7");
}

TEST(QMatrix, Arithmetic) {
  QMatrix a = dense({{1, 2}, {0, 1}}), b = dense({{1, -2}, {0, 1}});
  EXPECT_EQ(a * b, QMatrix::identity(2));
  EXPECT_EQ(a + b, dense({{2, 0}, {0, 2}}));
  EXPECT_EQ(a.scaled(0), QMatrix(2, 2));
  EXPECT_THROW(a * QMatrix(3, 1), std::invalid_argument);
  EXPECT_THROW(a.add(2, 0, 1), std::out_of_range);
}

TEST(Echelon, ContainsAndRank) {
  Echelon e;
  EXPECT_TRUE(e.insert({{0, 1}, {1, 1}}));
  EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}));
  EXPECT_FALSE(e.insert({{0, 2}, {1, 4}, {2, 2}}));
  EXPECT_TRUE(e.contains({{0, 1}, {2, -1}}));
  EXPECT_FALSE(e.contains({{2, 1}}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.pivot_columns(), (std::vector<std::size_t>{0, 1}));
}

TEST(ChainComplex, Examples) {
  ChainComplex zero(0, {2, 3}, {QMatrix(0, 2), QMatrix(2, 3)});
  EXPECT_EQ(zero.homology_dims(), (std::map<int, std::size_t>{{0, 2}, {1, 3}}));
  ChainComplex iso(0, {1, 1}, {QMatrix(0, 1), QMatrix::identity(1)});
  EXPECT_EQ(iso.homology_dims(), (std::map<int, std::size_t>{{0, 0}, {1, 0}}));
  EXPECT_THROW(ChainComplex(0, {1, 1, 1}, {QMatrix(0, 1), QMatrix::identity(1), QMatrix::identity(1)}), ComplexError);
  EXPECT_THROW(ChainComplex(0, {1, 2}, {QMatrix(0, 1), QMatrix(1, 1)}), ComplexError);
}

// random three-term complexes; d2 takes its columns from ker d1
TEST(ChainComplex, EulerCharacteristic) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n0 = 1 + rng() % 5, n1 = 1 + rng() % 5, n2 = 1 + rng() % 5;
    QMatrix d1 = random_matrix(rng, n0, n1);
    // columns of d2 drawn from ker d1
    auto ker = kernel_basis(d1);
    QMatrix d2(n1, n2);
    for (std::size_t j = 0; j < n2 && !ker.empty(); ++j) {
      std::vector<int> coef(ker.size());
      for (auto& c : coef) c = static_cast<int>(rng() % 5) - 2;
      for (std::size_t i = 0; i < n1; ++i) {
        Rational v = 0;
        for (std::size_t k = 0; k < ker.size(); ++k) v += coef[k] * ker[k][i];
        d2.set(i, j, v);
      }
    }
    ChainComplex c(0, {n0, n1, n2}, {QMatrix(0, n0), d1, d2});
    auto h = c.homology_dims();
    long long chi_h = static_cast<long long>(h[0]) - static_cast<long long>(h[1]) + static_cast<long long>(h[2]);
    long long chi_c = static_cast<long long>(n0) - static_cast<long long>(n1) + static_cast<long long>(n2);
    EXPECT_EQ(chi_h, chi_c);
  }
}
