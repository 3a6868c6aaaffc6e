#include <gtest/gtest.h>

#include <grakit/polycomb.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace grakit;

namespace {
std::vector<BigInt> big(std::initializer_list<long long> l) {
  std::vector<BigInt> out;
  for (auto x : l) out.emplace_back(x);
  return out;
}
Polynomial poly(std::initializer_list<long long> l) { return {big(l)}; }
}  // namespace

TEST(FVector, Examples) {
  EXPECT_EQ(f_vector(family(Family::Path, 3)), big({5, 5, 1}));
  EXPECT_EQ(f_vector(family(Family::Complete, 2)), big({2, 1}));
  EXPECT_EQ(f_vector(family(Family::Complete, 3)), big({6, 6, 1}));
  EXPECT_EQ(f_vector(family(Family::Path, 1)), big({1}));
}

TEST(HPoly, FromF) {
  EXPECT_EQ(h_poly_from_f(big({5, 5, 1})), poly({1, 3, 1}));
  EXPECT_EQ(h_poly_from_f(big({2, 1})), poly({1, 1}));
  EXPECT_EQ(h_poly_from_f(big({1})), poly({1}));
}

TEST(HPoly, FromDescents) {
  EXPECT_EQ(h_poly_from_descents(family(Family::Path, 3)), poly({1, 3, 1}));
  EXPECT_EQ(h_poly_from_descents(family(Family::Complete, 3)), poly({1, 4, 1}));
  EXPECT_EQ(h_poly_from_descents(family(Family::Path, 1)), poly({1}));
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti(family(Family::Path, 3)), big({1, 3, 1}));
  EXPECT_EQ(betti(family(Family::Complete, 2)), big({1, 1}));
  EXPECT_EQ(betti(family(Family::Complete, 3)), big({1, 4, 1}));
}

TEST(HPoly, BinomialExpansionMatchesOracle) {
  for (const Graph& g : corpus::connected_classes_upto(5)) {
    std::vector<long long> f;
    for (const auto& x : f_vector(g)) f.push_back(static_cast<long long>(x));
    auto ref = oracle::h_from_f(f);
    Polynomial h = h_poly_from_f(f_vector(g));
    ASSERT_EQ(h.coeffs.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(h.coeffs[i], BigInt(ref[i]));
  }
}

TEST(HPoly, IdentitySymmetryAndValueAtOne) {
  for (const Graph& g : corpus::connected_classes_upto(5)) {
    auto f = f_vector(g);
    Polynomial a = h_poly_from_f(f), b = h_poly_from_descents(g);
    EXPECT_EQ(a, b);
    int n = g.size();
    for (int i = 0; i < n; ++i) EXPECT_EQ(a.at(i), a.at(n - 1 - i));
    EXPECT_EQ(a.eval(1), f[0]);
    EXPECT_EQ(f[0], BigInt(maximal_nested(g).size()));
  }
}

TEST(Families, CatalanAndFactorial) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(f_vector(family(Family::Path, n))[0], BigInt(oracle::catalan(n)));
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(f_vector(family(Family::Complete, n))[0], BigInt(oracle::factorial(n)));
}

// cyclohedron vertex count C(2n-2, n-1)
TEST(Families, Cyclohedron) {
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(f_vector(family(Family::Cycle, n))[0], BigInt(oracle::binomial(2 * n - 2, n - 1)));
}
