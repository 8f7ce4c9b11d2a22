#include <gtest/gtest.h>

#include <random>

#include "bicanon/exact_linalg.hpp"
#include "oracles.hpp"

using namespace bicanon::exact;

TEST(Rank, SmallCases) {
  EXPECT_EQ(rank(from_int64({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(from_int64({{0, 0}, {0, 0}})), 0u);
  EXPECT_EQ(rank(from_int64({{0, 1}, {1, 0}, {1, 1}})), 2u);
  EXPECT_EQ(rank(Matrix{}), 0u);
}

TEST(Determinant, MatchesCofactorExpansionOnRandomMatrices) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    ASSERT_EQ(determinant(from_int64(m)), BigInt(oracle::det_cofactor(m)));
    const auto minors = leading_principal_minors(from_int64(m));
    const auto expect = oracle::leading_minors_cofactor(m);
    for (std::size_t k = 0; k < n; ++k) ASSERT_EQ(minors[k], BigInt(expect[k]));
  }
}

TEST(Rank, MatchesModPRankOnRandomMatrices) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 6;
    std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    // force a dependency every other trial
    if (r > 2 && trial % 2 == 0)
      for (std::size_t k = 0; k < c; ++k) m[2][k] = m[0][k] - 2 * m[1][k];
    std::vector<std::vector<std::int64_t>> mp = m;
    for (auto& row : mp)
      for (auto& v : row) v = oracle::mod(v);
    ASSERT_EQ(rank(from_int64(m)), oracle::rank_mod_p(mp));
  }
}

TEST(LatticeContains, IndexTwoSublattice) {
  const auto gens = from_int64({{2, 0}, {0, 2}, {1, 1}});
  EXPECT_TRUE(lattice_contains(gens, {BigInt(3), BigInt(1)}));
  EXPECT_FALSE(lattice_contains(gens, {BigInt(1), BigInt(0)}));
  EXPECT_TRUE(lattice_contains(gens, {BigInt(0), BigInt(0)}));
  EXPECT_FALSE(lattice_contains(Matrix{}, {BigInt(1), BigInt(0)}));
}

TEST(HermiteRows, EchelonWithReducedEntries) {
  const auto h = hermite_rows(from_int64({{4, 6}, {2, 4}}));
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0][0], BigInt(2));
  EXPECT_EQ(h[1][0], BigInt(0));
  EXPECT_GT(h[1][1], BigInt(0));
  EXPECT_LT(h[0][1], h[1][1]);
  // determinant of the row lattice is preserved: |4*4 - 6*2| = 4
  EXPECT_EQ(h[0][0] * h[1][1], BigInt(4));
}
