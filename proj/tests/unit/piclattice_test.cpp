#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "bicanon/errors.hpp"
#include "bicanon/exact_linalg.hpp"
#include "bicanon/piclattice.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bicanon;
using namespace bicanon::piclattice;
using fixtures::cls;
using fixtures::named;

namespace {

std::shared_ptr<const Lattice> blowup(int n) { return std::make_shared<const Lattice>(make_blowup_lattice(n)); }

}  // namespace

TEST(BlowupLattice, RankAndGram) {
  const auto six = make_blowup_lattice(6);
  EXPECT_EQ(six.rank(), 7u);
  EXPECT_EQ(six.gram()[0][0], 1);
  for (std::size_t i = 1; i < 7; ++i) EXPECT_EQ(six.gram()[i][i], -1);
  EXPECT_EQ(six.labels()[3], "e3");

  const auto plane = blowup(0);
  EXPECT_EQ(plane->rank(), 1u);
  EXPECT_EQ(self_intersection(DivisorClass::basis(plane, "l")), 1);

  EXPECT_EQ(make_blowup_lattice(2).rank(), 3u);
  EXPECT_THROW(make_blowup_lattice(-1), InvalidInput);
}

TEST(Intersect, PaperValues) {
  EXPECT_EQ(self_intersection(cls({{"l", 5}, {"e1", -1}, {"e2", -2}, {"e3", -1}, {"e4", -2}, {"e5", -2}, {"e6", -2}})), 7);
  EXPECT_EQ(intersect(named("l"), named("e1")), 0);
}

TEST(Intersect, TwoKPlusDOfEx1) {
  const auto c = cls({{"l", 9}, {"e1", -3}, {"e2", -4}, {"e3", -3}, {"e4", -4}, {"e5", -4}, {"e6", -4}});
  std::vector<std::int64_t> signed_v{9, -3, -4, -3, -4, -4, -4};
  EXPECT_EQ(self_intersection(c), oracle::blowup_dot(signed_v, signed_v));
  EXPECT_EQ(self_intersection(c), -1);
  // it really is 2K + D for the inoue7 data
  EXPECT_EQ(2 * named("K") + fixtures::inoue7_data().total_branch(), c);
}

TEST(Intersect, LatticeMismatchThrows) {
  const auto a = DivisorClass::basis(blowup(2), "l");
  const auto b = DivisorClass::basis(blowup(3), "l");
  EXPECT_THROW(intersect(a, b), InvalidInput);
  EXPECT_THROW(a + b, InvalidInput);
}

TEST(CanonicalClass, StandardSurfaces) {
  const auto six = blowup(6);
  EXPECT_EQ(canonical_class(six), DivisorClass(six, {-3, 1, 1, 1, 1, 1, 1}));
  const auto q = std::make_shared<const Lattice>(Lattice::quadric());
  EXPECT_EQ(canonical_class(q), DivisorClass(q, {-2, -2}));
  EXPECT_EQ(self_intersection(canonical_class(q)), 8);
  const auto plane = blowup(0);
  EXPECT_EQ(canonical_class(plane), DivisorClass(plane, {-3}));
  const auto custom = std::make_shared<const Lattice>(Lattice::custom({"a"}, {{-2}}));
  EXPECT_THROW(canonical_class(custom), InvalidInput);
}

TEST(PullbackNumerics, PaperValues) {
  const auto sigma = blowup(2);
  const auto l = DivisorClass::basis(sigma, "l");
  const auto l0 = l - DivisorClass::basis(sigma, "e1") - DivisorClass::basis(sigma, "e2");
  EXPECT_EQ(self_intersection(l0), -1);
  EXPECT_EQ(pullback_numerics(4, l0, l0), -4);
  const auto h = 2 * l + l0;
  EXPECT_EQ(pullback_numerics(4, h, h), 28);
  EXPECT_EQ(pullback_numerics(1, h, l0), intersect(h, l0));
  EXPECT_THROW(pullback_numerics(0, h, h), InvalidInput);
}

TEST(NegativeDefinite, Examples) {
  const IntMatrix abt{{-3, 0, 1}, {0, -3, 1}, {1, 1, -2}};
  EXPECT_TRUE(is_negative_definite(abt));
  EXPECT_EQ(oracle::leading_minors_cofactor(abt), (std::vector<std::int64_t>{-3, 9, -12}));
  EXPECT_FALSE(is_negative_definite({{1}}));
  EXPECT_TRUE(is_negative_definite({{-2}}));
  EXPECT_FALSE(is_negative_definite({{-1, 2}, {2, -1}}));
  EXPECT_THROW(is_negative_definite({{-1, 0}, {1, -1}}), InvalidInput);
}

TEST(NegativeDefinite, AgreesWithCofactorMinorsOnRandomSymmetric) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> off(-2, 2), diag(-6, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    IntMatrix m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = off(rng);
    }
    const auto minors = oracle::leading_minors_cofactor(m);
    bool expect = true;
    for (std::size_t k = 0; k < n; ++k) expect = expect && (k % 2 == 0 ? minors[k] < 0 : minors[k] > 0);
    ASSERT_EQ(is_negative_definite(m), expect);
  }
}

TEST(Divisibility, Examples) {
  EXPECT_TRUE(is_divisible_by(2 * fixtures::inoue7_L1(), 2));
  EXPECT_EQ(2 * fixtures::inoue7_L1(), cls({{"l", 10}, {"e1", -2}, {"e2", -4}, {"e3", -2}, {"e4", -6}, {"e5", -4}, {"e6", -4}}));
  EXPECT_FALSE(is_divisible_by(named("l") - named("e1"), 2));
  const auto d = fixtures::inoue7_data();
  EXPECT_TRUE(is_divisible_by(d.entries[1].divisor + d.entries[2].divisor, 2));
  EXPECT_THROW(is_divisible_by(named("l"), 1), InvalidInput);
  EXPECT_THROW((named("l") - named("e1")).divided_by(2), InvalidInput);
}

TEST(LatticeProperties, BilinearAndSymmetric) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> c(-6, 6);
  const auto six = blowup(6);
  const auto q = std::make_shared<const Lattice>(Lattice::quadric());
  for (const auto& lat : {six, q}) {
    auto random_class = [&] {
      std::vector<std::int64_t> v(lat->rank());
      for (auto& x : v) x = c(rng);
      return DivisorClass(lat, v);
    };
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_class(), b = random_class(), d = random_class();
      const std::int64_t k = c(rng);
      ASSERT_EQ(intersect(a, b), intersect(b, a));
      ASSERT_EQ(intersect(a + b, d), intersect(a, d) + intersect(b, d));
      ASSERT_EQ(intersect(k * a, d), k * intersect(a, d));
      if (lat == six) ASSERT_EQ(intersect(a, b), oracle::blowup_dot(a.coeffs(), b.coeffs()));
    }
  }
}

TEST(LatticeProperties, BlowupSignatureIsOneN) {
  for (int n = 0; n <= 9; ++n) {
    const auto lat = make_blowup_lattice(n);
    const auto minors = bicanon::exact::leading_principal_minors(bicanon::exact::from_int64(lat.gram()));
    // Jacobi: negative eigenvalues = sign changes in 1, d1, d2, ...
    int changes = 0;
    bicanon::exact::BigInt prev = 1;
    for (const auto& d : minors) {
      ASSERT_NE(d, 0);
      if ((d < 0) != (prev < 0)) ++changes;
      prev = d;
    }
    EXPECT_EQ(changes, n);
    EXPECT_EQ(static_cast<int>(lat.rank()) - changes, 1);
  }
}

TEST(Inoue7Relations, QuadrilateralIdentities) {
  EXPECT_EQ(-named("K"), fixtures::cat().sum({"Delta1", "Delta2", "Delta3"}));
  for (int i = 1; i <= 3; ++i) {
    const auto a = "Delta" + std::to_string(i % 3 + 1);
    const auto b = "Delta" + std::to_string((i + 1) % 3 + 1);
    EXPECT_EQ(named("f" + std::to_string(i)), named(a) + named(b)) << i;
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(intersect(named("Delta" + std::to_string(i)), named("S" + std::to_string(j))), 0);
    for (int j = 1; j <= 3; ++j)
      EXPECT_EQ(intersect(named("Delta" + std::to_string(i)), named("f" + std::to_string(j))), i == j ? 2 : 0);
  }
  // S_j are (-2)-curves, Delta_i and e_i are (-1)-curves
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(self_intersection(named("S" + std::to_string(j))), -2);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(self_intersection(named("Delta" + std::to_string(i))), -1);
}

TEST(Inoue7Relations, BuildingDataIdentities) {
  const auto d = fixtures::inoue7_data();
  const auto& D1 = d.entries[0].divisor;
  const auto& D2 = d.entries[1].divisor;
  const auto& D3 = d.entries[2].divisor;
  EXPECT_EQ(2 * fixtures::inoue7_L1(), D2 + D3);
  EXPECT_EQ(2 * fixtures::inoue7_L2(), D1 + D3);
  EXPECT_EQ(fixtures::inoue7_L1() + fixtures::inoue7_L2() - D3, fixtures::inoue7_L3());
  EXPECT_EQ(fixtures::inoue7_L3(), cls({{"l", 4}, {"e1", -2}, {"e2", -2}, {"e3", -2}, {"e4", -1}, {"e5", -1}, {"e6", -1}}));
}

TEST(Inoue7Relations, DoubleCoverArithmeticOnAbstractLattice) {
  // span of L0 and theta with L0^2 = -4, theta^2 = -2, L0.theta = 0
  const auto lat = std::make_shared<const Lattice>(Lattice::custom({"L0", "theta"}, {{-4, 0}, {0, -2}}));
  const auto L0 = DivisorClass::basis(lat, "L0");
  const auto theta = DivisorClass::basis(lat, "theta");
  for (std::int64_t a = 0; a <= 2; ++a) {
    const auto C = L0 - a * theta;
    EXPECT_EQ(intersect(theta, C), 2 * a);
    EXPECT_EQ(self_intersection(C), -4 - 2 * a * a);
  }
}

TEST(DivisorClass, FormattingAndMaps) {
  EXPECT_EQ(to_string(fixtures::inoue7_L1()), "5l-e1-2e2-e3-3e4-2e5-2e6");
  EXPECT_EQ(to_string(named("K")), "-3l+e1+e2+e3+e4+e5+e6");
  EXPECT_EQ(to_string(DivisorClass::zero(fixtures::cat().lattice())), "0");
  const auto m = fixtures::inoue7_L3().to_map();
  EXPECT_EQ(DivisorClass::from_map(fixtures::cat().lattice(), m), fixtures::inoue7_L3());
  EXPECT_THROW(DivisorClass::from_map(fixtures::cat().lattice(), {{"e9", 1}}), InvalidInput);
  EXPECT_THROW(fixtures::cat().at("S9"), InvalidInput);
}
