#include <gtest/gtest.h>

#include <random>

#include "shi/shi_basis.hpp"
#include "shi/verify.hpp"
#include "test_util.hpp"

namespace shi {
namespace {

using testing::Ring;

TEST(EnumerateK1K2, Examples) {
  auto empty = enumerate_k1_k2({});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].k1.empty() && empty[0].k2.empty());

  auto one = enumerate_k1_k2({0});
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0], (SubsetPair{{}, {}}));
  EXPECT_EQ(one[1], (SubsetPair{{0}, {}}));
  EXPECT_EQ(one[2], (SubsetPair{{}, {0}}));

  auto three = enumerate_k1_k2({0, 1, 2});
  EXPECT_EQ(three.size(), 27u);
  for (const auto& pair : three)
    for (auto v : pair.k1) EXPECT_EQ(std::count(pair.k2.begin(), pair.k2.end(), v), 0);
}

TEST(Phi, TwoGoldenPhi1) {
  Ring r(2);
  Derivation phi1 = build_phi(1, 2);
  Poly d = r.x(1) - r.x(2);
  Poly f = (d - r.z()) * d;
  EXPECT_EQ(phi1.coeff_x[0], f);
  EXPECT_EQ(phi1.coeff_x[1], -f);
  EXPECT_TRUE(phi1.coeff_z.is_zero());
  EXPECT_TRUE(phi1.coeff_x[1].is_homogeneous(2));
}

TEST(Phi, TwoGoldenPhi2) {
  Ring r(2);
  Derivation phi2 = build_phi_ell(2);
  EXPECT_EQ(phi2.coeff_x[0], r.c(2) * r.x(1) * r.x(2) - r.x(2) * r.z());
  EXPECT_EQ(phi2.coeff_x[1], r.x(1) * r.x(1) + r.x(2) * r.x(2) - r.x(1) * r.z());
  EXPECT_TRUE(phi2.coeff_z.is_zero());
  Poly s = r.x(1) + r.x(2), d = r.x(1) - r.x(2);
  EXPECT_EQ(apply(phi2, s), s * (s - r.z()));
  EXPECT_EQ(apply(phi2, d), -(d * (d - r.z())));
  EXPECT_TRUE(apply(build_phi(1, 2), r.z()).is_zero());
}

TEST(Phi, CoefficientZIsZero) {
  for (int ell = 2; ell <= 5; ++ell)
    for (const auto& d : basis(ell))
      if (d.name != "euler") { EXPECT_TRUE(d.coeff_z.is_zero()) << d.name << " ell=" << ell; }
}

TEST(Phi, PreconditionErrors) {
  EXPECT_THROW(basis(1), std::invalid_argument);
  EXPECT_THROW(build_phi(0, 3), std::invalid_argument);
  EXPECT_THROW(build_phi(3, 3), std::invalid_argument);
  EXPECT_THROW(build_phi_ell(1), std::invalid_argument);
}

TEST(Euler, Examples) {
  Ring r(3);
  Derivation e = build_euler(3);
  EXPECT_EQ(apply(e, r.x(3)), r.x(3));
  EXPECT_EQ(apply(e, r.z()), r.z());
  EXPECT_EQ(apply(e, r.x(1) * r.x(1) * r.z()), r.c(3) * r.x(1) * r.x(1) * r.z());
  EXPECT_EQ(apply(e, r.x(1) * r.x(2) * r.z()), r.c(3) * r.x(1) * r.x(2) * r.z());
}

TEST(Basis, ShapeAndDegrees) {
  auto b2 = basis(2);
  ASSERT_EQ(b2.size(), 3u);
  EXPECT_EQ(b2[0].name, "euler");
  EXPECT_EQ(b2[1].name, "phi_1");
  EXPECT_EQ(b2[2].name, "phi_2");
  EXPECT_EQ(b2[0].coeff_x[0].total_degree(), 1);
  EXPECT_EQ(b2[1].coeff_x[0].total_degree(), 2);
  EXPECT_EQ(b2[2].coeff_x[0].total_degree(), 2);
  auto b3 = basis(3);
  ASSERT_EQ(b3.size(), 4u);
  for (std::size_t c = 1; c < b3.size(); ++c)
    for (const auto& p : b3[c].coeff_x) EXPECT_TRUE(p.is_zero() || p.is_homogeneous(4));
}

// Degrees and initial monomials for l = 2..6.
class BasisStructure : public ::testing::TestWithParam<int> {};

TEST_P(BasisStructure, HomogeneousOfDegreeTwiceEllMinusOne) {
  const int ell = GetParam();
  auto b = basis(ell);
  for (std::size_t j = 1; j < b.size(); ++j)
    for (const auto& p : b[j].coeff_x)
      if (!p.is_zero()) { EXPECT_TRUE(p.is_homogeneous(2 * (ell - 1))) << b[j].name; }
}

TEST_P(BasisStructure, InitialMonomials) {
  const int ell = GetParam();
  auto b = basis(ell);
  for (int i = 1; i <= ell; ++i) {
    Monomial target;
    for (int k = 1; k < i; ++k) target.set(static_cast<std::size_t>(k - 1), 2);
    target.set(static_cast<std::size_t>(i - 1), 2 * ell - 2 * i);
    const Poly& diag = b[static_cast<std::size_t>(i)].coeff_x[static_cast<std::size_t>(i - 1)];
    ASSERT_FALSE(diag.is_zero());
    EXPECT_EQ(diag.initial_monomial(), target) << "i=" << i;
    EXPECT_EQ(diag.leading_coefficient(), i < ell ? make_rational(1, 2 * ell - 2 * i - 1) : Rational(1)) << "i=" << i;
    for (int j = 1; j <= ell; ++j) {
      const Poly& f = b[static_cast<std::size_t>(j)].coeff_x[static_cast<std::size_t>(i - 1)];
      if (f.is_zero()) continue;
      EXPECT_LE(f.initial_monomial(), target) << "i=" << i << " j=" << j;
      if (i < j) { EXPECT_LT(f.initial_monomial(), target) << "i=" << i << " j=" << j; }
    }
  }
  // in(phi_l(x_l)) = x_1^2 ... x_{l-1}^2
  Monomial last;
  for (int k = 1; k < ell; ++k) last.set(static_cast<std::size_t>(k - 1), 2);
  EXPECT_EQ(b.back().coeff_x.back().initial_monomial(), last);
}

INSTANTIATE_TEST_SUITE_P(EllTwoToSix, BasisStructure, ::testing::Values(2, 3, 4, 5, 6));

TEST(Basis, LeibnizLaw) {
  std::mt19937 rng(77);
  for (int ell = 2; ell <= 4; ++ell) {
    auto b = basis(ell);
    const std::size_t n = static_cast<std::size_t>(ell) + 1;
    for (const auto& theta : b)
      for (int trial = 0; trial < 5; ++trial) {
        Poly f = testing::random_poly(rng, n, 4, 3), g = testing::random_poly(rng, n, 4, 3);
        EXPECT_EQ(apply(theta, f * g), f * apply(theta, g) + g * apply(theta, f)) << theta.name;
      }
  }
}

TEST(Basis, Deterministic) {
  for (int ell = 2; ell <= 5; ++ell) {
    auto a = basis(ell), b = basis(ell);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k], b[k]);
      for (std::size_t v = 0; v < a[k].nvars(); ++v) EXPECT_EQ(a[k].coeff(v).to_string(), b[k].coeff(v).to_string());
    }
  }
}

TEST(Apply, MismatchedRing) {
  EXPECT_THROW(apply(build_euler(2), Poly::variable(4, 0)), std::invalid_argument);
}

}  // namespace
}  // namespace shi
