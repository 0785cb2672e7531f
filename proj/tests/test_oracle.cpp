#include <gtest/gtest.h>

#include "shi/oracle.hpp"
#include "shi/shi_basis.hpp"

namespace shi {
namespace {

TEST(Monomials, Enumeration) {
  EXPECT_EQ(oracle::monomials_of_degree(3, 0).size(), 1u);
  EXPECT_EQ(oracle::monomials_of_degree(3, 2).size(), 6u);
  auto m = oracle::monomials_of_degree(3, 2);
  EXPECT_EQ(m.front(), Monomial({2, 0, 0}));
  EXPECT_EQ(m.back(), Monomial({0, 0, 2}));
  for (std::size_t i = 1; i < m.size(); ++i) EXPECT_GT(m[i - 1], m[i]);
}

TEST(Rank, Examples) {
  using R = std::vector<Rational>;
  EXPECT_EQ(oracle::rank({R{1, 2}, R{2, 4}}), 1u);
  EXPECT_EQ(oracle::rank({R{0, 1}, R{1, 0}, R{1, 1}}), 2u);
  EXPECT_EQ(oracle::rank({}), 0u);
}

TEST(DerivationDim, TwoLowDegrees) {
  EXPECT_EQ(oracle::derivation_dim(2, 0), 0u);
  EXPECT_EQ(oracle::derivation_dim(2, 1), 1u);
  EXPECT_EQ(oracle::derivation_dim(2, 2), 5u);
}

TEST(ExpectedDim, Examples) {
  EXPECT_EQ(oracle::expected_dim(3, 0), 0);
  EXPECT_EQ(oracle::expected_dim(3, 1), 1);
  EXPECT_EQ(oracle::expected_dim(3, 4), 23);
  EXPECT_EQ(oracle::expected_dim(2, 2), 5);
  EXPECT_THROW(oracle::expected_dim(1, 2), std::invalid_argument);
}

TEST(DerivationDim, AgreesWithFreeModuleCount) {
  for (int ell = 2; ell <= 3; ++ell) {
    const int h = 2 * ell - 2;
    for (int d : {0, 1, h - 1, h, h + 1})
      EXPECT_EQ(Integer(static_cast<unsigned long>(oracle::derivation_dim(ell, d))), oracle::expected_dim(ell, d))
          << "ell=" << ell << " d=" << d;
  }
}

TEST(DerivationSystem, BasisElementsSolveTheSystem) {
  for (int ell = 2; ell <= 3; ++ell) {
    const int h = 2 * ell - 2;
    auto sys = oracle::derivation_system(ell, h);
    auto b = basis(ell);
    for (std::size_t k = 1; k < b.size(); ++k) EXPECT_TRUE(sys.annihilates(sys.vectorize(b[k]))) << b[k].name;
    auto sys1 = oracle::derivation_system(ell, 1);
    EXPECT_TRUE(sys1.annihilates(sys1.vectorize(b[0])));
    EXPECT_THROW(sys.vectorize(b[0]), std::invalid_argument);
  }
}

TEST(SpanCheck, BasisGeneratesDegreeH) {
  for (int ell = 2; ell <= 3; ++ell) {
    const int h = 2 * ell - 2;
    for (int d : {h, h + 1}) {
      auto r = oracle::span_check(basis(ell), d);
      EXPECT_TRUE(r.all_in_kernel);
      EXPECT_EQ(r.span_rank, r.kernel_dim) << "ell=" << ell << " d=" << d;
    }
  }
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(oracle::charpoly_count(2, 5), 36u);
  EXPECT_EQ(oracle::expected_charpoly_count(2, 5), 36);
  EXPECT_EQ(oracle::charpoly_count(3, 7), 162u);
  EXPECT_THROW(oracle::charpoly_count(2, 3), std::invalid_argument);
  EXPECT_THROW(oracle::charpoly_count(2, 9), std::invalid_argument);
  EXPECT_THROW(oracle::charpoly_count(2, 2), std::invalid_argument);
  EXPECT_THROW(oracle::charpoly_count(6, 101), std::invalid_argument);
}

TEST(Charpoly, MatchesFactoredCount) {
  for (auto [ell, q] : std::vector<std::pair<int, long>>{{2, 5}, {2, 7}, {2, 11}, {3, 7}})
    EXPECT_EQ(Integer(static_cast<unsigned long>(oracle::charpoly_count(ell, q))), oracle::expected_charpoly_count(ell, q))
        << ell << "," << q;
}

}  // namespace
}  // namespace shi
