#include <gtest/gtest.h>

#include "shi/arrangement.hpp"
#include "test_util.hpp"

namespace shi {
namespace {

using testing::Ring;

TEST(Arrangement, TwoForms) {
  Arrangement a = shi_d_cone(2);
  ASSERT_EQ(a.forms.size(), 5u);
  std::vector<std::string> text;
  for (const auto& f : a.forms) text.push_back(f.to_string());
  EXPECT_EQ(text, (std::vector<std::string>{"z", "x1 + x2", "x1 + x2 - z", "x1 - x2", "x1 - x2 - z"}));
  EXPECT_EQ(a.h, 2);
}

TEST(Arrangement, Counts) {
  EXPECT_EQ(shi_d_cone(3).forms.size(), 13u);
  EXPECT_EQ(shi_d_cone(4).h, 6);
  for (int ell = 2; ell <= 7; ++ell) EXPECT_EQ(shi_d_cone(ell).forms.size(), static_cast<std::size_t>(2 * ell * (ell - 1) + 1));
  EXPECT_THROW(shi_d_cone(1), std::invalid_argument);
  EXPECT_THROW(shi_d_cone(8), std::invalid_argument);
}

TEST(Arrangement, Normalization) {
  LinearForm f({Rational(-2), Rational(2), Rational(0)});
  EXPECT_EQ(f.to_string(), "x1 - x2");
  EXPECT_EQ(f.leading_index(), 0u);
  EXPECT_THROW(LinearForm({Rational(0), Rational(0)}), std::invalid_argument);
}

TEST(DefiningPoly, Two) {
  Ring r(2);
  Poly s = r.x(1) + r.x(2), d = r.x(1) - r.x(2);
  Poly expected = r.z() * s * d * (s - r.z()) * (d - r.z());
  EXPECT_EQ(defining_poly(shi_d_cone(2)), expected);
  EXPECT_TRUE(expected.is_homogeneous(5));
}

TEST(DefiningPoly, Degrees) {
  for (int ell = 2; ell <= 4; ++ell) {
    Arrangement a = shi_d_cone(ell);
    Poly q = defining_poly(a);
    EXPECT_TRUE(q.is_homogeneous(2 * ell * (ell - 1) + 1));
    EXPECT_TRUE(defining_poly_without_z(a).is_homogeneous(2 * ell * (ell - 1)));
    EXPECT_EQ(exact_div(q, a.forms.front().to_poly()), defining_poly_without_z(a));
  }
  EXPECT_EQ(defining_poly(shi_d_cone(3)).total_degree(), 13);
}

TEST(DefiningPoly, Squarefree) {
  for (int ell = 2; ell <= 4; ++ell) {
    Arrangement a = shi_d_cone(ell);
    Poly q = defining_poly(a);
    for (const auto& f : a.forms) {
      Poly once = exact_div(q, f.to_poly());
      EXPECT_FALSE(divides(f.to_poly(), once)) << f.to_string();
    }
  }
}

TEST(Forms, VanishSomewhereAndPairwiseDistinct) {
  for (int ell = 2; ell <= 7; ++ell) {
    Arrangement a = shi_d_cone(ell);
    for (std::size_t i = 0; i < a.forms.size(); ++i) {
      const auto& f = a.forms[i];
      // a nonzero kernel point: move one unit along a variable the form ignores,
      // or along the leading variable compensated by another one
      std::vector<Rational> pt(a.nvars(), Rational(0));
      std::size_t lead = f.leading_index();
      std::size_t other = lead == 0 ? 1 : 0;
      if (f.coeffs()[other] == 0) {
        pt[other] = 1;
      } else {
        pt[lead] = -f.coeffs()[other];
        pt[other] = f.coeffs()[lead];
      }
      EXPECT_EQ(f.to_poly().evaluate<Rational>(pt), 0);
      EXPECT_EQ(f.coeffs()[lead], 1);
      for (std::size_t j = i + 1; j < a.forms.size(); ++j) EXPECT_FALSE(f.proportional_to(a.forms[j]));
    }
  }
}

TEST(Forms, SolvedLeadingLiesOnHyperplane) {
  for (const auto& f : shi_d_cone(3).forms) {
    if (f.leading_index() == 3) continue;
    EXPECT_TRUE(substitute(f.to_poly(), f.leading_index(), f.solved_leading()).is_zero());
  }
}

}  // namespace
}  // namespace shi
