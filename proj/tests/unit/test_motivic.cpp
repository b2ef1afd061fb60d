#include "hodge/error.hpp"
#include "hodge/motivic/variety_class.hpp"
#include "hodge/stratmaps/stratified_map.hpp"
#include "hodge/verify/oracles.hpp"
#include "hodge/verify/random_inputs.hpp"

#include <gtest/gtest.h>

using namespace hodge;

namespace {

GenusPolynomial g(const char* text) { return parse_genus_polynomial(text); }

VarietyClass punctured_affine(int m) {
  return VarietyClass::as_atom("punctured", VarietyClass::affine_line().pow(static_cast<unsigned>(m)) - VarietyClass::point(),
                               m, true, false);
}

VarietyClass random_atom(random::Rng& rng, const std::string& name) {
  return VarietyClass::atom({name, random::e_polynomial(rng), static_cast<int>(random::uniform(rng, 0, 4)),
                             random::coin(rng), random::coin(rng)});
}

}  // namespace

TEST(VarietyClass, ProjectiveSpaces) {
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(chi_y_c(VarietyClass::proj_space(n)), oracle::chi_y_proj_space(n));
    EXPECT_EQ(chi_y(VarietyClass::proj_space(n)), oracle::chi_y_proj_space(n));
  }
}

TEST(VarietyClass, PuncturedAffineSpaces) {
  for (int m = 1; m <= 7; ++m) {
    EXPECT_EQ(chi_y_c(punctured_affine(m)), GenusPolynomial::neg_y_power(m) - 1);
    EXPECT_EQ(chi_y(punctured_affine(m)), GenusPolynomial(1) - GenusPolynomial::neg_y_power(m));
  }
  EXPECT_EQ(chi_y_c(VarietyClass::torus()), g("-1 - y"));
  EXPECT_EQ(chi_y(VarietyClass::torus()), g("1 + y"));
}

TEST(VarietyClass, HopfDataIsMultiplicative) {
  for (int n = 1; n <= 6; ++n) {
    auto pair = product_genus_check(VarietyClass::proj_space(n), VarietyClass::torus());
    EXPECT_TRUE(pair.equal());
    EXPECT_EQ(pair.lhs, chi_y_c(punctured_affine(n + 1)));
    EXPECT_EQ(chi_y(VarietyClass::proj_space(n) * VarietyClass::torus()), chi_y(punctured_affine(n + 1)));
  }
}

TEST(VarietyClass, CuspidalCubicIsNotMultiplicative) {
  auto e = VarietyClass::as_atom("E", VarietyClass::affine_line().pow(2) - VarietyClass::affine_line(), 2, true, false);
  EXPECT_EQ(chi_y_c(e), g("y + y^2"));
  EXPECT_EQ(chi_y(e), g("1 + y"));
  auto pair = multiplicativity_check(chi_y(e), chi_y(VarietyClass::torus()), g("y"));
  EXPECT_FALSE(pair.equal());
  EXPECT_EQ(pair.rhs, g("y + y^2"));
}

TEST(VarietyClass, PointIsUnitForProducts) {
  random::Rng rng(53);
  for (int i = 0; i < 50; ++i) {
    auto f = random_atom(rng, "F");
    auto pair = product_genus_check(VarietyClass::point(), f);
    EXPECT_TRUE(pair.equal());
    EXPECT_EQ(pair.lhs, chi_y_c(f));
  }
}

TEST(VarietyClass, ChiYcIsARingHomomorphism) {
  random::Rng rng(59);
  for (int i = 0; i < 200; ++i) {
    auto a = random_atom(rng, "A"), b = random_atom(rng, "B");
    EXPECT_EQ(chi_y_c(a * b), oracle::dense_multiply(chi_y_c(a), chi_y_c(b)));
    EXPECT_EQ(chi_y_c(a + b), chi_y_c(a) + chi_y_c(b));
    EXPECT_EQ(chi_y_c(a - b), chi_y_c(a) - chi_y_c(b));
    EXPECT_TRUE(product_genus_check(a, b).equal());
  }
}

TEST(VarietyClass, EulerAgreesBetweenChiYAndChiYc) {
  random::Rng rng(61);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto a = random_atom(rng, "A");
    if (!a.smooth() && !a.complete()) {
      EXPECT_THROW(chi_y(a), ValidationError);
      continue;
    }
    EXPECT_EQ(chi_y(a).evaluate(-1), chi_y_c(a).evaluate(-1));
    if (a.complete()) EXPECT_EQ(chi_y(a), chi_y_c(a));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(VarietyClass, DifferenceLosesFlags) {
  auto d = VarietyClass::proj_space(2) - VarietyClass::point();
  EXPECT_FALSE(d.smooth());
  EXPECT_FALSE(d.complete());
  EXPECT_THROW(chi_y(d), ValidationError);
  auto p = VarietyClass::proj_space(1) * VarietyClass::proj_space(2);
  EXPECT_TRUE(p.smooth() && p.complete());
  EXPECT_EQ(p.dim(), 3);
}

TEST(BlowUp, PointOnPlane) {
  auto bl = blowup_class(VarietyClass::proj_space(2), VarietyClass::point(), 1);
  EXPECT_EQ(chi_y(bl), g("1 - 2*y + y^2"));
  EXPECT_EQ(chi_y(bl), chi_y(VarietyClass::proj_space(1) * VarietyClass::proj_space(1)));
  EXPECT_EQ(chi_y(bl), oracle::diamond_chi_y({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
}

TEST(BlowUp, LineInThreeSpaceMatchesStratifiedSum) {
  auto bl = blowup_class(VarietyClass::proj_space(3), VarietyClass::proj_space(1), 1);
  EXPECT_EQ(chi_y(bl), g("1 - 2*y + 2*y^2 - y^3"));
  std::vector<StratumRecord> rec{
      {"U", oracle::chi_y_proj_space(3), true, {"line"}, 1, true},
      {"line", oracle::chi_y_proj_space(1), true, {}, oracle::chi_y_proj_space(1), true},
  };
  EXPECT_EQ(total_space_chi_c(StratifiedMapDescriptor::build(rec, "U")), chi_y(bl));
}

TEST(BlowUp, DivisorCenterChangesNothing) {
  auto x = VarietyClass::proj_space(2);
  EXPECT_EQ(chi_y_c(blowup_class(x, VarietyClass::proj_space(1), 0)), chi_y_c(x));
}

TEST(BlowUp, RejectsBadInput) {
  EXPECT_THROW(blowup_class(VarietyClass::proj_space(2), VarietyClass::point(), -1), ValidationError);
  EXPECT_THROW(blowup_class(VarietyClass::proj_space(2) - VarietyClass::point(), VarietyClass::point(), 1),
               ValidationError);
}

TEST(VarietyClass, NormalFormText) {
  EXPECT_EQ(VarietyClass::proj_space(2).e_polynomial(), EPolynomial(1) + EPolynomial::uv() + EPolynomial::uv().pow(2));
  EXPECT_FALSE(VarietyClass::torus().to_string().empty());
}
