#include "hodge/error.hpp"
#include "hodge/motivic/variety_class.hpp"
#include "hodge/rhcurve/curve_fibration.hpp"
#include "hodge/verify/oracles.hpp"
#include "hodge/verify/random_inputs.hpp"

#include <gtest/gtest.h>

using namespace hodge;

namespace {

GenusPolynomial g(const char* text) { return parse_genus_polynomial(text); }

MixedHodgeComplex node() { return MixedHodgeComplex::from_entries({{{1, 1, 1}, 1}}); }

CurveFibration pencil(CriticalData data) {
  CurveFibration f{oracle::chi_y_proj_space(1), oracle::chi_y_proj_space(1), 2, {}, true};
  for (int i = 0; i < 3; ++i) f.critical.push_back({"n" + std::to_string(i), data});
  return f;
}

long euler(const GenusPolynomial& p) { return p.evaluate(-1).get_num().get_si(); }

}  // namespace

TEST(RiemannHurwitz, ConicPencil) {
  auto r = rh_total_chi_c(pencil(IsolatedData{{node()}}));
  EXPECT_EQ(r.total, g("1 - 5*y + y^2"));
  EXPECT_EQ(r.product_term, g("1 - 2*y + y^2"));
  ASSERT_EQ(r.corrections.size(), 3u);
  EXPECT_EQ(r.corrections[0], g("-y"));
  VarietyClass bl = VarietyClass::proj_space(2);
  for (int i = 0; i < 4; ++i) bl = blowup_class(bl, VarietyClass::point(), 1);
  EXPECT_EQ(r.total, chi_y(bl));
  EXPECT_EQ(euler(r.total), 7);
}

TEST(RiemannHurwitz, ThreeDescriptionsOfANodeAgree) {
  auto iso = rh_total_chi_c(pencil(IsolatedData{{node()}})).total;
  auto van = rh_total_chi_c(pencil(VanishingData{node(), 0})).total;
  auto strat = rh_total_chi_c(pencil(StratifiedData{{{"x", 1, node()}}})).total;
  EXPECT_EQ(iso, van);
  EXPECT_EQ(iso, strat);
}

TEST(RiemannHurwitz, SpecialFiberOfNode) {
  CriticalValue cv{"n", IsolatedData{{node()}}};
  EXPECT_EQ(special_fiber_chi(cv, oracle::chi_y_proj_space(1), 1), g("1 - 2*y"));
  EXPECT_EQ(euler(special_fiber_chi(cv, oracle::chi_y_proj_space(1), 1)), 3);
}

TEST(RiemannHurwitz, EulerSpecializationIsClassical) {
  random::Rng rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(random::uniform(rng, 1, 3));
    CurveFibration f{random::genus_polynomial(rng, 3, 0, 2, 5), random::genus_polynomial(rng, 3, 0, n, 5), n + 1,
                     {}, true};
    std::vector<long> special;
    int count = static_cast<int>(random::uniform(rng, 0, 4));
    for (int c = 0; c < count; ++c) {
      std::vector<std::pair<HodgeIndex, Integer>> entries;
      int p = static_cast<int>(random::uniform(rng, 0, n));
      entries.push_back({{n, p, p}, Integer(random::uniform(rng, 1, 4))});
      CriticalValue cv{"c", IsolatedData{{MixedHodgeComplex::from_entries(entries)}}};
      special.push_back(euler(special_fiber_chi(cv, f.generic_fiber, n)));
      f.critical.push_back(cv);
    }
    auto total = rh_total_chi_c(f).total;
    EXPECT_EQ(euler(total), oracle::classical_riemann_hurwitz(euler(f.base_genus_c), euler(f.generic_fiber), special));
  }
}

TEST(RiemannHurwitz, RequiresAttestation) {
  auto f = pencil(IsolatedData{{node()}});
  f.monodromy_attested = false;
  EXPECT_THROW(rh_total_chi_c(f), MonodromyRefusal);
  EXPECT_EQ(rh_total_chi_c(f, true).total, g("1 - 5*y + y^2"));
}

TEST(RiemannHurwitz, RefusesEPolynomialVersion) {
  EXPECT_THROW(rh_total_e_polynomial(pencil(IsolatedData{{node()}})), ValidationError);
}

TEST(Support, RangeCheck) {
  auto ok = validate_vanishing_support(MixedHodgeComplex::from_entries({{{1, 1, 1}, 1}}), 1, 0);
  EXPECT_TRUE(ok.ok);
  auto bad = validate_vanishing_support(MixedHodgeComplex::from_entries({{{3, 1, 1}, 1}, {{0, 0, 0}, 1}}), 1, 0);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.offending_degrees, (std::vector<int>{0, 3}));
  EXPECT_TRUE(validate_vanishing_support(MixedHodgeComplex::from_entries({{{2, 1, 1}, 1}}), 1, 1).ok);
  EXPECT_THROW(validate_vanishing_support({}, 1, -1), ValidationError);
}

TEST(Support, ViolationsStopRiemannHurwitz) {
  auto bad = MixedHodgeComplex::from_entries({{{3, 1, 1}, 1}});
  EXPECT_THROW(rh_total_chi_c(pencil(VanishingData{bad, 0})), ValidationError);
  EXPECT_THROW(rh_total_chi_c(pencil(IsolatedData{{bad}})), ValidationError);
}
