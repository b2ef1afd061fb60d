#include "hodge/error.hpp"
#include "hodge/motivic/variety_class.hpp"
#include "hodge/stratmaps/stratified_map.hpp"
#include "hodge/verify/oracles.hpp"
#include "hodge/verify/random_inputs.hpp"

#include <gtest/gtest.h>

using namespace hodge;

namespace {

GenusPolynomial g(const char* text) { return parse_genus_polynomial(text); }

StratumRecord rec(std::string id, GenusPolynomial genus, std::vector<std::string> below, GenusPolynomial fiber,
                  bool trivial = true) {
  return {std::move(id), std::move(genus), true, std::move(below), std::move(fiber), trivial};
}

}  // namespace

TEST(Strata, BlowUpOfPlaneAtPoint) {
  auto d = StratifiedMapDescriptor::build(
      {rec("U", oracle::chi_y_proj_space(2), {"p"}, 1), rec("p", 1, {}, oracle::chi_y_proj_space(1))}, "U");
  EXPECT_EQ(d.hat_genus("U"), g("-y + y^2"));
  EXPECT_EQ(d.hat_genus("p"), g("1"));
  EXPECT_EQ(total_space_chi_c(d), g("1 - 2*y + y^2"));
}

TEST(Strata, SingleStratumIsMultiplication) {
  random::Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    auto b = random::genus_polynomial(rng), f = random::genus_polynomial(rng);
    auto d = StratifiedMapDescriptor::build({rec("X", b, {}, f)}, "X");
    EXPECT_EQ(total_space_chi_c(d), b * f);
    auto dp = StratifiedMapDescriptor::build({rec("X", b, {}, f)}, "X", GenusKind::projective);
    EXPECT_EQ(total_space_chi(dp), b * f);
  }
}

TEST(Strata, ImpliedEdgesComeFromTransitivity) {
  // A < B < U without listing A < U.
  auto d = StratifiedMapDescriptor::build({rec("U", oracle::chi_y_proj_space(2), {"B"}, 1),
                                           rec("B", oracle::chi_y_proj_space(1), {"A"}, 2), rec("A", 1, {}, 5)},
                                          "U");
  EXPECT_EQ(d.strictly_below(d.index_of("U")).size(), 2u);
  EXPECT_EQ(d.hat_genus("U"), g("y^2"));
  EXPECT_EQ(d.hat_genus("B"), g("-y"));
  EXPECT_EQ(total_space_chi_c(d), oracle::additive_strata_sum({g("y^2"), g("-y"), 1}, {1, 2, 5}));
}

TEST(Strata, OpenGenusInput) {
  auto d = StratifiedMapDescriptor::build(
      {rec("U", oracle::chi_y_proj_space(1), {"p"}, 3), {"p", 1, false, {}, 4, true}}, "U");
  EXPECT_EQ(d.hat_genus("p"), g("1"));
  EXPECT_EQ(total_space_chi_c(d), g("-3*y") + 4);
}

TEST(Strata, RandomPosetsMatchBruteForce) {
  random::Rng rng(73);
  for (int i = 0; i < 300; ++i) {
    auto rs = random::strata(rng);
    auto d = StratifiedMapDescriptor::build(rs.records, rs.generic_id);
    auto brute = oracle::additive_strata_sum(rs.open_genera, rs.fiber_genera);
    ASSERT_EQ(total_space_chi_c(d), brute) << "poset " << i;
    ASSERT_EQ(total_space_chi_c_serial(d), brute);
    for (std::size_t s = 0; s < d.strata().size(); ++s) {
      GenusPolynomial sum = d.hat_genus(s);
      for (auto w : d.strictly_below(s)) sum += d.hat_genus(w);
      ASSERT_EQ(sum, d.closure_genus(s)) << "telescoping at " << d.strata()[s].id;
      // Generated genera are indexed by the numeric suffix of the id.
      ASSERT_EQ(d.hat_genus(s), rs.open_genera[std::stoul(d.strata()[s].id.substr(1))]);
    }
  }
}

TEST(Strata, RejectsMalformedDescriptors) {
  EXPECT_THROW(StratifiedMapDescriptor::build({}, "U"), ValidationError);
  EXPECT_THROW(StratifiedMapDescriptor::build({rec("U", 1, {}, 1), rec("U", 1, {}, 1)}, "U"), ValidationError);
  EXPECT_THROW(StratifiedMapDescriptor::build({rec("U", 1, {"Z"}, 1)}, "U"), ValidationError);
  EXPECT_THROW(StratifiedMapDescriptor::build({rec("U", 1, {"U"}, 1)}, "U"), ValidationError);
  EXPECT_THROW(StratifiedMapDescriptor::build({rec("U", 1, {}, 1), rec("A", 1, {"U"}, 1)}, "U"), ValidationError);
  EXPECT_THROW(StratifiedMapDescriptor::build({rec("U", 1, {}, 1)}, "V"), ValidationError);
  try {
    StratifiedMapDescriptor::build({rec("U", 3, {"A"}, 1), rec("A", 1, {"B"}, 1), rec("B", 1, {"A"}, 1)}, "U");
    FAIL() << "cycle accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
  EXPECT_THROW(StratifiedMapDescriptor::build({{"U", 1, false, {}, 1, true}}, "U", GenusKind::projective),
               ValidationError);
}

TEST(Strata, MonodromyMustBeAttested) {
  auto d = StratifiedMapDescriptor::build(
      {rec("U", oracle::chi_y_proj_space(2), {"p"}, 1), rec("p", 1, {}, oracle::chi_y_proj_space(1), false)}, "U");
  EXPECT_THROW(total_space_chi_c(d), MonodromyRefusal);
  EXPECT_EQ(total_space_chi_c(d, {true}), g("1 - 2*y + y^2"));
}

TEST(Strata, ChiYNeedsProjectiveData) {
  auto d = StratifiedMapDescriptor::build({rec("U", 1, {}, 1)}, "U");
  EXPECT_THROW(total_space_chi(d), ValidationError);
}

TEST(StalkSum, ConstantStalksGiveAdditivity) {
  random::Rng rng(79);
  auto q = MixedHodgeComplex::from_entries({{{0, 0, 0}, 1}});
  for (int i = 0; i < 50; ++i) {
    StalkSumDescriptor d;
    VarietyClass z;
    int n = static_cast<int>(random::uniform(rng, 1, 5));
    for (int s = 0; s < n; ++s) {
      auto piece = VarietyClass::atom({"S" + std::to_string(s), random::e_polynomial(rng), 1, false, false});
      z = z + piece;
      d.strata.push_back({"S" + std::to_string(s), chi_y_c(piece), q});
    }
    EXPECT_EQ(stalk_sum_chi(d), chi_y_c(z));
  }
}

TEST(StalkSum, ShiftNegatesContribution) {
  auto k = MixedHodgeComplex::from_entries({{{0, 0, 0}, 2}, {{1, 1, 0}, 1}});
  StalkSumDescriptor a{{{"S", g("-1 - y"), k}}};
  StalkSumDescriptor b{{{"S", g("-1 - y"), k.shifted(1)}}};
  EXPECT_EQ(stalk_sum_chi(b), -stalk_sum_chi(a));
}
