#include "hodge/charclass/formulas.hpp"
#include "hodge/error.hpp"
#include "hodge/motivic/variety_class.hpp"
#include "hodge/polycore/genus_polynomial.hpp"
#include "hodge/verify/oracles.hpp"
#include "hodge/verify/random_inputs.hpp"

#include <gtest/gtest.h>

using namespace hodge;

namespace {

GenusPolynomial g(const char* text) { return parse_genus_polynomial(text); }

ClassPolynomial cls(const RingPtr& ring, std::vector<std::pair<std::string, YRational>> terms) {
  ClassPolynomial c(ring);
  for (auto& [name, coef] : terms) c += lift(name == "1" ? ring->one() : ring->generator(name)) * coef;
  return c;
}

YRational yr(std::vector<long> num) {
  std::vector<Rational> c(num.begin(), num.end());
  return YRational(QPoly(c));
}

}  // namespace

TEST(CohomRing, ProjectiveSpaceTruncates) {
  auto p2 = CohomRing::proj_space(2);
  auto h = p2->generator("h");
  EXPECT_EQ((h * h).integrate(), 1);
  EXPECT_TRUE((h * h * h).is_zero());
  EXPECT_EQ(p2->betti(), (std::vector<long>{1, 1, 1}));
}

TEST(CohomRing, ProductIntegratesTensorTop) {
  auto r = CohomRing::product({CohomRing::proj_space(1), CohomRing::proj_space(2)});
  auto h1 = r->generator("h1"), h2 = r->generator("h2");
  EXPECT_EQ((h1 * h2 * h2).integrate(), 1);
  EXPECT_TRUE((h1 * h1).is_zero());
  EXPECT_EQ(r->top_degree(), 3);
}

TEST(CohomRing, HirzebruchSurfaceIntersections) {
  // P(O + O(k)) over P^1: xi^2 = -k h xi, so xi^2 integrates to -k.
  for (long k = 0; k <= 4; ++k) {
    auto b = CohomRing::proj_space(1);
    auto e = CohomRing::proj_bundle(b, 2, {b->generator("h") * Rational(k)});
    auto xi = e->xi();
    auto f = e->generator("h");
    EXPECT_EQ((xi * f).integrate(), 1);
    EXPECT_EQ((xi * xi).integrate(), -k);
    EXPECT_TRUE((f * f).is_zero());
  }
}

TEST(CohomRing, CustomRingRejectsNonAssociativeTable) {
  CustomRingSpec spec;
  spec.basis = {{"a", 1}, {"b", 1}, {"t", 2}};
  spec.products = {{"a", "a", {{"t", 1}}}, {"a", "b", {{"t", 1}}}, {"b", "b", {{"t", 2}}}};
  spec.top = "t";
  EXPECT_NO_THROW(CohomRing::custom(spec));
  spec.basis.push_back({"u", 3});
  spec.top = "u";
  spec.products.push_back({"a", "t", {{"u", 1}}});
  spec.products.push_back({"b", "t", {{"u", 5}}});
  // (a*b)*a = t*a = u but a*(b*a) = a*t = u, fine; (a*a)*b = t*b = 5u but a*(a*b) = a*t = u.
  EXPECT_THROW(CohomRing::custom(spec), ValidationError);
}

TEST(GenusFromSeries, ElementarySymmetricExpansion) {
  auto r = CohomRing::product({CohomRing::proj_space(1), CohomRing::proj_space(1)});
  auto e = whitney_sum(BundleData::line(r->generator("h1")), BundleData::line(r->generator("h2") * Rational(3)));
  auto c = genus_from_series(catalog_series(SeriesKind::chern, r->top_degree()), e);
  EXPECT_EQ(c, lift(e.total_chern()));
}

TEST(GenusFromSeries, ToddOfProjectiveLine) {
  auto p1 = CohomRing::proj_space(1);
  EXPECT_EQ(todd_class(tangent_bundle(p1)), cls(p1, {{"1", 1}, {"h", 1}}));
}

TEST(GenusFromSeries, HirzebruchOfProjectiveLine) {
  auto p1 = CohomRing::proj_space(1);
  auto t = hirzebruch_class(tangent_bundle(p1));
  EXPECT_EQ(t, cls(p1, {{"1", yr({1, 1})}, {"h", yr({1, -1})}}));
  EXPECT_EQ(t.constant_term(), YRational::one_plus_y_power(1));
}

TEST(GenusFromSeries, RejectsNonUnitConstantTerm) {
  auto p1 = CohomRing::proj_space(1);
  Series q{YRational::y(), YRational(1)};
  EXPECT_THROW(genus_from_series(q, tangent_bundle(p1)), ValidationError);
}

TEST(GenusFromSeries, LambdaYOfCotangentLine) {
  auto p1 = CohomRing::proj_space(1);
  auto l = lambda_y_class(dual(tangent_bundle(p1)));
  EXPECT_EQ(l, cls(p1, {{"1", yr({1, 1})}, {"h", yr({0, -2})}}));
}

TEST(GenusFromSeries, NormalizedSeriesMatchesRescaling) {
  const int d = 8;
  auto direct = catalog_series(SeriesKind::hirzebruch_normalized, d);
  auto rescaled = rescaled_normalization(catalog_series(SeriesKind::hirzebruch, d));
  for (int k = 0; k <= d; ++k) EXPECT_EQ(direct[k], rescaled[k]) << "k = " << k;
}

TEST(GenusFromSeries, WhitneyMultiplicativity) {
  random::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto ring = random::small_ring(rng);
    auto a = random::split_bundle(rng, ring, static_cast<int>(random::uniform(rng, 1, 3))).bundle;
    auto b = random::split_bundle(rng, ring, static_cast<int>(random::uniform(rng, 1, 3))).bundle;
    for (auto kind : {SeriesKind::todd, SeriesKind::hirzebruch, SeriesKind::hirzebruch_normalized, SeriesKind::lambda_y}) {
      const auto& q = catalog_series(kind, ring->top_degree());
      EXPECT_EQ(genus_from_series(q, whitney_sum(a, b)), genus_from_series(q, a) * genus_from_series(q, b));
    }
  }
}

TEST(GenusFromSeries, AgreesWithExplicitRoots) {
  random::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto ring = random::small_ring(rng);
    auto s = random::split_bundle(rng, ring, static_cast<int>(random::uniform(rng, 1, 4)));
    const auto& q = catalog_series(SeriesKind::hirzebruch, ring->top_degree());
    EXPECT_EQ(genus_from_series(q, s.bundle), oracle::root_product(s.roots, q));
    EXPECT_EQ(chern_character(s.bundle), oracle::root_chern_character(s.roots));
  }
}

TEST(ChernCharacter, LineAndTrivialBundles) {
  auto p1 = CohomRing::proj_space(1);
  for (long d = -3; d <= 3; ++d) {
    EXPECT_EQ(chern_character(line_bundle_o(p1, {d})), p1->one() + p1->generator("h") * Rational(d));
  }
  EXPECT_EQ(chern_character(BundleData::trivial(p1, 4)), p1->one() * Rational(4));
}

TEST(Ghrr, ProjectiveSpaces) {
  for (int n = 0; n <= 6; ++n) {
    auto r = CohomRing::proj_space(n);
    EXPECT_EQ(ghrr(r, tangent_bundle(r), BundleData::trivial(r, 1)), oracle::chi_y_proj_space(n)) << "n = " << n;
  }
}

TEST(Ghrr, LineBundlesOnP1) {
  auto p1 = CohomRing::proj_space(1);
  for (long d = -5; d <= 5; ++d) {
    auto v = ghrr(p1, tangent_bundle(p1), line_bundle_o(p1, {d}));
    EXPECT_EQ(v, GenusPolynomial(1 + d) + GenusPolynomial::monomial(d - 1, 1));
    auto [h0, h1] = oracle::cech_dims_p1(d);
    EXPECT_EQ(v.evaluate(0), h0 - h1);
  }
}

TEST(Meyer, LineBundleVariation) {
  auto p1 = CohomRing::proj_space(1);
  for (long d = -3; d <= 3; ++d) {
    HodgeBundleCollection v{p1, HodgeIndexing::by_type, {{{0, 0}, line_bundle_o(p1, {d})}}};
    auto expected = g("1 - y") + GenusPolynomial(d) * g("1 + y");
    EXPECT_EQ(meyer_twisted(p1, tangent_bundle(p1), v), expected);
    EXPECT_EQ(meyer_twisted_normalized(p1, tangent_bundle(p1), v), expected);
  }
}

TEST(Meyer, EmptyCollectionIsZero) {
  auto p2 = CohomRing::proj_space(2);
  HodgeBundleCollection v{p2, HodgeIndexing::by_type, {}};
  EXPECT_TRUE(meyer_twisted_normalized(p2, tangent_bundle(p2), v).is_zero());
  EXPECT_TRUE(meyer_twisted(p2, tangent_bundle(p2), v).is_zero());
}

TEST(AtiyahMeyer, ProjectiveFiberOverP1) {
  auto p1 = CohomRing::proj_space(1);
  for (int r = 1; r <= 4; ++r) {
    HodgeBundleCollection h{p1, HodgeIndexing::by_type, {}};
    for (int p = 0; p < r; ++p) h.entries.emplace(std::pair{p, p}, BundleData::trivial(p1, 1));
    EXPECT_EQ(atiyah_meyer_chi(p1, tangent_bundle(p1), h), g("1 - y") * oracle::chi_y_proj_space(r - 1));
  }
}

TEST(Higher, UnitAndHyperplane) {
  auto p1 = CohomRing::proj_space(1);
  EXPECT_EQ(higher_chi_y(p1, tangent_bundle(p1), p1->one()), g("1 - y"));
  EXPECT_EQ(higher_chi_y(p1, tangent_bundle(p1), p1->generator("h")), g("1 + y"));
  auto p3 = CohomRing::proj_space(3);
  EXPECT_EQ(higher_chi_y(p3, tangent_bundle(p3), p3->top_class()), g("1 + 3*y + 3*y^2 + y^3"));
}

TEST(LogFormula, PuncturedLines) {
  auto p1 = CohomRing::proj_space(1);
  LogForms one{{}, line_bundle_o(p1, {-1})};
  LogForms two{{}, line_bundle_o(p1, {0})};
  EXPECT_EQ(log_chi_y(p1, tangent_bundle(p1), one, std::nullopt), chi_y(VarietyClass::affine_line()));
  EXPECT_EQ(log_chi_y(p1, tangent_bundle(p1), two, std::nullopt), chi_y(VarietyClass::torus()));
  LogForms empty{{}, dual(tangent_bundle(p1))};
  EXPECT_EQ(log_chi_y(p1, tangent_bundle(p1), empty, std::nullopt), g("1 - y"));
  LogForms per_degree{{BundleData::trivial(p1, 1), line_bundle_o(p1, {-1})}, std::nullopt};
  EXPECT_EQ(log_chi_y(p1, tangent_bundle(p1), per_degree, std::nullopt), g("1"));
}

TEST(Pushforward, SegreNormalization) {
  auto b = CohomRing::proj_space(2);
  auto e = CohomRing::proj_bundle(b, 3, {b->generator("h") * Rational(2), b->generator("h").pow(2)});
  auto xi = e->xi();
  EXPECT_EQ(pushforward(e, b, PushforwardKind::projective_bundle, xi.pow(2)), b->one());
  EXPECT_TRUE(pushforward(e, b, PushforwardKind::projective_bundle, xi).is_zero());
  EXPECT_EQ(pushforward(e, b, PushforwardKind::projective_bundle, xi.pow(3)), b->generator("h") * Rational(-2));
}

TEST(Pushforward, ProductAndTrivialBundleAgree) {
  auto b = CohomRing::proj_space(1);
  auto prod = CohomRing::product({b, CohomRing::proj_space(1)});
  auto pb = CohomRing::proj_bundle(b, 2, {});
  // Under P(O + O) = P^1 x P^1, h1 <-> h and h2 <-> xi.
  auto a1 = pushforward(prod, b, PushforwardKind::product_projection, prod->generator("h2"));
  auto a2 = pushforward(pb, b, PushforwardKind::projective_bundle, pb->xi());
  EXPECT_EQ(a1, a2);
  auto c1 = pushforward(prod, b, PushforwardKind::product_projection, prod->generator("h1") * prod->generator("h2"));
  auto c2 = pushforward(pb, b, PushforwardKind::projective_bundle, pb->generator("h") * pb->xi());
  EXPECT_EQ(c1, c2);
  EXPECT_EQ(c1, b->generator("h"));
}

TEST(Pushforward, RejectsKindMismatch) {
  auto b = CohomRing::proj_space(1);
  auto prod = CohomRing::product({b, CohomRing::proj_space(1)});
  EXPECT_THROW(pushforward(prod, b, PushforwardKind::projective_bundle, prod->one()), ValidationError);
}

TEST(ClassLevel, AtiyahMeyerModels) {
  auto b = CohomRing::proj_space(1);
  auto tb = hirzebruch_class_smooth(b, tangent_bundle(b));
  ClassPolynomial target = tb;
  target *= yr({1, -1});
  auto prod = class_level_atiyah_check(CohomRing::product({b, CohomRing::proj_space(1)}));
  EXPECT_TRUE(prod.equal());
  EXPECT_EQ(prod.lhs, target);
  for (long k = 0; k <= 4; ++k) {
    auto pb = CohomRing::proj_bundle(b, 2, {b->generator("h") * Rational(k)});
    auto pair = class_level_atiyah_check(pb);
    EXPECT_TRUE(pair.equal()) << "k = " << k;
    EXPECT_EQ(pair.lhs, target);
  }
}

TEST(ClassLevel, RelativeTangentTopChernVanishes) {
  auto b = CohomRing::proj_space(2);
  auto e = CohomRing::proj_bundle(b, 2, {b->generator("h") * Rational(3), b->generator("h").pow(2) * Rational(2)});
  auto t = relative_tangent(e);
  EXPECT_EQ(t.rank(), 1);
  EXPECT_TRUE(t.c(2).is_zero());
  // Euler characteristic of the total space: 3 * 2 cells.
  auto euler = ghrr(e, tangent_bundle(e), BundleData::trivial(e, 1)).evaluate(-1);
  EXPECT_EQ(euler, 6);
}
