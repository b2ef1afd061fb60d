#include "hodge/error.hpp"
#include "hodge/polycore/e_polynomial.hpp"
#include "hodge/polycore/genus_polynomial.hpp"
#include "hodge/polycore/json_io.hpp"
#include "hodge/polycore/y_rational.hpp"
#include "hodge/verify/oracles.hpp"
#include "hodge/verify/random_inputs.hpp"

#include <gtest/gtest.h>

using namespace hodge;

namespace {

GenusPolynomial g(const char* text) { return parse_genus_polynomial(text); }

YRational yr(std::vector<long> num, unsigned den = 0) {
  std::vector<Rational> c(num.begin(), num.end());
  return YRational(QPoly(c), den);
}

}  // namespace

TEST(Integer, ParsingAndCombinatorics) {
  EXPECT_EQ(parse_integer("-123456789012345678901234567890").get_str(), "-123456789012345678901234567890");
  EXPECT_THROW(parse_integer("12a"), ValidationError);
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_EQ(factorial(20).get_str(), "2432902008176640000");
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(5, 7), 0);
}

TEST(GenusPolynomial, CanonicalText) {
  EXPECT_EQ(g("1 - 2*y + y^2").to_string(), "1 - 2*y + y^2");
  EXPECT_EQ((g("1 - y") * g("1 - y")).to_string(), "1 - 2*y + y^2");
  EXPECT_EQ(GenusPolynomial().to_string(), "0");
  EXPECT_EQ(g("-y^-1 + 3").to_string(), "-y^-1 + 3");
  EXPECT_EQ(GenusPolynomial::neg_y_geometric(3), g("1 - y + y^2 - y^3"));
  EXPECT_EQ(GenusPolynomial::neg_y_power(3), g("-y^3"));
}

TEST(GenusPolynomial, TextRoundTrip) {
  random::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto p = random::genus_polynomial(rng);
    EXPECT_EQ(parse_genus_polynomial(p.to_string()), p);
    EXPECT_EQ(genus_from_json(genus_to_json(p)), p);
  }
}

TEST(GenusPolynomial, JsonUsesDecimalStrings) {
  auto p = GenusPolynomial::monomial(parse_integer("100000000000000000000000"), 2);
  auto j = genus_to_json(p);
  EXPECT_EQ(j["var"], "y");
  EXPECT_EQ(j["terms"][0]["exp"], 2);
  EXPECT_EQ(j["terms"][0]["coef"], "100000000000000000000000");
}

TEST(GenusPolynomial, RingAxiomsAgainstDenseOracle) {
  random::Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    auto a = random::genus_polynomial(rng), b = random::genus_polynomial(rng), c = random::genus_polynomial(rng);
    EXPECT_EQ(a * b, oracle::dense_multiply(a, b));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, GenusPolynomial());
    EXPECT_EQ(poly_arith(a, b, ArithOp::sub), a - b);
  }
}

TEST(GenusPolynomial, ParallelKernelMatchesSerial) {
  random::Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    auto a = random::genus_polynomial(rng, 120, -60, 60, 1000);
    auto b = random::genus_polynomial(rng, 120, -60, 60, 1000);
    EXPECT_EQ(multiply_serial(a, b), multiply_parallel(a, b));
    EXPECT_EQ(multiply_serial(a, b), oracle::dense_multiply(a, b));
  }
}

TEST(GenusPolynomial, InversionAndEvaluation) {
  auto p = g("1 + 2*y - y^3");
  EXPECT_EQ(p.inverted_variable(), g("1 + 2*y^-1 - y^-3"));
  EXPECT_EQ(p.shifted(2), g("y^2 + 2*y^3 - y^5"));
  EXPECT_EQ(p.evaluate(-1), 0);
  EXPECT_EQ(g("y^-2").evaluate(2), Rational(1, 4));
  EXPECT_EQ(g("1 + y").pow(3), g("1 + 3*y + 3*y^2 + y^3"));
}

TEST(GenusPolynomial, RejectsMalformedText) {
  EXPECT_THROW(parse_genus_polynomial("1 + "), ValidationError);
  EXPECT_THROW(parse_genus_polynomial("x^2"), ValidationError);
}

TEST(EPolynomial, SpecializationsAreHomomorphisms) {
  random::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    auto a = random::e_polynomial(rng), b = random::e_polynomial(rng);
    EXPECT_EQ(a * b, oracle::dense_multiply(a, b));
    EXPECT_EQ(multiply_serial(a, b), a * b);
    for (auto at : {ESpecialization::chi_y, ESpecialization::weight, ESpecialization::euler}) {
      EXPECT_EQ(specialize_e(a * b, at), specialize_e(a, at) * specialize_e(b, at));
      EXPECT_EQ(specialize_e(a - b, at), specialize_e(a, at) - specialize_e(b, at));
    }
    EXPECT_EQ(epoly_from_json(epoly_to_json(a)), a);
  }
}

TEST(EPolynomial, AffineLineSpecializations) {
  auto l = EPolynomial::uv();
  EXPECT_EQ(specialize_e(l, ESpecialization::chi_y), g("-y"));
  EXPECT_EQ(specialize_e(l, ESpecialization::weight), g("y^2"));
  EXPECT_EQ(specialize_e(l, ESpecialization::euler), g("1"));
  EXPECT_EQ(l.pow(2).degree_bound(), 2);
}

TEST(YRational, ReductionCancelsOnePlusY) {
  auto v = yr({1, 2, 1}, 3);  // (1+y)^2 / (1+y)^3
  EXPECT_EQ(v, YRational::one_plus_y_power(-1));
  EXPECT_EQ(v.denominator_power(), 1u);
  EXPECT_TRUE(yr({1, 1}, 1).is_polynomial());
  EXPECT_EQ(yr({2}) * YRational::one_plus_y_power(-2) * YRational::one_plus_y_power(2), yr({2}));
}

TEST(YRational, ReduceIsIdempotent) {
  random::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    auto p = random::genus_polynomial(rng, 4, 0, 5, 6);
    std::vector<Rational> c(6);
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = Rational(v);
    unsigned den = static_cast<unsigned>(random::uniform(rng, 0, 3));
    auto once = YRational::reduce(QPoly(c), den);
    auto twice = YRational::reduce(once.numerator(), once.denominator_power());
    EXPECT_EQ(once, twice);
  }
}

TEST(YRational, UnitsAndInverses) {
  auto u = YRational::one_plus_y_power(3) * Rational(5);
  EXPECT_TRUE(u.is_unit());
  EXPECT_EQ(u * u.inverse(), YRational(1));
  EXPECT_FALSE(YRational::y().is_unit());
  EXPECT_THROW(YRational::y().inverse(), ValidationError);
  EXPECT_EQ(yr({1, 1}, 0).evaluate(-1), 0);
  EXPECT_EQ(yr({3, 0, 3}).to_integer_polynomial(), g("3 + 3*y^2"));
  EXPECT_FALSE(yr({1}, 1).to_integer_polynomial());
}
