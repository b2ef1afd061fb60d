#include "hodge/verify/suites.hpp"

#include "hodge/charclass/classes.hpp"
#include "hodge/charclass/formulas.hpp"
#include "hodge/error.hpp"
#include "hodge/hodgestruct/mixed_hodge.hpp"
#include "hodge/motivic/variety_class.hpp"
#include "hodge/rhcurve/curve_fibration.hpp"
#include "hodge/stratmaps/stratified_map.hpp"
#include "hodge/verify/oracles.hpp"
#include "hodge/verify/random_inputs.hpp"

#include <functional>

namespace hodge::verify {

namespace {

using Report = std::vector<CheckResult>;

void add(Report& r, const std::string& suite, std::string name, bool ok, std::string detail = {}) {
  r.push_back({suite, std::move(name), ok, std::move(detail)});
}

std::string mismatch(const GenusPolynomial& got, const GenusPolynomial& want) {
  return "got " + got.to_string() + ", expected " + want.to_string();
}

void expect_genus(Report& r, const std::string& suite, std::string name, const std::function<GenusPolynomial()>& f,
                  const GenusPolynomial& want) {
  try {
    auto got = f();
    add(r, suite, std::move(name), got == want, got == want ? got.to_string() : mismatch(got, want));
  } catch (const std::exception& e) {
    add(r, suite, std::move(name), false, std::string("threw: ") + e.what());
  }
}

GenusPolynomial g(const char* text) { return parse_genus_polynomial(text); }

// Trials run concurrently, each with its own generator seeded from
// (seed, battery, trial). The first failing trial index is reported.
void battery(Report& r, const std::string& name, std::uint64_t seed, std::uint64_t salt, int trials,
             const std::function<std::string(random::Rng&)>& trial) {
  std::vector<std::string> failures(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    random::Rng rng(seed ^ (salt * 0x9E3779B97F4A7C15ULL) ^ (static_cast<std::uint64_t>(t) << 20));
    try {
      failures[static_cast<std::size_t>(t)] = trial(rng);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(t)] = std::string("threw: ") + e.what();
    }
  }
  for (int t = 0; t < trials; ++t) {
    if (!failures[static_cast<std::size_t>(t)].empty()) {
      add(r, "properties", name, false, "trial " + std::to_string(t) + ": " + failures[static_cast<std::size_t>(t)]);
      return;
    }
  }
  add(r, "properties", name, true, std::to_string(trials) + " trials");
}

MixedHodgeComplex cusp_milnor_fiber() {
  return MixedHodgeComplex::from_entries({{{0, 0, 0}, 1}, {{1, 1, 0}, 1}, {{1, 0, 1}, 1}});
}

// The pencil of conics through four general points of P^2: base P^1, generic
// fiber P^1, three nodal fibers (a pair of lines meeting in one point).
CurveFibration conic_pencil() {
  CurveFibration f;
  f.base_genus_c = oracle::chi_y_proj_space(1);
  f.generic_fiber = oracle::chi_y_proj_space(1);
  f.total_dim = 2;
  f.monodromy_attested = true;
  for (int i = 0; i < 3; ++i) {
    // An A1 point in dimension 2: reduced Milnor fiber cohomology is one
    // class of type (1,1) in degree 1.
    f.critical.push_back({"node" + std::to_string(i + 1),
                          IsolatedData{{MixedHodgeComplex::from_entries({{{1, 1, 1}, 1}})}}});
  }
  return f;
}

Report paper_examples() {
  const std::string s = "paper-examples";
  Report r;
  for (int n = 0; n <= 10; ++n) {
    expect_genus(r, s, "chi_y(P^" + std::to_string(n) + ")", [n] { return chi_y(VarietyClass::proj_space(n)); },
                 oracle::chi_y_proj_space(n));
    expect_genus(r, s, "chi_y_c(P^" + std::to_string(n) + ")", [n] { return chi_y_c(VarietyClass::proj_space(n)); },
                 oracle::chi_y_proj_space(n));
  }
  for (int n = 0; n <= 6; ++n) {
    auto punctured = [n] {
      return VarietyClass::as_atom("C^" + std::to_string(n + 1) + "-0",
                                   VarietyClass::affine_line().pow(static_cast<unsigned>(n + 1)) - VarietyClass::point(),
                                   n + 1, true, false);
    };
    const auto tag = "C^" + std::to_string(n + 1) + " minus origin";
    expect_genus(r, s, "chi_y_c(" + tag + ")", [&] { return chi_y_c(punctured()); },
                 GenusPolynomial::neg_y_power(n + 1) - 1);
    expect_genus(r, s, "chi_y(" + tag + ")", [&] { return chi_y(punctured()); },
                 GenusPolynomial(1) - GenusPolynomial::neg_y_power(n + 1));
    if (n >= 1) {
      expect_genus(r, s, "Hopf multiplicativity chi_y_c, n=" + std::to_string(n),
                   [n] { return product_genus_check(VarietyClass::proj_space(n), VarietyClass::torus()).rhs; },
                   GenusPolynomial::neg_y_power(n + 1) - 1);
      expect_genus(r, s, "Hopf multiplicativity chi_y, n=" + std::to_string(n),
                   [n] { return chi_y(VarietyClass::proj_space(n)) * chi_y(VarietyClass::torus()); },
                   GenusPolynomial(1) - GenusPolynomial::neg_y_power(n + 1));
    }
  }
  expect_genus(r, s, "chi_y_c(C^*)", [] { return chi_y_c(VarietyClass::torus()); }, g("-1 - y"));
  expect_genus(r, s, "chi_y(C^*)", [] { return chi_y(VarietyClass::torus()); }, g("1 + y"));

  // Milnor fibration of x^3 - y^2.
  auto e_class = [] {
    return VarietyClass::as_atom("E", VarietyClass::affine_line().pow(2) - VarietyClass::affine_line(), 2, true, false);
  };
  expect_genus(r, s, "cusp chi_y(F)", [] { return chi_y_of_complex(cusp_milnor_fiber()); }, g("y"));
  expect_genus(r, s, "cusp chi_y_c(F)", [] { return poincare_dual(chi_y_of_complex(cusp_milnor_fiber()), 1); }, g("-1"));
  expect_genus(r, s, "cusp chi_y_c(E)", [&] { return chi_y_c(e_class()); }, g("y + y^2"));
  expect_genus(r, s, "cusp chi_y_c(B)", [] { return chi_y_c(VarietyClass::torus()); }, g("-1 - y"));
  expect_genus(r, s, "cusp chi_y(E)", [&] { return chi_y(e_class()); }, g("1 + y"));
  expect_genus(r, s, "cusp chi_y(B)", [] { return chi_y(VarietyClass::torus()); }, g("1 + y"));
  {
    auto pair = multiplicativity_check(chi_y(e_class()), chi_y(VarietyClass::torus()), chi_y_of_complex(cusp_milnor_fiber()));
    add(r, s, "cusp non-multiplicativity of chi_y", !pair.equal(),
        pair.lhs.to_string() + " vs " + pair.rhs.to_string());
  }

  // Blow-ups against the stratified sum.
  auto p2_strata = [] {
    std::vector<StratumRecord> rec{
        {"U", chi_y_c(VarietyClass::proj_space(2)), true, {"p"}, 1, true},
        {"p", 1, true, {}, oracle::chi_y_proj_space(1), true},
    };
    return total_space_chi_c(StratifiedMapDescriptor::build(rec, "U"));
  };
  expect_genus(r, s, "blow-up of P^2 at a point",
               [] { return chi_y(blowup_class(VarietyClass::proj_space(2), VarietyClass::point(), 1)); }, p2_strata());
  expect_genus(r, s, "blow-up of P^2 at a point, Hodge diamond",
               [] { return chi_y(blowup_class(VarietyClass::proj_space(2), VarietyClass::point(), 1)); },
               oracle::diamond_chi_y({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
  auto p3_strata = [] {
    std::vector<StratumRecord> rec{
        {"U", chi_y_c(VarietyClass::proj_space(3)), true, {"line"}, 1, true},
        {"line", oracle::chi_y_proj_space(1), true, {}, oracle::chi_y_proj_space(1), true},
    };
    return total_space_chi_c(StratifiedMapDescriptor::build(rec, "U"));
  };
  expect_genus(r, s, "blow-up of P^3 along a line",
               [] { return chi_y(blowup_class(VarietyClass::proj_space(3), VarietyClass::proj_space(1), 1)); },
               p3_strata());
  expect_genus(r, s, "blow-up of P^3 along a line, closed form",
               [] { return chi_y(blowup_class(VarietyClass::proj_space(3), VarietyClass::proj_space(1), 1)); },
               g("1 - 2*y + 2*y^2 - y^3"));

  // Riemann-Hurwitz for the conic pencil, against four point blow-ups of P^2.
  auto bl4 = [] {
    VarietyClass x = VarietyClass::proj_space(2);
    for (int i = 0; i < 4; ++i) x = blowup_class(x, VarietyClass::point(), 1);
    return chi_y(x);
  };
  expect_genus(r, s, "conic pencil Riemann-Hurwitz", [] { return rh_total_chi_c(conic_pencil()).total; }, bl4());
  expect_genus(r, s, "conic pencil closed form", [] { return rh_total_chi_c(conic_pencil()).total; }, g("1 - 5*y + y^2"));
  {
    auto f = conic_pencil();
    std::vector<long> special;
    for (const auto& cv : f.critical) {
      special.push_back(special_fiber_chi(cv, f.generic_fiber, f.fiber_dim()).evaluate(-1).get_num().get_si());
    }
    long classical = oracle::classical_riemann_hurwitz(2, 2, special);
    auto euler = rh_total_chi_c(f).total.evaluate(-1);
    add(r, s, "conic pencil Euler characteristic", euler == classical,
        "engine " + euler.get_str() + ", classical " + std::to_string(classical));
  }
  return r;
}

Report properties(std::uint64_t seed) {
  Report r;
  battery(r, "genus ring multiplication vs dense", seed, 1, 300, [](random::Rng& rng) -> std::string {
    auto a = random::genus_polynomial(rng), b = random::genus_polynomial(rng);
    if (a * b != oracle::dense_multiply(a, b)) return "product mismatch";
    if (multiply_serial(a, b) != multiply_parallel(a, b)) return "serial/parallel mismatch";
    return {};
  });
  battery(r, "E-polynomial multiplication vs dense", seed, 2, 300, [](random::Rng& rng) -> std::string {
    auto a = random::e_polynomial(rng), b = random::e_polynomial(rng);
    if (a * b != oracle::dense_multiply(a, b)) return "product mismatch";
    for (auto at : {ESpecialization::chi_y, ESpecialization::weight, ESpecialization::euler}) {
      if (specialize_e(a * b, at) != specialize_e(a, at) * specialize_e(b, at)) return "specialization not multiplicative";
      if (specialize_e(a + b, at) != specialize_e(a, at) + specialize_e(b, at)) return "specialization not additive";
    }
    return {};
  });
  battery(r, "duality involution", seed, 3, 300, [](random::Rng& rng) -> std::string {
    auto p = random::genus_polynomial(rng);
    int n = static_cast<int>(random::uniform(rng, 0, 6));
    if (poincare_dual(poincare_dual(p, n), n) != p) return "dual(dual(p)) != p for " + p.to_string();
    return {};
  });
  battery(r, "mixed Hodge chi_y additivity and shift", seed, 4, 300, [](random::Rng& rng) -> std::string {
    auto a = random::mixed_hodge(rng), b = random::mixed_hodge(rng);
    if (chi_y_of_complex(a + b) != chi_y_of_complex(a) + chi_y_of_complex(b)) return "not additive";
    if (chi_y_of_complex(a.shifted(1)) != -chi_y_of_complex(a)) return "shift does not negate";
    return {};
  });
  battery(r, "stratified sum vs brute force", seed, 5, 500, [](random::Rng& rng) -> std::string {
    auto rs = random::strata(rng);
    auto d = StratifiedMapDescriptor::build(rs.records, rs.generic_id);
    auto brute = oracle::additive_strata_sum(rs.open_genera, rs.fiber_genera);
    if (total_space_chi_c(d) != brute) return "total " + total_space_chi_c(d).to_string() + " vs " + brute.to_string();
    if (total_space_chi_c_serial(d) != brute) return "serial reduction differs";
    for (std::size_t i = 0; i < d.strata().size(); ++i) {
      GenusPolynomial sum = d.hat_genus(i);
      for (auto w : d.strictly_below(i)) sum += d.hat_genus(w);
      if (sum != d.closure_genus(i)) return "telescoping fails at " + d.strata()[i].id;
    }
    return {};
  });
  battery(r, "multiplicative classes are Whitney multiplicative", seed, 6, 60, [](random::Rng& rng) -> std::string {
    auto ring = random::small_ring(rng);
    auto a = random::split_bundle(rng, ring, static_cast<int>(random::uniform(rng, 1, 3))).bundle;
    auto b = random::split_bundle(rng, ring, static_cast<int>(random::uniform(rng, 1, 3))).bundle;
    for (auto kind : {SeriesKind::todd, SeriesKind::hirzebruch, SeriesKind::hirzebruch_normalized, SeriesKind::lambda_y}) {
      const auto& q = catalog_series(kind, ring->top_degree());
      if (genus_from_series(q, whitney_sum(a, b)) != genus_from_series(q, a) * genus_from_series(q, b)) {
        return "Whitney fails for series kind " + std::to_string(static_cast<int>(kind));
      }
    }
    if (chern_character(whitney_sum(a, b)) != chern_character(a) + chern_character(b)) return "ch not additive";
    return {};
  });
  battery(r, "normalized and unnormalized Meyer agree", seed, 7, 200, [](random::Rng& rng) -> std::string {
    auto ring = random::small_ring(rng);
    auto v = random::hodge_collection(rng, ring, HodgeIndexing::by_type);
    auto t = tangent_bundle(ring);
    auto a = meyer_twisted(ring, t, v), b = meyer_twisted_normalized(ring, t, v);
    return a == b ? std::string() : mismatch(b, a);
  });
  return r;
}

Report cross_checks(std::uint64_t seed) {
  const std::string s = "cross-checks";
  Report r;
  for (int n = 0; n <= 6; ++n) {
    expect_genus(r, s, "ghrr(P^" + std::to_string(n) + ", O) = chi_y(P^n)",
                 [n] {
                   auto ring = CohomRing::proj_space(n);
                   return ghrr(ring, tangent_bundle(ring), BundleData::trivial(ring, 1));
                 },
                 chi_y(VarietyClass::proj_space(n)));
  }
  for (long d = -5; d <= 5; ++d) {
    auto ring = CohomRing::proj_space(1);
    auto v = ghrr(ring, tangent_bundle(ring), line_bundle_o(ring, {d}));
    auto [h0, h1] = oracle::cech_dims_p1(d);
    add(r, s, "ghrr(P^1, O(" + std::to_string(d) + ")) at y=0 vs Cech", v.evaluate(0) == h0 - h1, v.to_string());
  }
  {
    random::Rng rng(seed);
    for (int t = 0; t < 12; ++t) {
      auto ring = random::small_ring(rng);
      auto cls = hirzebruch_class(tangent_bundle(ring));
      auto euler = evaluate_at(cls, -1).integrate();
      long cells = oracle::cell_count(ring);
      add(r, s, "hirzebruch class at y=-1 integrates to Euler, ring " + ring->signature(),
          euler == cells, euler.get_str() + " vs " + std::to_string(cells));
    }
  }
  auto base = CohomRing::proj_space(1);
  std::vector<std::pair<std::string, RingPtr>> models{{"P1 x P1", CohomRing::product({base, CohomRing::proj_space(1)})}};
  for (long k = 0; k <= 4; ++k) {
    models.emplace_back("P(O + O(" + std::to_string(k) + "))",
                        CohomRing::proj_bundle(base, 2, {base->generator("h") * Rational(k)}));
  }
  for (const auto& [name, total] : models) {
    try {
      auto pair = class_level_atiyah_check(total);
      add(r, s, "class-level Atiyah-Meyer, " + name, pair.equal(), to_string(pair.lhs) + " vs " + to_string(pair.rhs));
      auto b = model_base(total);
      auto genus = atiyah_meyer_chi(b, tangent_bundle(b), cellular_fiber_collection(total));
      auto integrated = integrate_to_genus(pair.lhs, "class-level lhs");
      auto direct = ghrr(total, tangent_bundle(total), BundleData::trivial(total, 1));
      add(r, s, "integrated class equals genus, " + name, integrated == genus && genus == direct,
          integrated.to_string() + ", " + genus.to_string() + ", " + direct.to_string());
    } catch (const std::exception& e) {
      add(r, s, "class-level Atiyah-Meyer, " + name, false, std::string("threw: ") + e.what());
    }
  }
  {
    random::Rng rng(seed + 1);
    bool ok = true;
    std::string detail = "40 trials";
    for (int t = 0; t < 40 && ok; ++t) {
      auto ring = random::small_ring(rng);
      auto h = random::flat_collection(rng, ring);
      auto tb = tangent_bundle(ring);
      auto am = atiyah_meyer_chi(ring, tb, h);
      auto expected = ghrr(ring, tb, BundleData::trivial(ring, 1)) * h.rank_genus();
      if (am != expected) {
        ok = false;
        detail = "trial " + std::to_string(t) + ": " + mismatch(am, expected);
      }
      auto v = random::hodge_collection(rng, ring, HodgeIndexing::by_type);
      const auto ch = v.ch_chi_y();
      GenusPolynomial from_ch;
      for (int k = 0; k <= 8; ++k) {
        Rational c = y_coefficient(ch, k).constant_term();
        if (c != 0) from_ch += GenusPolynomial::monomial(c.get_num(), k);
      }
      if (from_ch != v.rank_genus()) {
        ok = false;
        detail = "trial " + std::to_string(t) + ": degree-0 part of ch " + from_ch.to_string() + " vs " +
                 v.rank_genus().to_string();
      }
    }
    add(r, s, "flat collections collapse Atiyah-Meyer", ok, detail);
  }
  {
    auto p1 = CohomRing::proj_space(1);
    expect_genus(r, s, "log formula, P^1 minus one point",
                 [&] { return log_chi_y(p1, tangent_bundle(p1), {{}, line_bundle_o(p1, {-1})}, std::nullopt); },
                 chi_y(VarietyClass::affine_line()));
    expect_genus(r, s, "log formula, P^1 minus two points",
                 [&] { return log_chi_y(p1, tangent_bundle(p1), {{}, line_bundle_o(p1, {0})}, std::nullopt); },
                 chi_y(VarietyClass::torus()));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paper-examples", "properties", "cross-checks"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed) {
  if (suite == "paper-examples") return paper_examples();
  if (suite == "properties") return properties(seed);
  if (suite == "cross-checks") return cross_checks(seed);
  if (suite == "all") {
    Report all = paper_examples();
    for (auto& c : properties(seed)) all.push_back(std::move(c));
    for (auto& c : cross_checks(seed)) all.push_back(std::move(c));
    return all;
  }
  throw ValidationError("unknown suite '" + std::string(suite) + "'");
}

}  // namespace hodge::verify
