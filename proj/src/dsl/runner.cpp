#include "hodge/dsl/runner.hpp"

#include "hodge/charclass/classes.hpp"
#include "hodge/charclass/formulas.hpp"
#include "hodge/dsl/parser.hpp"
#include "hodge/error.hpp"
#include "hodge/motivic/variety_class.hpp"
#include "hodge/polycore/json_io.hpp"
#include "hodge/rhcurve/curve_fibration.hpp"
#include "hodge/stratmaps/stratified_map.hpp"
#include "hodge/verify/suites.hpp"

#include <sstream>
#include <unordered_map>

namespace hodge::dsl {

namespace {

using json = nlohmann::json;

using Value = std::variant<VarietyClass, MixedHodgeComplex, GenusPolynomial, StratifiedMapDescriptor,
                           StalkSumDescriptor, CurveFibration, RingPtr, BundleData, HodgeBundleCollection, CohomClass>;

struct Result {
  std::string text;
  json value;
  std::optional<GenusPolynomial> genus;
  std::optional<bool> truth;
  // A false truth value is an error when the query is not wrapped in an assert.
  bool must_hold = false;
};

struct AssertFailure {
  std::string message;
};

json diagnostic_json(const Diagnostic& d) {
  return {{"severity", d.severity == Diagnostic::Severity::error ? "error" : "warning"},
          {"line", d.loc.line},
          {"col", d.loc.col},
          {"code", d.code},
          {"message", d.message}};
}

std::string indent(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += "  " + line + "\n";
  return out;
}

json class_json(const ClassPolynomial& c) {
  json terms = json::array();
  for (const auto& [i, coef] : c.terms()) {
    const auto& num = coef.numerator().coefficients();
    for (std::size_t k = 0; k < num.size(); ++k) {
      if (num[k] == 0) continue;
      terms.push_back({{"y", k},
                       {"basis", c.ring()->basis(i).name},
                       {"coef", num[k].get_str()},
                       {"den_pow", coef.denominator_power()}});
    }
  }
  return {{"ring", c.ring()->signature()}, {"terms", terms}};
}

json class_json(const CohomClass& c) { return class_json(lift(c)); }

Result genus_result(const GenusPolynomial& p, std::string_view var = "y") {
  Result r;
  r.text = p.to_string(var);
  r.value = {{"genus", genus_to_json(p, var)}};
  r.genus = p;
  return r;
}

class Runner {
 public:
  explicit Runner(const RunOptions& options) : opts_(options) {}

  RunOutput execute(const Script& script) {
    for (const auto& st : script.statements) {
      Loc loc = std::visit([](const auto& s) { return s.loc; }, st);
      try {
        if (const auto* b = std::get_if<Binding>(&st)) {
          bind(*b);
        } else {
          const auto& q = std::get<Query>(st);
          if (!selected(q)) continue;
          Result r = query(q);
          if (r.must_hold && r.truth && !*r.truth) {
            emit(q, r);
            throw ValidationError(q.verb + " failed");
          }
          emit(q, r);
        }
      } catch (const AssertFailure& e) {
        return finish(loc, "E-assert", e.message, kExitValidation);
      } catch (const MonodromyRefusal& e) {
        return finish(loc, "E-monodromy", e.what(), kExitMonodromy);
      } catch (const InconsistencyError& e) {
        return finish(loc, "E-inconsistent", e.what(), kExitValidation);
      } catch (const ValidationError& e) {
        return finish(loc, "E-validation", e.what(), kExitValidation);
      } catch (const std::exception& e) {
        return finish(loc, "E-internal", e.what(), kExitValidation);
      }
    }
    return finish(std::nullopt, "", "", kExitOk);
  }

 private:
  // ----- output --------------------------------------------------------------

  bool selected(const Query& q) const {
    if (!opts_.verbs) return true;
    const Query* inner = &q;
    while (const auto* a = std::get_if<AssertQuery>(&inner->body)) inner = a->inner.get();
    return opts_.verbs->count(inner->verb) > 0;
  }

  void emit(const Query& q, const Result& r) {
    if (opts_.format == OutputFormat::text) {
      text_ += "> " + q.text + "\n" + indent(r.text);
    } else {
      results_.push_back({{"line", q.loc.line}, {"verb", q.verb}, {"query", q.text}, {"value", r.value}});
    }
  }

  RunOutput finish(std::optional<Loc> loc, const std::string& code, const std::string& message, int exit_code) {
    RunOutput out;
    out.exit_code = exit_code;
    json diags = json::array();
    if (loc) {
      Diagnostic d{Diagnostic::Severity::error, *loc, code, message};
      diags.push_back(diagnostic_json(d));
      if (opts_.format == OutputFormat::text) text_ += to_string(d) + "\n";
    }
    if (opts_.format == OutputFormat::text) {
      out.output = text_;
    } else {
      out.output = json{{"results", results_}, {"diagnostics", diags}, {"exit_code", exit_code}}.dump(2) + "\n";
    }
    return out;
  }

  // ----- environment -----------------------------------------------------------

  template <typename T>
  const T& lookup(const std::string& name) const {
    auto it = env_.find(name);
    if (it == env_.end()) throw ValidationError("'" + name + "' is not defined");
    const T* v = std::get_if<T>(&it->second);
    if (!v) throw ValidationError("'" + name + "' has the wrong kind");
    return *v;
  }

  void bind(const Binding& b) {
    Value v = std::visit(
        [&](const auto& lit) -> Value {
          using L = std::decay_t<decltype(lit)>;
          if constexpr (std::is_same_v<L, VExprPtr>) {
            return variety(*lit);
          } else if constexpr (std::is_same_v<L, MhsSrc>) {
            return mhs(lit);
          } else if constexpr (std::is_same_v<L, GExpr>) {
            return genus(lit);
          } else if constexpr (std::is_same_v<L, StrataLit>) {
            return strata(lit);
          } else if constexpr (std::is_same_v<L, StalksLit>) {
            return stalks(lit);
          } else if constexpr (std::is_same_v<L, FibrationLit>) {
            return fibration(lit);
          } else if constexpr (std::is_same_v<L, RingExprPtr>) {
            return ring(*lit);
          } else if constexpr (std::is_same_v<L, BundleLit>) {
            auto r = ring(*lit.ring);
            return bundle(*lit.bundle, r);
          } else if constexpr (std::is_same_v<L, HodgeCollLit>) {
            return collection(lit);
          } else {
            auto r = ring(*lit.ring);
            return element(*lit.element, r);
          }
        },
        b.value);
    env_.insert_or_assign(b.name, std::move(v));
  }

  // ----- evaluators --------------------------------------------------------------

  VarietyClass variety(const VExpr& e) const {
    switch (e.kind) {
      case VExpr::Kind::integer: {
        if (e.n == 1) return VarietyClass::point();
        if (e.n >= 0) {
          return VarietyClass::atom({std::to_string(e.n), EPolynomial(e.n), 0, true, true});
        }
        return VarietyClass() - VarietyClass::atom({std::to_string(-e.n), EPolynomial(-e.n), 0, true, true});
      }
      case VExpr::Kind::point: return VarietyClass::point();
      case VExpr::Kind::affine_line: return VarietyClass::affine_line();
      case VExpr::Kind::torus: return VarietyClass::torus();
      case VExpr::Kind::proj: return VarietyClass::proj_space(static_cast<int>(e.n));
      case VExpr::Kind::ref: return lookup<VarietyClass>(e.name);
      case VExpr::Kind::atom: {
        if (e.epoly) {
          int dim = e.dim.value_or(e.epoly->degree_bound());
          return VarietyClass::atom({e.name, *e.epoly, dim, e.smooth, e.complete});
        }
        VarietyClass of = variety(*e.a);
        return VarietyClass::as_atom(e.name, of, e.dim.value_or(of.dim()), e.smooth, e.complete);
      }
      case VExpr::Kind::add: return variety(*e.a) + variety(*e.b);
      case VExpr::Kind::sub: return variety(*e.a) - variety(*e.b);
      case VExpr::Kind::mul: return variety(*e.a) * variety(*e.b);
      case VExpr::Kind::pow: return variety(*e.a).pow(static_cast<unsigned>(e.n));
      case VExpr::Kind::blowup: return blowup_class(variety(*e.a), variety(*e.b), static_cast<int>(e.n));
    }
    throw std::logic_error("unhandled variety expression");
  }

  MixedHodgeComplex mhs(const MhsSrc& m) const {
    if (m.ref) return lookup<MixedHodgeComplex>(*m.ref);
    return MixedHodgeComplex::from_entries(m.entries);
  }

  GenusPolynomial genus(const GExpr& g) const {
    switch (g.kind) {
      case GExpr::Kind::literal: return g.literal;
      case GExpr::Kind::chi_y_c: return chi_y_c(variety(*g.variety));
      case GExpr::Kind::chi_y: return chi_y(variety(*g.variety));
      case GExpr::Kind::chi_y_mhs: return chi_y_of_complex(mhs(g.mhs));
      case GExpr::Kind::ref: return lookup<GenusPolynomial>(g.name);
    }
    throw std::logic_error("unhandled genus expression");
  }

  StratifiedMapDescriptor strata(const StrataLit& lit) const {
    std::vector<StratumRecord> records;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::string> generic;
    for (const auto& s : lit.strata) {
      index[s.id] = records.size();
      records.push_back({s.id, genus(s.genus), s.genus_is_closure, {}, genus(s.fiber), s.trivial_monodromy});
      if (s.generic) generic.push_back(s.id);
    }
    // `S under T` places S in the closure of T.
    for (const auto& s : lit.strata) {
      for (const auto& [above, loc] : s.under) records[index.at(above)].below.push_back(s.id);
    }
    if (generic.size() != 1) {
      throw ValidationError("a strata block needs exactly one stratum marked generic, found " +
                            std::to_string(generic.size()));
    }
    return StratifiedMapDescriptor::build(std::move(records), generic.front(),
                                          lit.projective ? GenusKind::projective : GenusKind::compact_support);
  }

  StalkSumDescriptor stalks(const StalksLit& lit) const {
    StalkSumDescriptor d;
    for (const auto& s : lit.strata) d.strata.push_back({s.id, genus(s.open), mhs(s.stalk)});
    return d;
  }

  CurveFibration fibration(const FibrationLit& lit) const {
    CurveFibration f;
    f.base_genus_c = genus(lit.base);
    f.generic_fiber = genus(lit.fiber);
    f.total_dim = static_cast<int>(lit.dim);
    f.monodromy_attested = lit.trivial_monodromy;
    int i = 0;
    for (const auto& c : lit.critical) {
      ++i;
      CriticalValue cv;
      cv.label = c.label.empty() ? "c" + std::to_string(i) : c.label;
      switch (c.kind) {
        case CriticalLit::Kind::vanishing:
          cv.data = VanishingData{mhs(c.table), static_cast<int>(c.sing_dim)};
          break;
        case CriticalLit::Kind::isolated: {
          IsolatedData d;
          for (const auto& p : c.points) d.points.push_back(mhs(p));
          cv.data = d;
          break;
        }
        case CriticalLit::Kind::stratified: {
          StratifiedData d;
          for (const auto& s : c.strata) d.strata.push_back({s.id, genus(s.open), mhs(s.milnor)});
          cv.data = d;
          break;
        }
      }
      f.critical.push_back(std::move(cv));
    }
    return f;
  }

  using Linear = std::map<std::string, Rational>;

  // Custom-ring structure constants must be linear combinations of basis names.
  Linear linear(const RExpr& e) const {
    switch (e.kind) {
      case RExpr::Kind::number: return {{"1", e.value}};
      case RExpr::Kind::name: return {{e.name, Rational(1)}};
      case RExpr::Kind::add:
      case RExpr::Kind::sub: {
        Linear a = linear(*e.a), b = linear(*e.b);
        for (auto& [k, v] : b) a[k] += e.kind == RExpr::Kind::add ? v : Rational(-v);
        return a;
      }
      case RExpr::Kind::neg: {
        Linear a = linear(*e.a);
        for (auto& [k, v] : a) v = -v;
        return a;
      }
      case RExpr::Kind::mul: {
        Linear a = linear(*e.a), b = linear(*e.b);
        auto scalar = [](const Linear& l) { return l.size() == 1 && l.count("1"); };
        if (scalar(a)) std::swap(a, b);
        if (!scalar(b)) throw ValidationError("custom ring products must be linear in the basis");
        for (auto& [k, v] : a) v *= b.at("1");
        return a;
      }
      case RExpr::Kind::pow: break;
    }
    throw ValidationError("custom ring products must be linear in the basis");
  }

  RingPtr ring(const RingExpr& e) const {
    switch (e.kind) {
      case RingExpr::Kind::point: return CohomRing::point();
      case RingExpr::Kind::proj: return CohomRing::proj_space(static_cast<int>(e.n));
      case RingExpr::Kind::product: {
        std::vector<RingPtr> factors;
        for (const auto& f : e.factors) factors.push_back(ring(*f));
        return CohomRing::product(std::move(factors));
      }
      case RingExpr::Kind::proj_bundle: {
        RingPtr base = ring(*e.factors.front());
        return CohomRing::proj_bundle(base, static_cast<int>(e.bundle.rank), chern_classes(e.bundle, base));
      }
      case RingExpr::Kind::custom: {
        CustomRingSpec spec;
        for (const auto& [name, degree] : e.custom.basis) spec.basis.push_back({name, static_cast<int>(degree)});
        for (const auto& [a, b, rhs, loc] : e.custom.products) {
          NamedCombination comb;
          for (const auto& [k, v] : linear(*rhs)) {
            if (v != 0) comb.emplace_back(k, v);
          }
          spec.products.emplace_back(a, b, comb);
        }
        spec.top = e.custom.top;
        return CohomRing::custom(spec);
      }
      case RingExpr::Kind::ref: return lookup<RingPtr>(e.name);
    }
    throw std::logic_error("unhandled ring expression");
  }

  CohomClass element(const RExpr& e, const RingPtr& r) const {
    switch (e.kind) {
      case RExpr::Kind::number: return r->one() * e.value;
      case RExpr::Kind::name: {
        const auto& gens = r->generator_names();
        if (std::find(gens.begin(), gens.end(), e.name) != gens.end()) return r->generator(e.name);
        if (auto it = env_.find(e.name); it != env_.end()) {
          if (const auto* c = std::get_if<CohomClass>(&it->second)) {
            if (!same_ring(c->ring(), r)) throw ValidationError("class '" + e.name + "' lives on a different ring");
            return *c;
          }
        }
        std::string known;
        for (const auto& g : gens) known += (known.empty() ? "" : ", ") + g;
        throw ValidationError("'" + e.name + "' is not a generator of this ring (generators: " +
                              (known.empty() ? "none" : known) + ")");
      }
      case RExpr::Kind::add: return element(*e.a, r) + element(*e.b, r);
      case RExpr::Kind::sub: return element(*e.a, r) - element(*e.b, r);
      case RExpr::Kind::mul: return element(*e.a, r) * element(*e.b, r);
      case RExpr::Kind::neg: return -element(*e.a, r);
      case RExpr::Kind::pow: return element(*e.a, r).pow(static_cast<unsigned>(e.exponent));
    }
    throw std::logic_error("unhandled ring element");
  }

  std::vector<CohomClass> chern_classes(const ChernList& list, const RingPtr& r) const {
    long top = 0;
    for (const auto& [i, c] : list.classes) top = std::max(top, i);
    std::vector<CohomClass> chern(static_cast<std::size_t>(top), CohomClass(r));
    for (const auto& [i, c] : list.classes) chern[static_cast<std::size_t>(i - 1)] = element(*c, r);
    return chern;
  }

  BundleData bundle(const BExpr& e, const RingPtr& r) const {
    switch (e.kind) {
      case BExpr::Kind::o: return line_bundle_o(r, e.degrees);
      case BExpr::Kind::trivial: return BundleData::trivial(r, static_cast<int>(e.rank));
      case BExpr::Kind::tangent: return tangent_bundle(r);
      case BExpr::Kind::cotangent: return dual(tangent_bundle(r));
      case BExpr::Kind::line: return BundleData::line(element(*e.c1, r));
      case BExpr::Kind::explicit_chern:
        return BundleData::make(r, static_cast<int>(e.chern.rank), chern_classes(e.chern, r));
      case BExpr::Kind::dual: return dual(bundle(*e.a, r));
      case BExpr::Kind::sum: return whitney_sum(bundle(*e.a, r), bundle(*e.b, r));
      case BExpr::Kind::ref: {
        const auto& b = lookup<BundleData>(e.name);
        if (!same_ring(b.ring(), r)) throw ValidationError("bundle '" + e.name + "' lives on a different ring");
        return b;
      }
    }
    throw std::logic_error("unhandled bundle expression");
  }

  HodgeBundleCollection collection(const HodgeCollLit& lit) const {
    HodgeBundleCollection h;
    h.ring = ring(*lit.ring);
    h.indexing = lit.by_filtration ? HodgeIndexing::by_filtration : HodgeIndexing::by_type;
    for (const auto& [p, q, b, loc] : lit.entries) h.entries.emplace(std::pair{p, q}, bundle(*b, h.ring));
    h.validate();
    return h;
  }

  const HodgeBundleCollection& collection_on(const std::string& name, const RingPtr& r) const {
    const auto& h = lookup<HodgeBundleCollection>(name);
    if (!same_ring(h.ring, r)) throw ValidationError("collection '" + name + "' lives on a different ring");
    return h;
  }

  // ----- queries -------------------------------------------------------------------

  Result query(const Query& q) {
    return std::visit([&](const auto& body) { return run_body(body); }, q.body);
  }

  Result specialize(Result r, const std::optional<GenusSpecialization>& at) const {
    if (!at || !r.genus) return r;
    Integer v = specialize_genus(*r.genus, *at);
    Result out;
    out.text = v.get_str();
    out.value = {{"value", v.get_str()}};
    out.genus = GenusPolynomial(v);
    return out;
  }

  Result run_body(const GenusQuery& g) {
    switch (g.mode) {
      case GenusQuery::Mode::chi_y_c: return specialize(genus_result(chi_y_c(variety(*g.variety))), g.at);
      case GenusQuery::Mode::chi_y:
        if (g.mhs) return specialize(genus_result(chi_y_of_complex(mhs(*g.mhs))), g.at);
        return specialize(genus_result(chi_y(variety(*g.variety))), g.at);
      case GenusQuery::Mode::weight:
        return genus_result(specialize_e(variety(*g.variety).e_polynomial(), ESpecialization::weight), "t");
      case GenusQuery::Mode::euler: {
        auto e = specialize_e(variety(*g.variety).e_polynomial(), ESpecialization::euler);
        Result r = genus_result(e);
        r.value = {{"value", e.coefficient(0).get_str()}};
        return r;
      }
      case GenusQuery::Mode::dual:
        return specialize(genus_result(poincare_dual(genus(*g.source), static_cast<int>(g.n))), g.at);
      case GenusQuery::Mode::poly: return specialize(genus_result(genus(*g.source)), g.at);
    }
    throw std::logic_error("unhandled genus query");
  }

  Result run_body(const EpolyQuery& q) {
    EPolynomial e = q.mhs ? e_polynomial_of_complex(mhs(*q.mhs)) : variety(*q.variety).e_polynomial();
    Result r;
    r.text = e.to_string();
    r.value = {{"epoly", epoly_to_json(e)}};
    if (!q.mhs) r.value["normal_form"] = variety(*q.variety).to_string();
    return r;
  }

  static Result pair_result(const GenusPolynomial& lhs, const GenusPolynomial& rhs, const char* lname,
                            const char* rname) {
    Result r;
    bool eq = lhs == rhs;
    r.text = std::string(lname) + " = " + lhs.to_string() + "\n" + rname + " = " + rhs.to_string() + "\n" +
             (eq ? "equal" : "not equal");
    r.value = {{"lhs", genus_to_json(lhs)}, {"rhs", genus_to_json(rhs)}, {"equal", eq}};
    r.truth = eq;
    return r;
  }

  Result run_body(const CheckQuery& c) {
    if (c.mode == CheckQuery::Mode::product) {
      auto p = product_genus_check(variety(*c.base), variety(*c.fiber));
      return pair_result(p.lhs, p.rhs, "chi_y_c(B x F)", "chi_y_c(B) chi_y_c(F)");
    }
    auto p = multiplicativity_check(genus(*c.total), genus(*c.gbase), genus(*c.gfiber));
    return pair_result(p.lhs, p.rhs, "total", "base * fiber");
  }

  Result run_body(const StratQuery& s) {
    if (s.mode == StratQuery::Mode::stalk) return genus_result(stalk_sum_chi(lookup<StalkSumDescriptor>(s.name)));
    const auto& d = lookup<StratifiedMapDescriptor>(s.name);
    json hats = json::object();
    std::string hat_text;
    for (const auto& rec : d.strata()) {
      const auto& h = d.hat_genus(rec.id);
      hats[rec.id] = genus_to_json(h);
      hat_text += "hat(" + rec.id + ") = " + h.to_string() + "\n";
    }
    if (s.mode == StratQuery::Mode::hat) {
      Result r;
      r.text = hat_text;
      r.value = {{"hat_genera", hats}};
      return r;
    }
    EvalOptions opts{opts_.assume_trivial_monodromy};
    GenusPolynomial total = s.mode == StratQuery::Mode::chi_c ? total_space_chi_c(d, opts) : total_space_chi(d, opts);
    Result r = genus_result(total);
    r.value["hat_genera"] = hats;
    return r;
  }

  Result run_body(const RhQuery& q) {
    const auto& f = lookup<CurveFibration>(q.name);
    if (q.epoly) rh_total_e_polynomial(f);
    auto res = rh_total_chi_c(f, opts_.assume_trivial_monodromy);
    Result r = genus_result(res.total);
    r.text += "\nproduct term = " + res.product_term.to_string();
    json corr = json::array();
    for (std::size_t i = 0; i < res.corrections.size(); ++i) {
      r.text += "\ncorrection " + f.critical[i].label + " = " + res.corrections[i].to_string();
      corr.push_back({{"label", f.critical[i].label}, {"genus", genus_to_json(res.corrections[i])}});
    }
    r.value["product_term"] = genus_to_json(res.product_term);
    r.value["corrections"] = corr;
    return r;
  }

  Result run_body(const SupportQuery& s) {
    auto rep = validate_vanishing_support(mhs(s.table), static_cast<int>(s.n), static_cast<int>(s.s));
    Result r;
    r.truth = rep.ok;
    r.must_hold = true;
    r.text = rep.ok ? "support ok" : rep.message;
    r.value = {{"ok", rep.ok}, {"offending_degrees", rep.offending_degrees}, {"message", rep.message}};
    return r;
  }

  static Result class_result(const ClassPolynomial& c) {
    Result r;
    r.text = to_string(c);
    r.value = {{"class", class_json(c)}};
    return r;
  }

  static Result class_result(const CohomClass& c) {
    Result r;
    r.text = to_string(c);
    r.value = {{"class", class_json(c)}};
    return r;
  }

  Result run_body(const CharQuery& c) {
    using M = CharQuery::Mode;
    if (c.mode == M::class_value) return class_result(lookup<CohomClass>(*c.class_ref));
    RingPtr r = ring(*c.ring);
    auto tangent = [&] { return c.tangent ? bundle(*c.tangent, r) : tangent_bundle(r); };
    switch (c.mode) {
      case M::ghrr:
        return genus_result(ghrr(r, tangent(), c.bundle ? bundle(*c.bundle, r) : BundleData::trivial(r, 1)));
      case M::meyer: {
        const auto& h = collection_on(*c.coll, r);
        return genus_result(c.normalized ? meyer_twisted_normalized(r, tangent(), h) : meyer_twisted(r, tangent(), h));
      }
      case M::am: return genus_result(atiyah_meyer_chi(r, tangent(), collection_on(*c.coll, r)));
      case M::higher: return genus_result(higher_chi_y(r, tangent(), element(*c.element, r)));
      case M::log: {
        LogForms forms;
        if (c.bundle) {
          forms.omega1 = bundle(*c.bundle, r);
        } else {
          for (const auto& b : c.forms) forms.per_degree.push_back(bundle(*b, r));
        }
        std::optional<HodgeBundleCollection> ext;
        if (c.ext) ext = collection_on(*c.ext, r);
        return genus_result(log_chi_y(r, tangent(), forms, ext));
      }
      case M::class_hirzebruch: return class_result(hirzebruch_class(tangent(), c.normalized));
      case M::class_todd: return class_result(todd_class(bundle(*c.bundle, r)));
      case M::class_lambda: return class_result(lambda_y_class(bundle(*c.bundle, r)));
      case M::class_ch: return class_result(chern_character(bundle(*c.bundle, r)));
      case M::class_meyer: return class_result(class_level_meyer(r, tangent(), collection_on(*c.coll, r)));
      case M::class_atiyah: {
        std::optional<HodgeBundleCollection> fiber;
        if (c.coll) fiber = lookup<HodgeBundleCollection>(*c.coll);
        auto pair = class_level_atiyah_check(r, fiber);
        Result out;
        out.truth = pair.equal();
        out.must_hold = true;
        out.text = "lhs = " + to_string(pair.lhs) + "\nrhs = " + to_string(pair.rhs) + "\n" +
                   (pair.equal() ? "equal" : "not equal");
        out.value = {{"lhs", class_json(pair.lhs)}, {"rhs", class_json(pair.rhs)}, {"equal", pair.equal()}};
        return out;
      }
      case M::class_push: {
        RingPtr dst = ring(*c.target);
        PushforwardKind kind;
        if (r->kind() == CohomRing::Kind::product) {
          kind = PushforwardKind::product_projection;
        } else if (r->kind() == CohomRing::Kind::proj_bundle) {
          kind = PushforwardKind::projective_bundle;
        } else {
          throw ValidationError("pushforward needs a product or projective-bundle source ring");
        }
        if (c.element) return class_result(pushforward(r, dst, kind, element(*c.element, r)));
        return class_result(pushforward(r, dst, kind, hirzebruch_class(tangent())));
      }
      case M::class_value: break;
    }
    throw std::logic_error("unhandled class query");
  }

  Result run_body(const VerifyQuery& v) {
    auto report = verify::run_suite(v.suite, opts_.seed);
    Result r;
    json checks = json::array();
    std::size_t passed = 0;
    for (const auto& c : report) {
      passed += c.passed ? 1 : 0;
      r.text += std::string(c.passed ? "PASS " : "FAIL ") + c.suite + ": " + c.name +
                (c.passed ? "" : " (" + c.detail + ")") + "\n";
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    r.text += std::to_string(passed) + "/" + std::to_string(report.size()) + " checks passed";
    r.value = {{"checks", checks}, {"passed", passed}, {"total", report.size()}};
    r.truth = passed == report.size();
    r.must_hold = true;
    return r;
  }

  Result run_body(const AssertQuery& a) {
    Result inner = query(*a.inner);
    bool holds;
    std::string got, want;
    if (a.truth) {
      if (!inner.truth) throw ValidationError("this query has no true/false value to assert on");
      holds = (*inner.truth == *a.truth) == a.equal;
      got = *inner.truth ? "true" : "false";
      want = *a.truth ? "true" : "false";
    } else {
      if (!inner.genus) throw ValidationError("this query has no polynomial value to assert on");
      holds = (*inner.genus == *a.genus) == a.equal;
      got = inner.genus->to_string();
      want = a.genus->to_string();
    }
    if (!holds) {
      throw AssertFailure{"assertion failed: got " + got + (a.equal ? ", expected " : ", expected anything but ") + want};
    }
    Result r;
    r.text = "ok (" + got + ")";
    r.value = {{"ok", true}, {"inner", inner.value}};
    return r;
  }

  const RunOptions& opts_;
  std::unordered_map<std::string, Value> env_;
  std::string text_;
  json results_ = json::array();
};

}  // namespace

RunOutput run(const Script& script, const RunOptions& options) { return Runner(options).execute(script); }

RunOutput run_source(std::string_view source, const RunOptions& options) {
  ParseResult parsed = parse(source);
  if (parsed.ok()) return run(parsed.script, options);
  RunOutput out;
  out.exit_code = kExitParse;
  if (options.format == OutputFormat::text) {
    for (const auto& d : parsed.diagnostics) out.output += to_string(d) + "\n";
  } else {
    json diags = json::array();
    for (const auto& d : parsed.diagnostics) diags.push_back(diagnostic_json(d));
    out.output = json{{"results", json::array()}, {"diagnostics", diags}, {"exit_code", kExitParse}}.dump(2) + "\n";
  }
  return out;
}

}  // namespace hodge::dsl
