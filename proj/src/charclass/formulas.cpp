#include "hodge/charclass/formulas.hpp"

#include "hodge/error.hpp"

namespace hodge {

namespace {

YRational y_power(int p) {
  YRational r(1);
  const YRational y = YRational::y();
  for (int i = 0; i < p; ++i) r *= y;
  return r;
}

// (-y)^p as a coefficient; p may be negative only in malformed input.
YRational neg_y_power(int p) {
  if (p < 0) throw ValidationError("Hodge index must be >= 0, got " + std::to_string(p));
  YRational r = y_power(p);
  return p % 2 ? -r : r;
}

void require_ring(const RingPtr& ring, const BundleData& b, const char* what) {
  if (!same_ring(ring, b.ring())) {
    throw ValidationError(std::string(what) + " lives on " + b.ring()->signature() + ", not on " + ring->signature());
  }
}

}  // namespace

void HodgeBundleCollection::validate() const {
  if (!ring) throw ValidationError("Hodge bundle collection without a ring");
  for (const auto& [key, b] : entries) {
    require_ring(ring, b, "Hodge bundle");
    if (key.first < 0) throw ValidationError("Hodge index p must be >= 0");
  }
}

ClassPolynomial HodgeBundleCollection::ch_chi_y() const {
  validate();
  ClassPolynomial out(ring);
  for (const auto& [key, b] : entries) {
    const auto [p, second] = key;
    YRational coef = indexing == HodgeIndexing::by_type ? y_power(p) : neg_y_power(p);
    if (second % 2) coef = -coef;
    ClassPolynomial t = lift(chern_character(b));
    t *= coef;
    out += t;
  }
  return out;
}

GenusPolynomial HodgeBundleCollection::rank_genus() const {
  GenusPolynomial g;
  for (const auto& [key, b] : entries) {
    const auto [p, second] = key;
    GenusPolynomial term = indexing == HodgeIndexing::by_type ? GenusPolynomial::monomial(b.rank(), p)
                                                              : GenusPolynomial::neg_y_power(p) * Integer(b.rank());
    g += second % 2 ? -term : term;
  }
  return g;
}

ClassPolynomial HodgeBundleCollection::ch_hodge_polynomial() const {
  validate();
  ClassPolynomial out(ring);
  for (const auto& [key, b] : entries) {
    ClassPolynomial t = lift(chern_character(b));
    t *= neg_y_power(key.first);
    out += t;
  }
  return out;
}

ClassPolynomial HodgeBundleCollection::ch_hodge_polynomial_scaled() const {
  validate();
  ClassPolynomial out(ring);
  for (const auto& [key, b] : entries) {
    ClassPolynomial t = chern_character_scaled(b);
    t *= neg_y_power(key.first);
    out += t;
  }
  return out;
}

GenusPolynomial integrate_to_genus(const ClassPolynomial& c, const char* what) {
  if (!c.ring()) return GenusPolynomial();
  const YRational v = c.integrate();
  if (!v.is_polynomial()) {
    throw InconsistencyError(std::string(what) + ": residual (1+y) denominator in " + v.to_string());
  }
  auto g = v.to_integer_polynomial();
  if (!g) throw InconsistencyError(std::string(what) + ": non-integral genus " + v.to_string());
  return *g;
}

GenusPolynomial ghrr(const RingPtr& ring, const BundleData& tangent, const BundleData& e) {
  require_ring(ring, tangent, "tangent bundle");
  require_ring(ring, e, "bundle");
  return integrate_to_genus(lift(chern_character(e)) * hirzebruch_class(tangent), "gHRR");
}

GenusPolynomial meyer_twisted(const RingPtr& ring, const BundleData& tangent, const HodgeBundleCollection& v) {
  return integrate_to_genus(class_level_meyer(ring, tangent, v), "Meyer formula");
}

GenusPolynomial meyer_twisted_normalized(const RingPtr& ring, const BundleData& tangent,
                                         const HodgeBundleCollection& v) {
  require_ring(ring, tangent, "tangent bundle");
  require_ring(v.ring, tangent, "tangent bundle");
  if (v.entries.empty()) return GenusPolynomial();
  return integrate_to_genus(v.ch_hodge_polynomial_scaled() * hirzebruch_class(tangent, true),
                            "normalized Meyer formula");
}

GenusPolynomial atiyah_meyer_chi(const RingPtr& ring, const BundleData& tangent_b, const HodgeBundleCollection& h) {
  require_ring(ring, tangent_b, "tangent bundle");
  require_ring(h.ring, tangent_b, "tangent bundle");
  return integrate_to_genus(h.ch_chi_y() * hirzebruch_class(tangent_b), "Atiyah-Meyer formula");
}

GenusPolynomial higher_chi_y(const RingPtr& ring, const BundleData& tangent, const CohomClass& alpha) {
  require_ring(ring, tangent, "tangent bundle");
  if (!alpha.is_zero() && !same_ring(ring, alpha.ring())) throw ValidationError("class does not live on the ring");
  if (alpha.is_zero()) return GenusPolynomial();
  return integrate_to_genus(lift(alpha) * hirzebruch_class(tangent), "higher genus");
}

GenusPolynomial log_chi_y(const RingPtr& ring, const BundleData& tangent, const LogForms& forms,
                          const std::optional<HodgeBundleCollection>& extension) {
  require_ring(ring, tangent, "tangent bundle");
  ClassPolynomial omega(ring);
  if (forms.omega1) {
    if (!forms.per_degree.empty()) throw ValidationError("give either Omega^1(log D) or the per-degree forms, not both");
    require_ring(ring, *forms.omega1, "log cotangent bundle");
    omega = lambda_y_class(*forms.omega1);
  } else {
    for (std::size_t i = 0; i < forms.per_degree.size(); ++i) {
      require_ring(ring, forms.per_degree[i], "log form bundle");
      ClassPolynomial t = lift(chern_character(forms.per_degree[i]));
      t *= y_power(static_cast<int>(i));
      omega += t;
    }
  }
  ClassPolynomial ext = ClassPolynomial::scalar(ring, YRational(1));
  if (extension) {
    if (!same_ring(ring, extension->ring)) throw ValidationError("Deligne extension lives on a different ring");
    ext = extension->ch_hodge_polynomial();
  }
  return integrate_to_genus(ext * omega * todd_class(tangent), "logarithmic formula");
}

ClassPolynomial hirzebruch_class_smooth(const RingPtr& ring, const BundleData& tangent) {
  require_ring(ring, tangent, "tangent bundle");
  return hirzebruch_class(tangent);
}

ClassPolynomial class_level_meyer(const RingPtr& ring, const BundleData& tangent, const HodgeBundleCollection& v) {
  require_ring(ring, tangent, "tangent bundle");
  require_ring(v.ring, tangent, "tangent bundle");
  return v.ch_hodge_polynomial() * hirzebruch_class(tangent);
}

namespace {

template <class Coef>
Element<Coef> push(const RingPtr& src, const RingPtr& dst, PushforwardKind kind, const Element<Coef>& cls) {
  if (!cls.is_zero() && !same_ring(cls.ring(), src)) throw ValidationError("class does not live on the source ring");
  Element<Coef> out(dst);
  if (kind == PushforwardKind::product_projection) {
    if (src->kind() != CohomRing::Kind::product || src->factors().size() < 2) {
      throw ValidationError("product pushforward needs a product ring, got " + src->signature());
    }
    if (!same_ring(src->factors()[0], dst)) {
      throw ValidationError("target " + dst->signature() + " is not the first factor of " + src->signature());
    }
    const auto& f = src->factors();
    for (const auto& [idx, c] : cls.terms()) {
      const auto& coords = src->coordinates(idx);
      bool fiber_top = true;
      for (std::size_t k = 1; k < f.size(); ++k) fiber_top = fiber_top && coords[k] == f[k]->top_index();
      if (fiber_top) out += Element<Coef>::basis(dst, coords[0], c);
    }
    return out;
  }
  if (src->kind() != CohomRing::Kind::proj_bundle) {
    throw ValidationError("projective-bundle pushforward needs a projective bundle, got " + src->signature());
  }
  if (!same_ring(src->base(), dst)) {
    throw ValidationError("target " + dst->signature() + " is not the base of " + src->signature());
  }
  const int r = src->bundle_rank();
  const auto s = segre_classes(BundleData::make(dst, r, src->bundle_chern()));
  for (const auto& [idx, c] : cls.terms()) {
    const auto& coords = src->coordinates(idx);
    const int i = static_cast<int>(coords[1]) - r + 1;
    if (i < 0 || i >= static_cast<int>(s.size())) continue;
    Element<Coef> b = Element<Coef>::basis(dst, coords[0], c);
    Element<Coef> si(dst);
    for (const auto& [t, q] : s[static_cast<std::size_t>(i)].terms()) si += Element<Coef>::basis(dst, t, Coef(q));
    out += b * si;
  }
  return out;
}

}  // namespace

ClassPolynomial pushforward(const RingPtr& src, const RingPtr& dst, PushforwardKind kind, const ClassPolynomial& cls) {
  return push(src, dst, kind, cls);
}

CohomClass pushforward(const RingPtr& src, const RingPtr& dst, PushforwardKind kind, const CohomClass& cls) {
  return push(src, dst, kind, cls);
}

RingPtr model_base(const RingPtr& total) {
  if (total->kind() == CohomRing::Kind::product && total->factors().size() >= 2) return total->factors()[0];
  if (total->kind() == CohomRing::Kind::proj_bundle) return total->base();
  throw ValidationError(total->signature() + " is neither a product nor a projective bundle");
}

PushforwardKind model_kind(const RingPtr& total) {
  model_base(total);
  return total->kind() == CohomRing::Kind::product ? PushforwardKind::product_projection
                                                   : PushforwardKind::projective_bundle;
}

HodgeBundleCollection cellular_fiber_collection(const RingPtr& total) {
  const RingPtr base = model_base(total);
  RingPtr fiber;
  if (total->kind() == CohomRing::Kind::product) {
    std::vector<RingPtr> rest(total->factors().begin() + 1, total->factors().end());
    fiber = rest.size() == 1 ? rest[0] : CohomRing::product(rest);
  } else {
    fiber = CohomRing::proj_space(total->bundle_rank() - 1);
  }
  HodgeBundleCollection h{base, HodgeIndexing::by_type, {}};
  const auto b = fiber->betti();
  for (std::size_t p = 0; p < b.size(); ++p) {
    if (b[p] == 0) continue;
    h.entries.emplace(std::pair{static_cast<int>(p), static_cast<int>(p)},
                      BundleData::trivial(base, static_cast<int>(b[p])));
  }
  return h;
}

ClassPair class_level_atiyah_check(const RingPtr& total, const std::optional<HodgeBundleCollection>& fiber_hodge) {
  const RingPtr base = model_base(total);
  const PushforwardKind kind = model_kind(total);
  const HodgeBundleCollection h = fiber_hodge ? *fiber_hodge : cellular_fiber_collection(total);
  if (!same_ring(h.ring, base)) throw ValidationError("fiber Hodge bundles must live on the base " + base->signature());
  ClassPair out;
  out.lhs = pushforward(total, base, kind, hirzebruch_class(tangent_bundle(total)));
  out.rhs = h.ch_chi_y() * hirzebruch_class(tangent_bundle(base));
  return out;
}

}  // namespace hodge
