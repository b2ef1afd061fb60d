#include "hodge/charclass/bundle.hpp"

#include "hodge/error.hpp"

namespace hodge {

BundleData BundleData::make(RingPtr ring, int rank, std::vector<CohomClass> chern) {
  if (rank < 0) throw ValidationError("bundle rank must be >= 0");
  BundleData b;
  const int top = ring->top_degree();
  b.chern_.assign(static_cast<std::size_t>(top), CohomClass(ring));
  for (std::size_t i = 0; i < chern.size(); ++i) {
    const int degree = static_cast<int>(i) + 1;
    const auto& ci = chern[i];
    if (ci.is_zero()) continue;
    if (!same_ring(ci.ring(), ring)) {
      throw ValidationError("Chern class c" + std::to_string(degree) + " lives on " + ci.ring()->signature() +
                            ", not on " + ring->signature());
    }
    if (!ci.is_homogeneous(degree)) {
      throw ValidationError("Chern class c" + std::to_string(degree) + " = " + to_string(ci) +
                            " is not homogeneous of degree " + std::to_string(degree));
    }
    if (degree > rank) {
      throw ValidationError("Chern class c" + std::to_string(degree) + " must vanish for a bundle of rank " +
                            std::to_string(rank));
    }
    if (degree <= top) b.chern_[i] = CohomClass(ring, ci.terms());
  }
  b.ring_ = std::move(ring);
  b.rank_ = rank;
  return b;
}

BundleData BundleData::trivial(RingPtr ring, int rank) { return make(std::move(ring), rank, {}); }

BundleData BundleData::line(const CohomClass& c1) { return make(c1.ring(), 1, {c1}); }

CohomClass BundleData::c(int i) const {
  if (i == 0) return ring_->one();
  if (i < 0 || i > static_cast<int>(chern_.size())) return CohomClass(ring_);
  return chern_[static_cast<std::size_t>(i) - 1];
}

CohomClass BundleData::total_chern() const {
  CohomClass t = ring_->one();
  for (const auto& ci : chern_) t += ci;
  return t;
}

bool BundleData::is_flat() const {
  for (const auto& ci : chern_) {
    if (!ci.is_zero()) return false;
  }
  return true;
}

bool operator==(const BundleData& a, const BundleData& b) {
  return same_ring(a.ring_, b.ring_) && a.rank_ == b.rank_ && a.chern_ == b.chern_;
}

namespace {

std::vector<CohomClass> graded_parts(const CohomClass& total, int top) {
  std::vector<CohomClass> out;
  for (int i = 1; i <= top; ++i) out.push_back(total.degree_part(i));
  return out;
}

void require_same_ring(const BundleData& a, const BundleData& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw ValidationError("bundles over different rings: " + a.ring()->signature() + " and " +
                          b.ring()->signature());
  }
}

}  // namespace

BundleData whitney_sum(const BundleData& a, const BundleData& b) {
  require_same_ring(a, b);
  return BundleData::make(a.ring(), a.rank() + b.rank(),
                          graded_parts(a.total_chern() * b.total_chern(), a.ring()->top_degree()));
}

BundleData dual(const BundleData& e) {
  std::vector<CohomClass> c;
  for (int i = 1; i <= e.ring()->top_degree(); ++i) c.push_back(i % 2 ? -e.c(i) : e.c(i));
  return BundleData::make(e.ring(), e.rank(), std::move(c));
}

BundleData tensor_line(const BundleData& e, const CohomClass& l) {
  if (!l.is_homogeneous(1)) throw ValidationError("first Chern class of a line bundle must have degree 1");
  const int r = e.rank();
  std::vector<CohomClass> c;
  for (int k = 1; k <= e.ring()->top_degree(); ++k) {
    CohomClass ck(e.ring());
    for (int i = 0; i <= std::min(k, r); ++i) {
      Integer b = binomial(r - i, k - i);
      if (b == 0) continue;
      ck += e.c(i) * l.pow(static_cast<unsigned>(k - i)) * Rational(b);
    }
    c.push_back(std::move(ck));
  }
  return BundleData::make(e.ring(), r, std::move(c));
}

BundleData line_bundle_o(const RingPtr& ring, const std::vector<long>& degrees) {
  auto require_count = [&](std::size_t lo, std::size_t hi) {
    if (degrees.size() < lo || degrees.size() > hi) {
      throw ValidationError("O(...) on " + ring->signature() + " takes between " + std::to_string(lo) + " and " +
                            std::to_string(hi) + " degrees");
    }
  };
  CohomClass c1(ring);
  switch (ring->kind()) {
    case CohomRing::Kind::point:
      require_count(0, 1);
      break;
    case CohomRing::Kind::proj_space:
      require_count(1, 1);
      if (ring->top_degree() > 0) c1 = ring->generator("h") * Rational(degrees[0]);
      break;
    case CohomRing::Kind::product: {
      const auto& f = ring->factors();
      require_count(f.size(), f.size());
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (degrees[k] == 0) continue;
        c1 += pullback_from_factor(ring, k, line_bundle_o(f[k], {degrees[k]})).c(1);
      }
      break;
    }
    case CohomRing::Kind::proj_bundle: {
      require_count(1, 1 + ring->base()->generator_names().size());
      c1 = ring->xi() * Rational(degrees[0]);
      const auto& gens = ring->base()->generator_names();
      for (std::size_t k = 1; k < degrees.size(); ++k) {
        c1 += ring->pullback_from_base(ring->base()->generator(gens[k - 1])) * Rational(degrees[k]);
      }
      break;
    }
    case CohomRing::Kind::custom:
      throw ValidationError("O(d) is not defined on a custom ring; give the bundle by its Chern classes");
  }
  return BundleData::make(ring, 1, {c1});
}

BundleData pullback_from_factor(const RingPtr& product, std::size_t factor, const BundleData& e) {
  std::vector<CohomClass> c;
  for (int i = 1; i <= e.ring()->top_degree(); ++i) c.push_back(product->pullback_from_factor(factor, e.c(i)));
  return BundleData::make(product, e.rank(), std::move(c));
}

BundleData pullback_from_base(const RingPtr& proj_bundle, const BundleData& e) {
  std::vector<CohomClass> c;
  for (int i = 1; i <= e.ring()->top_degree(); ++i) c.push_back(proj_bundle->pullback_from_base(e.c(i)));
  return BundleData::make(proj_bundle, e.rank(), std::move(c));
}

BundleData relative_tangent(const RingPtr& pb) {
  if (pb->kind() != CohomRing::Kind::proj_bundle) throw ValidationError(pb->signature() + " is not a projective bundle");
  const int r = pb->bundle_rank();
  const CohomClass xi = pb->xi();
  // c(p*V (x) O(1)) = sum_i c_i(V) (1 + xi)^{r - i}; its rank-r part is the
  // defining relation and vanishes in the ring.
  std::vector<CohomClass> v;
  for (int i = 1; i <= r; ++i) v.push_back(pb->pullback_from_base(pb->bundle_chern()[static_cast<std::size_t>(i) - 1]));
  auto cv = [&](int i) { return i == 0 ? pb->one() : v[static_cast<std::size_t>(i) - 1]; };
  std::vector<CohomClass> c;
  for (int k = 1; k <= pb->top_degree(); ++k) {
    CohomClass ck(pb);
    for (int i = 0; i <= std::min(k, r); ++i) {
      Integer b = binomial(r - i, k - i);
      if (b == 0) continue;
      ck += cv(i) * xi.pow(static_cast<unsigned>(k - i)) * Rational(b);
    }
    c.push_back(std::move(ck));
  }
  if (r >= 1 && r <= pb->top_degree() && !c[static_cast<std::size_t>(r) - 1].is_zero()) {
    throw InconsistencyError("Euler sequence: c_r(p*V (x) O(1)) does not vanish in " + pb->signature());
  }
  if (r <= pb->top_degree() && r >= 1) c[static_cast<std::size_t>(r) - 1] = CohomClass(pb);
  return BundleData::make(pb, r - 1, std::move(c));
}

BundleData tangent_bundle(const RingPtr& ring) {
  switch (ring->kind()) {
    case CohomRing::Kind::point:
      return BundleData::trivial(ring, 0);
    case CohomRing::Kind::proj_space: {
      const int n = ring->top_degree();
      std::vector<CohomClass> c;
      for (int k = 1; k <= n; ++k) c.push_back(ring->generator("h").pow(static_cast<unsigned>(k)) * Rational(binomial(n + 1, k)));
      return BundleData::make(ring, n, std::move(c));
    }
    case CohomRing::Kind::product: {
      BundleData t = BundleData::trivial(ring, 0);
      for (std::size_t k = 0; k < ring->factors().size(); ++k) {
        t = whitney_sum(t, pullback_from_factor(ring, k, tangent_bundle(ring->factors()[k])));
      }
      return t;
    }
    case CohomRing::Kind::proj_bundle:
      return whitney_sum(pullback_from_base(ring, tangent_bundle(ring->base())), relative_tangent(ring));
    case CohomRing::Kind::custom:
      break;
  }
  throw ValidationError("a custom ring has no built-in tangent bundle; pass one explicitly");
}

std::vector<CohomClass> segre_classes(const BundleData& e) {
  const int top = e.ring()->top_degree();
  std::vector<CohomClass> s{e.ring()->one()};
  for (int k = 1; k <= top; ++k) {
    CohomClass sk(e.ring());
    for (int i = 1; i <= k; ++i) sk -= e.c(i) * s[static_cast<std::size_t>(k - i)];
    s.push_back(std::move(sk));
  }
  return s;
}

}  // namespace hodge
