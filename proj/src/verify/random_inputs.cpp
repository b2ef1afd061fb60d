#include "hodge/verify/random_inputs.hpp"

#include <algorithm>

namespace hodge::random {

long uniform(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

bool coin(Rng& rng) { return (rng() >> 17) & 1U; }

GenusPolynomial genus_polynomial(Rng& rng, int max_terms, int lo_exp, int hi_exp, long coef) {
  GenusPolynomial p;
  const long n = uniform(rng, 0, max_terms);
  for (long i = 0; i < n; ++i) {
    p += GenusPolynomial::monomial(uniform(rng, -coef, coef), static_cast<int>(uniform(rng, lo_exp, hi_exp)));
  }
  return p;
}

EPolynomial e_polynomial(Rng& rng, int max_terms, int max_exp, long coef) {
  EPolynomial e;
  const long n = uniform(rng, 0, max_terms);
  for (long i = 0; i < n; ++i) {
    e += EPolynomial::monomial(uniform(rng, -coef, coef), static_cast<int>(uniform(rng, 0, max_exp)),
                               static_cast<int>(uniform(rng, 0, max_exp)));
  }
  return e;
}

MixedHodgeComplex mixed_hodge(Rng& rng, int max_entries) {
  std::map<HodgeIndex, Integer> entries;
  const long n = uniform(rng, 0, max_entries);
  for (long i = 0; i < n; ++i) {
    HodgeIndex idx{static_cast<int>(uniform(rng, 0, 4)), static_cast<int>(uniform(rng, 0, 3)),
                   static_cast<int>(uniform(rng, 0, 3))};
    entries[idx] = uniform(rng, 1, 6);
  }
  return MixedHodgeComplex::from_entries({entries.begin(), entries.end()});
}

RandomStrata strata(Rng& rng, int max_strata) {
  RandomStrata out;
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, max_strata));
  // Stratum n-1 is generic. Edges only point to lower indices, which keeps
  // the relation acyclic.
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t w = 0; w < s; ++w) below[s][w] = s + 1 == n || uniform(rng, 0, 2) == 0;
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t w = 0; w < s; ++w) {
      if (!below[s][w]) continue;
      for (std::size_t u = 0; u < w; ++u) {
        if (below[w][u]) below[s][u] = true;
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    out.open_genera.push_back(genus_polynomial(rng, 4, 0, 4, 6));
    out.fiber_genera.push_back(genus_polynomial(rng, 4, 0, 4, 6));
  }
  for (std::size_t s = 0; s < n; ++s) {
    StratumRecord r;
    r.id = "S" + std::to_string(s);
    r.fiber_genus = out.fiber_genera[s];
    r.monodromy_trivial = true;
    const bool give_open = s + 1 != n && uniform(rng, 0, 4) == 0;
    r.genus_is_closure = !give_open;
    r.genus = out.open_genera[s];
    for (std::size_t w = 0; w < s; ++w) {
      if (!below[s][w]) continue;
      if (!give_open) r.genus += out.open_genera[w];
      // List only some of the relations; the rest follow by transitivity.
      bool implied = false;
      for (std::size_t v = w + 1; v < s && !implied; ++v) implied = below[s][v] && below[v][w];
      if (!implied || coin(rng)) r.below.push_back("S" + std::to_string(w));
    }
    out.records.push_back(std::move(r));
  }
  out.generic_id = "S" + std::to_string(n - 1);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(i) - 1))]);
  std::vector<StratumRecord> shuffled;
  for (std::size_t i : perm) shuffled.push_back(out.records[i]);
  out.records = std::move(shuffled);
  return out;
}

SplitBundle split_bundle(Rng& rng, const RingPtr& ring, int rank, long max_coef) {
  std::vector<CohomClass> gens;
  for (const auto& name : ring->generator_names()) {
    CohomClass g = ring->generator(name);
    if (g.is_homogeneous(1)) gens.push_back(g);
  }
  SplitBundle out{BundleData::trivial(ring, 0), {}};
  for (int i = 0; i < rank; ++i) {
    CohomClass l(ring);
    for (const auto& g : gens) l += g * Rational(uniform(rng, -max_coef, max_coef));
    out.roots.push_back(l);
    out.bundle = whitney_sum(out.bundle, BundleData::line(l.is_zero() ? CohomClass(ring) : l));
  }
  return out;
}

HodgeBundleCollection hodge_collection(Rng& rng, const RingPtr& ring, HodgeIndexing indexing, int max_entries,
                                       int max_rank) {
  HodgeBundleCollection h{ring, indexing, {}};
  const long n = uniform(rng, 1, max_entries);
  for (long i = 0; i < n; ++i) {
    const int p = static_cast<int>(uniform(rng, 0, 3));
    const int q = static_cast<int>(uniform(rng, 0, 3));
    const int rank = static_cast<int>(uniform(rng, 1, max_rank));
    h.entries.insert_or_assign(std::pair{p, q}, split_bundle(rng, ring, rank).bundle);
  }
  return h;
}

HodgeBundleCollection flat_collection(Rng& rng, const RingPtr& ring, int max_entries) {
  HodgeBundleCollection h{ring, HodgeIndexing::by_type, {}};
  const long n = uniform(rng, 1, max_entries);
  for (long i = 0; i < n; ++i) {
    h.entries.insert_or_assign(std::pair{static_cast<int>(uniform(rng, 0, 3)), static_cast<int>(uniform(rng, 0, 3))},
                               BundleData::trivial(ring, static_cast<int>(uniform(rng, 1, 4))));
  }
  return h;
}

RingPtr small_ring(Rng& rng) {
  switch (uniform(rng, 0, 5)) {
    case 0:
      return CohomRing::proj_space(1);
    case 1:
      return CohomRing::proj_space(2);
    case 2:
      return CohomRing::proj_space(3);
    case 3:
      return CohomRing::product({CohomRing::proj_space(1), CohomRing::proj_space(1)});
    case 4:
      return CohomRing::product({CohomRing::proj_space(1), CohomRing::proj_space(2)});
    default: {
      auto b = CohomRing::proj_space(1);
      return CohomRing::proj_bundle(b, 2, {b->generator("h") * Rational(uniform(rng, 0, 4))});
    }
  }
}

}  // namespace hodge::random
