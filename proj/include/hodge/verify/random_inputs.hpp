#pragma once

// Seeded generators for the property batteries. Values are drawn from
// std::mt19937_64 through a fixed mapping (no std distributions), so a seed
// yields the same inputs on every platform.

#include "hodge/charclass/bundle.hpp"
#include "hodge/charclass/formulas.hpp"
#include "hodge/hodgestruct/mixed_hodge.hpp"
#include "hodge/polycore/e_polynomial.hpp"
#include "hodge/polycore/genus_polynomial.hpp"
#include "hodge/stratmaps/stratified_map.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hodge::random {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi].
long uniform(Rng& rng, long lo, long hi);
bool coin(Rng& rng);

GenusPolynomial genus_polynomial(Rng& rng, int max_terms = 5, int lo_exp = -2, int hi_exp = 6, long coef = 20);
EPolynomial e_polynomial(Rng& rng, int max_terms = 5, int max_exp = 4, long coef = 10);
MixedHodgeComplex mixed_hodge(Rng& rng, int max_entries = 5);

struct RandomStrata {
  std::vector<StratumRecord> records;  // closure genera (occasionally open genera)
  std::vector<GenusPolynomial> open_genera;
  std::vector<GenusPolynomial> fiber_genera;
  std::string generic_id;
};

/// A random poset of 1..max_strata strata with consistent closure data.
RandomStrata strata(Rng& rng, int max_strata = 8);

/// Sum of `rank` line bundles with random integral first Chern classes, so
/// that every multiplicative class has integral meaning. Also returns the
/// roots.
struct SplitBundle {
  BundleData bundle;
  std::vector<CohomClass> roots;
};
SplitBundle split_bundle(Rng& rng, const RingPtr& ring, int rank, long max_coef = 3);

/// Collection of 1..max_entries split Hodge bundles.
HodgeBundleCollection hodge_collection(Rng& rng, const RingPtr& ring, HodgeIndexing indexing, int max_entries = 3,
                                       int max_rank = 2);

/// Collection of trivial bundles with random ranks.
HodgeBundleCollection flat_collection(Rng& rng, const RingPtr& ring, int max_entries = 4);

/// One of P^1..P^3, P^1 x P^1, P^1 x P^2, or a Hirzebruch surface.
RingPtr small_ring(Rng& rng);

}  // namespace hodge::random
