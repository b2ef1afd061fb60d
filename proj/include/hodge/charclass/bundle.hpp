#pragma once

#include "hodge/charclass/cohom_ring.hpp"

#include <vector>

namespace hodge {

/// A vector bundle seen through its rank and Chern classes.
class BundleData {
 public:
  /// chern[i] is c_{i+1}; it must be homogeneous of degree i+1 and vanish
  /// above the rank. Missing classes are zero.
  static BundleData make(RingPtr ring, int rank, std::vector<CohomClass> chern);
  static BundleData trivial(RingPtr ring, int rank);
  static BundleData line(const CohomClass& c1);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  /// c_i, with c_0 = 1 and c_i = 0 above the top degree.
  CohomClass c(int i) const;
  CohomClass total_chern() const;
  /// True when all positive-degree Chern classes vanish.
  bool is_flat() const;

  friend bool operator==(const BundleData& a, const BundleData& b);

 private:
  RingPtr ring_;
  int rank_ = 0;
  std::vector<CohomClass> chern_;  // c_1 .. c_top
};

BundleData whitney_sum(const BundleData& a, const BundleData& b);
BundleData dual(const BundleData& e);
/// E tensor L for a line bundle L with first Chern class l.
BundleData tensor_line(const BundleData& e, const CohomClass& l);

/// O(d_1, ..., d_m): on P^n one degree, on a product one per factor (the
/// line bundle c_1 = sum d_i h_i), on a projective bundle the degree of
/// O(1) followed by an optional degree per base generator.
BundleData line_bundle_o(const RingPtr& ring, const std::vector<long>& degrees);

BundleData pullback_from_factor(const RingPtr& product, std::size_t factor, const BundleData& e);
BundleData pullback_from_base(const RingPtr& proj_bundle, const BundleData& e);

/// Tangent bundle of a point, P^n, a product, or a projective bundle (as the
/// pulled-back base tangent plus the relative tangent). Custom rings carry
/// no tangent bundle.
BundleData tangent_bundle(const RingPtr& ring);
/// Relative tangent bundle of P(V) -> B from the Euler sequence
/// 0 -> O -> p*V (x) O(1) -> T_f -> 0.
BundleData relative_tangent(const RingPtr& proj_bundle);

/// Segre classes s_0 = 1, s_1, ... with s = c^{-1}, up to the top degree.
std::vector<CohomClass> segre_classes(const BundleData& e);

}  // namespace hodge
