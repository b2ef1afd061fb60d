#pragma once

#include "hodge/charclass/bundle.hpp"
#include "hodge/charclass/classes.hpp"
#include "hodge/polycore/genus_polynomial.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hodge {

/// How the keys of a HodgeBundleCollection are read.
///   by_type:       (p, q) -> H^{p,q}, K-class sum (-1)^q H^{p,q} y^p
///   by_filtration: (p, i) -> Gr^p_F H_i, K-class sum (-1)^i Gr^p H_i (-y)^p
enum class HodgeIndexing { by_type, by_filtration };

struct HodgeBundleCollection {
  RingPtr ring;
  HodgeIndexing indexing = HodgeIndexing::by_type;
  std::map<std::pair<int, int>, BundleData> entries;

  /// Checks that every bundle lives on `ring`.
  void validate() const;
  /// ch of the K-theory chi_y-genus of the family, per the indexing mode.
  ClassPolynomial ch_chi_y() const;
  /// The fiber genus read off the ranks: sum of signed ranks times y^p.
  GenusPolynomial rank_genus() const;
  /// ch(Hc_y(V)) = sum_p ch(Gr^p) (-y)^p, with the second key ignored.
  ClassPolynomial ch_hodge_polynomial() const;
  /// The same with ch replaced by ch_{(1+y)}.
  ClassPolynomial ch_hodge_polynomial_scaled() const;
};

/// Integral of a class polynomial as an integer polynomial; throws
/// InconsistencyError if a denominator or a fraction survives.
GenusPolynomial integrate_to_genus(const ClassPolynomial& c, const char* what);

/// chi_y(X, E) = int ch(E) T_y(T_X)
GenusPolynomial ghrr(const RingPtr& ring, const BundleData& tangent, const BundleData& e);
GenusPolynomial meyer_twisted(const RingPtr& ring, const BundleData& tangent, const HodgeBundleCollection& v);
/// Same value through ch_{(1+y)} and the normalized class.
GenusPolynomial meyer_twisted_normalized(const RingPtr& ring, const BundleData& tangent,
                                         const HodgeBundleCollection& v);
GenusPolynomial atiyah_meyer_chi(const RingPtr& ring, const BundleData& tangent_b, const HodgeBundleCollection& h);
GenusPolynomial higher_chi_y(const RingPtr& ring, const BundleData& tangent, const CohomClass& alpha);

/// Exterior powers of the log cotangent bundle, either one bundle per degree
/// (index i is Omega^i(log D)) or the single bundle Omega^1(log D).
struct LogForms {
  std::vector<BundleData> per_degree;
  std::optional<BundleData> omega1;
};

/// int ch(Hc_y(ext)) ch(sum_i Omega^i(log D) y^i) td(T). Without an
/// extension the trivial rank-one variation is used.
GenusPolynomial log_chi_y(const RingPtr& ring, const BundleData& tangent, const LogForms& forms,
                          const std::optional<HodgeBundleCollection>& extension);

/// The un-normalized Hirzebruch class of a smooth variety.
ClassPolynomial hirzebruch_class_smooth(const RingPtr& ring, const BundleData& tangent);
/// ch(Hc_y(V)) T_y(T_Z)
ClassPolynomial class_level_meyer(const RingPtr& ring, const BundleData& tangent, const HodgeBundleCollection& v);

enum class PushforwardKind { product_projection, projective_bundle };

/// Integration along the fibers of src -> dst. For a product, dst is the
/// first factor and the remaining factors are integrated out. For P(V) -> B,
/// xi^k b goes to s_{k-r+1}(V) b.
ClassPolynomial pushforward(const RingPtr& src, const RingPtr& dst, PushforwardKind kind, const ClassPolynomial& cls);
CohomClass pushforward(const RingPtr& src, const RingPtr& dst, PushforwardKind kind, const CohomClass& cls);

struct ClassPair {
  ClassPolynomial lhs;
  ClassPolynomial rhs;
  bool equal() const { return lhs == rhs; }
};

/// f_* T_y(T_E) against ch(chi_y(f)) T_y(T_B) for a product or projective
/// bundle model E -> B. Without a fiber collection the Hodge bundles are the
/// trivial bundles with ranks the Betti numbers of the (cellular) fiber.
ClassPair class_level_atiyah_check(const RingPtr& total,
                                   const std::optional<HodgeBundleCollection>& fiber_hodge = std::nullopt);

/// The base of a product (first factor) or projective-bundle model.
RingPtr model_base(const RingPtr& total);
PushforwardKind model_kind(const RingPtr& total);
/// Trivial Hodge bundles H^{p,p} of rank b_{2p} of the fiber of the model.
HodgeBundleCollection cellular_fiber_collection(const RingPtr& total);

}  // namespace hodge
