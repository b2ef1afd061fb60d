#pragma once

#include "hodge/charclass/bundle.hpp"
#include "hodge/charclass/power_series.hpp"

#include <vector>

namespace hodge {

/// Power sums p_1 .. p_top of the Chern roots, from Newton's identities.
std::vector<CohomClass> power_sums(const BundleData& e);

/// prod_j Q(alpha_j) over the Chern roots of E, truncated at the top degree.
/// The constant term of Q must be c (1+y)^e with c a nonzero rational.
ClassPolynomial genus_from_series(const Series& q, const BundleData& e);

CohomClass chern_character(const BundleData& e);
/// sum_j e^{beta_j (1+y)}; the degree-k part is (1+y)^k ch_k.
ClassPolynomial chern_character_scaled(const BundleData& e);
/// ch of sum_p Lambda^p E y^p.
ClassPolynomial lambda_y_class(const BundleData& e);
ClassPolynomial todd_class(const BundleData& e);
/// Un-normalized or normalized Hirzebruch class. The un-normalized class is
/// checked against td(E) ch(lambda_y(E^*)) before it is returned.
ClassPolynomial hirzebruch_class(const BundleData& e, bool normalized = false);

}  // namespace hodge
