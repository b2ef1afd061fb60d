#pragma once

// Reference computations that share no code path with the formulas they
// check: dense coefficient arrays instead of sparse maps, Bernoulli numbers
// instead of series inversion, explicit Chern roots instead of Newton's
// identities, Hodge diamonds instead of E-polynomials.

#include "hodge/charclass/cohom_ring.hpp"
#include "hodge/polycore/e_polynomial.hpp"
#include "hodge/polycore/genus_polynomial.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hodge::oracle {

GenusPolynomial dense_multiply(const GenusPolynomial& a, const GenusPolynomial& b);
EPolynomial dense_multiply(const EPolynomial& a, const EPolynomial& b);

/// chi_y of a smooth projective variety from its Hodge diamond:
/// sum_{p,q} (-1)^q h^{p,q} y^p.
GenusPolynomial diamond_chi_y(const std::map<std::pair<int, int>, long>& hpq);

/// 1 + (-y) + ... + (-y)^n, summed term by term.
GenusPolynomial chi_y_proj_space(int n);

/// sum_S chi(S) chi(F_S) over open strata.
GenusPolynomial additive_strata_sum(const std::vector<GenusPolynomial>& open_genera,
                                    const std::vector<GenusPolynomial>& fiber_genera);

/// Bernoulli numbers B_0 .. B_n with B_1 = -1/2.
std::vector<Rational> bernoulli(int n);
/// Coefficients of alpha / (1 - e^{-alpha}) from Bernoulli numbers.
std::vector<Rational> todd_series(int degree);
/// Coefficients of alpha / tanh(alpha / 2) from Bernoulli numbers.
std::vector<Rational> l_tilde_series(int degree);

/// prod_j Q(l_j) over explicit roots l_j (degree-one classes), multiplied
/// out in the ring.
CohomClass root_product(const std::vector<CohomClass>& roots, const std::vector<Rational>& q);
ClassPolynomial root_product(const std::vector<CohomClass>& roots, const std::vector<YRational>& q);
/// sum_j e^{l_j}
CohomClass root_chern_character(const std::vector<CohomClass>& roots);

/// Cohomology dimensions of O(d) on P^1 by Cech counting of Laurent monomials.
std::pair<long, long> cech_dims_p1(long d);

/// Euler characteristic of a cellular space: one cell per basis element.
long cell_count(const RingPtr& ring);

/// chi(X) = chi(C) chi(F) + sum_c (chi(X_c) - chi(F)).
long classical_riemann_hurwitz(long chi_base, long chi_fiber, const std::vector<long>& special_fiber_euler);

}  // namespace hodge::oracle
