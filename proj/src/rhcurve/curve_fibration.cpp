#include "hodge/rhcurve/curve_fibration.hpp"

#include "hodge/error.hpp"

namespace hodge {

namespace {

// Genus of a single MHS (no degree sign): sum_p dim Gr^p (-y)^p.
GenusPolynomial plain_genus(const MixedHodgeComplex& t) {
  GenusPolynomial g;
  for (const auto& [idx, dim] : t.entries()) g += GenusPolynomial::monomial(idx.p % 2 == 0 ? dim : Integer(-dim), idx.p);
  return g;
}

void require_support(const MixedHodgeComplex& table, int n, int s, const std::string& what) {
  auto report = validate_vanishing_support(table, n, s);
  if (!report.ok) throw ValidationError(what + ": " + report.message);
}

}  // namespace

SupportReport validate_vanishing_support(const MixedHodgeComplex& table, int n, int s) {
  if (s < 0) throw ValidationError("singular locus dimension must be >= 0, got " + std::to_string(s));
  SupportReport r;
  for (int j : table.degrees()) {
    if (j < n - s || j > n + s) r.offending_degrees.push_back(j);
  }
  if (!r.offending_degrees.empty()) {
    r.ok = false;
    r.message = "vanishing cohomology in degree " + std::to_string(r.offending_degrees.front()) +
                " lies outside [n - s, n + s] = [" + std::to_string(n - s) + ", " + std::to_string(n + s) +
                "] (n = " + std::to_string(n) + ", s = " + std::to_string(s) + ")";
  }
  return r;
}

GenusPolynomial vanishing_genus(const CriticalValue& cv, int n) {
  const std::string where = cv.label.empty() ? "critical value" : "critical value " + cv.label;
  if (const auto* v = std::get_if<VanishingData>(&cv.data)) {
    require_support(v->table, n, v->sing_dim, where);
    return chi_y_of_complex(v->table);
  }
  if (const auto* iso = std::get_if<IsolatedData>(&cv.data)) {
    // Each point contributes (-1)^n times the genus of its reduced Milnor
    // cohomology, which sits in degree n alone.
    GenusPolynomial sum;
    for (const auto& pt : iso->points) {
      require_support(pt, n, 0, where);
      sum += plain_genus(pt);
    }
    return n % 2 == 0 ? sum : -sum;
  }
  const auto& st = std::get<StratifiedData>(cv.data);
  GenusPolynomial sum;
  for (const auto& s : st.strata) sum += s.open_genus_c * chi_y_of_complex(s.milnor);
  return sum;
}

GenusPolynomial special_fiber_chi(const CriticalValue& cv, const GenusPolynomial& generic_fiber, int n) {
  return generic_fiber - vanishing_genus(cv, n);
}

RhResult rh_total_chi_c(const CurveFibration& f, bool assume_trivial_monodromy) {
  if (f.total_dim < 1) throw ValidationError("total space dimension must be >= 1");
  if (!f.monodromy_attested && !assume_trivial_monodromy) {
    throw MonodromyRefusal("the Riemann-Hurwitz formula needs trivial monodromy of the punctured base on the "
                           "cohomology of the generic fiber; mark the fibration trivial-monodromy or pass "
                           "--assume-trivial-monodromy");
  }
  const int n = f.fiber_dim();
  RhResult r;
  r.product_term = f.base_genus_c * f.generic_fiber;
  r.total = r.product_term;
  for (const auto& cv : f.critical) {
    r.corrections.push_back(-vanishing_genus(cv, n));
    r.total += r.corrections.back();
  }
  return r;
}

void rh_total_e_polynomial(const CurveFibration&) {
  throw ValidationError("refusing a weight-refined Riemann-Hurwitz total: the limit mixed Hodge structure has the "
                        "same Hodge filtration dimensions as the generic fiber but a different weight filtration, "
                        "so the formula holds for chi_y only, not for E-polynomials");
}

}  // namespace hodge
