#pragma once

#include "hodge/hodgestruct/mixed_hodge.hpp"
#include "hodge/polycore/genus_polynomial.hpp"

#include <string>
#include <variant>
#include <vector>

namespace hodge {

/// Hypercohomology table of the vanishing cycles along a special fiber whose
/// singular locus has dimension sing_dim.
struct VanishingData {
  MixedHodgeComplex table;
  int sing_dim = 0;
};

/// Isolated singular points; each table is the reduced cohomology of the
/// Milnor fiber, supported in degree n = dim of the fiber.
struct IsolatedData {
  std::vector<MixedHodgeComplex> points;
};

struct MilnorStratum {
  std::string id;
  GenusPolynomial open_genus_c;
  MixedHodgeComplex milnor;  // reduced cohomology of the Milnor fiber along the stratum
};

/// Singular locus stratified with trivial monodromy along each stratum.
struct StratifiedData {
  std::vector<MilnorStratum> strata;
};

using CriticalData = std::variant<VanishingData, IsolatedData, StratifiedData>;

struct CriticalValue {
  std::string label;
  CriticalData data;
};

/// A projective morphism from an (n+1)-dimensional variety onto a smooth
/// curve.
struct CurveFibration {
  GenusPolynomial base_genus_c;  // chi_y^c(C)
  GenusPolynomial generic_fiber; // chi_y(X_t)
  int total_dim = 1;             // n + 1
  std::vector<CriticalValue> critical;
  bool monodromy_attested = false;

  int fiber_dim() const { return total_dim - 1; }
};

struct SupportReport {
  bool ok = true;
  std::vector<int> offending_degrees;
  std::string message;
};

/// Accepts iff every degree of the table lies in [n - s, n + s].
SupportReport validate_vanishing_support(const MixedHodgeComplex& table, int n, int s);

/// chi_y([H(X_c; phi)]) for one critical value, with the isolated and
/// stratified forms reduced to it. Validates the support constraints.
GenusPolynomial vanishing_genus(const CriticalValue& cv, int n);

/// chi_y(X_c) = chi_y(X_t) - chi_y([H(X_c; phi)]).
GenusPolynomial special_fiber_chi(const CriticalValue& cv, const GenusPolynomial& generic_fiber, int n);

struct RhResult {
  GenusPolynomial total;
  GenusPolynomial product_term;
  std::vector<GenusPolynomial> corrections;  // the signed term added per critical value
};

/// chi_y^c(C) chi_y(X_t) - sum_c chi_y([H(X_c; phi)]). Refuses without a
/// trivial-monodromy attestation on the fibration or the override.
RhResult rh_total_chi_c(const CurveFibration& f, bool assume_trivial_monodromy = false);

/// The weight-refined (E-polynomial) version does not hold; always throws a
/// ValidationError explaining why.
[[noreturn]] void rh_total_e_polynomial(const CurveFibration& f);

}  // namespace hodge
