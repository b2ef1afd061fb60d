#pragma once

#include "hodge/polycore/e_polynomial.hpp"
#include "hodge/polycore/genus_polynomial.hpp"

#include <memory>
#include <string>

namespace hodge {

/// A named leaf with explicit geometric flags; the flags are trusted, never
/// inferred from the E-polynomial.
struct AtomSpec {
  std::string name;
  EPolynomial e;
  int dim = 0;
  bool smooth = false;
  bool complete = false;
};

/// Element of the Grothendieck ring of varieties, kept as an expression tree
/// whose E-polynomial normal form is computed once at construction.
class VarietyClass {
 public:
  enum class Kind { point, affine_line, proj_space, torus, atom, sum, diff, prod };

  /// Defaults to the empty variety (the zero class).
  VarietyClass();

  static VarietyClass point();
  static VarietyClass affine_line();
  static VarietyClass proj_space(int n);
  static VarietyClass torus();
  static VarietyClass atom(AtomSpec spec);
  /// Freezes an existing class into an atom carrying the given flags. Used
  /// when the caller knows more than the expression reveals, e.g. that
  /// L^3 - pt is smooth of dimension 3.
  static VarietyClass as_atom(std::string name, const VarietyClass& of, int dim, bool smooth, bool complete);

  friend VarietyClass operator+(const VarietyClass& a, const VarietyClass& b);
  friend VarietyClass operator-(const VarietyClass& a, const VarietyClass& b);
  friend VarietyClass operator*(const VarietyClass& a, const VarietyClass& b);
  VarietyClass pow(unsigned k) const;

  Kind kind() const;
  const EPolynomial& e_polynomial() const;
  int dim() const;
  bool smooth() const;
  bool complete() const;
  std::string to_string() const;

 private:
  struct Node;
  explicit VarietyClass(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Specialization of the E-normal form at (u, v) = (-y, 1).
GenusPolynomial chi_y_c(const VarietyClass& x);

/// chi_y for complete classes (equal to chi_y^c) and for smooth classes of
/// pure dimension (via Poincare duality); ValidationError otherwise.
GenusPolynomial chi_y(const VarietyClass& x);

/// Class of the blow-up of smooth X along a smooth center Y of codimension
/// r + 1, realized as X + Y * (P^r - pt).
VarietyClass blowup_class(const VarietyClass& x, const VarietyClass& y, int r);

struct GenusPair {
  GenusPolynomial lhs;
  GenusPolynomial rhs;
  bool equal() const { return lhs == rhs; }
};

/// lhs = chi_y^c(B x F), rhs = chi_y^c(B) chi_y^c(F).
GenusPair product_genus_check(const VarietyClass& base, const VarietyClass& fiber);

/// lhs = genus of the total space, rhs = base * fiber. A nonzero difference
/// is the defect from multiplicativity.
GenusPair multiplicativity_check(const GenusPolynomial& total, const GenusPolynomial& base,
                                 const GenusPolynomial& fiber);

}  // namespace hodge
