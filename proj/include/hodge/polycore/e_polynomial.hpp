#pragma once

#include "hodge/polycore/genus_polynomial.hpp"
#include "hodge/polycore/integer.hpp"

#include <map>
#include <string>
#include <utility>

namespace hodge {

/// Two-variable Laurent polynomial sum e^{k,l} u^k v^l over exact integers.
class EPolynomial {
 public:
  using Exponent = std::pair<int, int>;  // (k, l)
  using Terms = std::map<Exponent, Integer>;

  EPolynomial() = default;
  EPolynomial(long constant);  // NOLINT
  explicit EPolynomial(Terms terms);

  static EPolynomial monomial(const Integer& coef, int k, int l);
  /// uv, the class of the affine line.
  static EPolynomial uv() { return monomial(1, 1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int k, int l) const;
  /// max(k, l) over all terms; 0 for the zero polynomial.
  int degree_bound() const;

  EPolynomial& operator+=(const EPolynomial& o);
  EPolynomial& operator-=(const EPolynomial& o);
  friend EPolynomial operator+(EPolynomial a, const EPolynomial& b) { return a += b; }
  friend EPolynomial operator-(EPolynomial a, const EPolynomial& b) { return a -= b; }
  friend EPolynomial operator*(const EPolynomial& a, const EPolynomial& b);
  EPolynomial operator-() const;
  EPolynomial pow(unsigned k) const;
  friend bool operator==(const EPolynomial&, const EPolynomial&) = default;

  std::string to_string() const;

 private:
  void add_term(Exponent e, const Integer& c);
  Terms terms_;
};

EPolynomial multiply_serial(const EPolynomial& a, const EPolynomial& b);

enum class ESpecialization { chi_y, weight, euler };

/// chi_y: E(-y, 1); weight: E(t, t) as a polynomial in t; euler: E(1, 1).
GenusPolynomial specialize_e(const EPolynomial& e, ESpecialization at);

}  // namespace hodge
