#pragma once

#include "hodge/polycore/integer.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace hodge {

/// Laurent polynomial in one variable with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so two polynomials are
/// equal exactly when their term maps are equal.
class GenusPolynomial {
 public:
  using Terms = std::map<int, Integer>;

  GenusPolynomial() = default;
  GenusPolynomial(long constant);  // NOLINT: integers embed as constants
  explicit GenusPolynomial(const Integer& constant);
  explicit GenusPolynomial(Terms terms);

  static GenusPolynomial monomial(const Integer& coef, int exponent);
  static GenusPolynomial variable() { return monomial(1, 1); }
  /// (-y)^n
  static GenusPolynomial neg_y_power(int n);
  /// 1 + (-y) + ... + (-y)^n
  static GenusPolynomial neg_y_geometric(int n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  GenusPolynomial& operator+=(const GenusPolynomial& o);
  GenusPolynomial& operator-=(const GenusPolynomial& o);
  GenusPolynomial& operator*=(const GenusPolynomial& o);
  GenusPolynomial& operator*=(const Integer& c);

  friend GenusPolynomial operator+(GenusPolynomial a, const GenusPolynomial& b) { return a += b; }
  friend GenusPolynomial operator-(GenusPolynomial a, const GenusPolynomial& b) { return a -= b; }
  friend GenusPolynomial operator*(const GenusPolynomial& a, const GenusPolynomial& b);
  friend GenusPolynomial operator*(GenusPolynomial a, const Integer& c) { return a *= c; }
  GenusPolynomial operator-() const;
  friend bool operator==(const GenusPolynomial&, const GenusPolynomial&) = default;

  GenusPolynomial pow(unsigned k) const;
  /// P(y^{-1})
  GenusPolynomial inverted_variable() const;
  /// y^k * P(y)
  GenusPolynomial shifted(int k) const;

  Rational evaluate(const Rational& y) const;

  /// Canonical text form, ascending exponents: "1 - 2*y + y^2".
  std::string to_string(std::string_view var = "y") const;

 private:
  void add_term(int exponent, const Integer& coef);
  Terms terms_;
};

enum class ArithOp { add, sub, mul };

GenusPolynomial poly_arith(const GenusPolynomial& a, const GenusPolynomial& b, ArithOp op);

/// Serial reference product; operator* may use the OpenMP kernel.
GenusPolynomial multiply_serial(const GenusPolynomial& a, const GenusPolynomial& b);
GenusPolynomial multiply_parallel(const GenusPolynomial& a, const GenusPolynomial& b);

/// Parses the canonical text form (and any reasonable variant of it).
GenusPolynomial parse_genus_polynomial(std::string_view text, std::string_view var = "y");

}  // namespace hodge
