#pragma once

#include "hodge/polycore/genus_polynomial.hpp"
#include "hodge/polycore/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hodge {

/// Dense polynomial in y over the rationals. Trailing zeros are trimmed.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& constant);  // NOLINT
  explicit QPoly(std::vector<Rational> coefficients);

  static QPoly y() { return QPoly(std::vector<Rational>{0, 1}); }
  static QPoly one_plus_y_power(unsigned k);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  QPoly operator-() const;
  friend bool operator==(const QPoly&, const QPoly&) = default;

  Rational evaluate(const Rational& y) const;
  /// Exact division by (1+y); requires evaluate(-1) == 0.
  QPoly divided_by_one_plus_y() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// numerator / (1+y)^k with numerator in Q[y]. Values are kept reduced: the
/// numerator is never divisible by (1+y) while k > 0, so equality is
/// structural.
class YRational {
 public:
  YRational() = default;
  YRational(long constant) : num_(Rational(constant)) {}  // NOLINT
  YRational(const Rational& constant) : num_(constant) {}  // NOLINT
  explicit YRational(QPoly numerator, unsigned denominator_power = 0);

  /// (1+y)^e for any integer e.
  static YRational one_plus_y_power(int e);
  static YRational y() { return YRational(QPoly::y()); }

  const QPoly& numerator() const { return num_; }
  unsigned denominator_power() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == 0; }

  YRational& operator+=(const YRational& o);
  YRational& operator-=(const YRational& o);
  YRational& operator*=(const YRational& o);
  YRational& operator*=(const Rational& s);
  friend YRational operator+(YRational a, const YRational& b) { return a += b; }
  friend YRational operator-(YRational a, const YRational& b) { return a -= b; }
  friend YRational operator*(YRational a, const YRational& b) { return a *= b; }
  friend YRational operator*(YRational a, const Rational& s) { return a *= s; }
  friend YRational operator*(const Rational& s, YRational a) { return a *= s; }
  YRational operator-() const;
  friend bool operator==(const YRational&, const YRational&) = default;

  /// True when the value is c * (1+y)^e with c a nonzero rational.
  bool is_unit() const;
  /// Inverse of a unit; throws ValidationError otherwise.
  YRational inverse() const;

  /// Evaluates at a rational y. At y = -1 this requires no denominator.
  Rational evaluate(const Rational& y) const;

  /// The value as an integer polynomial, or nullopt if a denominator or a
  /// non-integral coefficient remains.
  std::optional<GenusPolynomial> to_integer_polynomial() const;

  std::string to_string() const;

  /// Idempotent canonicalization (exposed for property tests).
  static YRational reduce(QPoly numerator, unsigned denominator_power);

 private:
  QPoly num_;
  unsigned den_ = 0;
};

}  // namespace hodge
