#include "hodge/polycore/y_rational.hpp"

#include "hodge/error.hpp"

#include <sstream>

namespace hodge {

QPoly::QPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::one_plus_y_power(unsigned k) {
  std::vector<Rational> c(k + 1);
  for (unsigned i = 0; i <= k; ++i) c[i] = Rational(binomial(k, i));
  return QPoly(std::move(c));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Rational QPoly::evaluate(const Rational& y) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

QPoly QPoly::divided_by_one_plus_y() const {
  // Synthetic division by (y + 1), highest coefficient first.
  if (c_.empty()) return {};
  std::vector<Rational> q(c_.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c_.size(); i-- > 1;) {
    carry = c_[i] - carry;
    q[i - 1] = carry;
  }
  if (c_[0] - carry != 0) throw InconsistencyError("polynomial not divisible by (1+y): " + to_string());
  return QPoly(std::move(q));
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = 0; e < c_.size(); ++e) {
    const Rational& c = c_[e];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'y';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

YRational YRational::reduce(QPoly numerator, unsigned denominator_power) {
  YRational r;
  if (numerator.is_zero()) return r;
  while (denominator_power > 0 && numerator.evaluate(-1) == 0) {
    numerator = numerator.divided_by_one_plus_y();
    --denominator_power;
  }
  r.num_ = std::move(numerator);
  r.den_ = denominator_power;
  return r;
}

YRational::YRational(QPoly numerator, unsigned denominator_power) {
  *this = reduce(std::move(numerator), denominator_power);
}

YRational YRational::one_plus_y_power(int e) {
  if (e >= 0) return YRational(QPoly::one_plus_y_power(static_cast<unsigned>(e)));
  return YRational(QPoly(Rational(1)), static_cast<unsigned>(-e));
}

YRational& YRational::operator+=(const YRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = reduce(num_ + o.num_, den_);
  } else if (den_ > o.den_) {
    *this = reduce(num_ + o.num_ * QPoly::one_plus_y_power(den_ - o.den_), den_);
  } else {
    *this = reduce(num_ * QPoly::one_plus_y_power(o.den_ - den_) + o.num_, o.den_);
  }
  return *this;
}

YRational& YRational::operator-=(const YRational& o) { return *this += -o; }

YRational& YRational::operator*=(const YRational& o) {
  if (is_zero() || o.is_zero()) return *this = YRational();
  *this = reduce(num_ * o.num_, den_ + o.den_);
  return *this;
}

YRational& YRational::operator*=(const Rational& s) {
  num_ *= s;
  if (num_.is_zero()) den_ = 0;
  return *this;
}

YRational YRational::operator-() const {
  YRational r = *this;
  r.num_ = -r.num_;
  return r;
}

bool YRational::is_unit() const {
  if (num_.is_zero()) return false;
  QPoly n = num_;
  while (n.degree() > 0) {
    if (n.evaluate(-1) != 0) return false;
    n = n.divided_by_one_plus_y();
  }
  return true;
}

YRational YRational::inverse() const {
  if (num_.is_zero()) throw ValidationError("division by zero in Q[y][1/(1+y)]");
  QPoly n = num_;
  int e = 0;
  while (n.degree() > 0) {
    if (n.evaluate(-1) != 0) {
      throw ValidationError("not invertible in Q[y][1/(1+y)]: " + to_string());
    }
    n = n.divided_by_one_plus_y();
    ++e;
  }
  YRational r = one_plus_y_power(static_cast<int>(den_) - e);
  r *= Rational(1) / n.coefficient(0);
  return r;
}

Rational YRational::evaluate(const Rational& y) const {
  if (den_ == 0) return num_.evaluate(y);
  Rational base = y + 1;
  if (base == 0) throw InconsistencyError("cannot evaluate " + to_string() + " at y = -1");
  Rational d = 1;
  for (unsigned i = 0; i < den_; ++i) d *= base;
  return num_.evaluate(y) / d;
}

std::optional<GenusPolynomial> YRational::to_integer_polynomial() const {
  if (den_ != 0) return std::nullopt;
  GenusPolynomial out;
  const auto& c = num_.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].get_den() != 1) return std::nullopt;
    out += GenusPolynomial::monomial(c[i].get_num(), static_cast<int>(i));
  }
  return out;
}

std::string YRational::to_string() const {
  if (den_ == 0) return num_.to_string();
  std::string d = "(1 + y)";
  if (den_ != 1) d += "^" + std::to_string(den_);
  return "(" + num_.to_string() + ")/" + d;
}

}  // namespace hodge
