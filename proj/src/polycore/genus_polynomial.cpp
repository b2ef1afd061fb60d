#include "hodge/polycore/genus_polynomial.hpp"

#include "hodge/error.hpp"
#include "hodge/polycore/kernels.hpp"

#include <cctype>
#include <sstream>

namespace hodge {

namespace {

int add_exponents(int a, int b) { return a + b; }

}  // namespace

GenusPolynomial::GenusPolynomial(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

GenusPolynomial::GenusPolynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

GenusPolynomial::GenusPolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

GenusPolynomial GenusPolynomial::monomial(const Integer& coef, int exponent) {
  GenusPolynomial p;
  p.add_term(exponent, coef);
  return p;
}

GenusPolynomial GenusPolynomial::neg_y_power(int n) { return monomial(n % 2 == 0 ? 1 : -1, n); }

GenusPolynomial GenusPolynomial::neg_y_geometric(int n) {
  GenusPolynomial p;
  for (int k = 0; k <= n; ++k) p.add_term(k, k % 2 == 0 ? 1 : -1);
  return p;
}

Integer GenusPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> GenusPolynomial::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> GenusPolynomial::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

void GenusPolynomial::add_term(int exponent, const Integer& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

GenusPolynomial& GenusPolynomial::operator+=(const GenusPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GenusPolynomial& GenusPolynomial::operator-=(const GenusPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GenusPolynomial& GenusPolynomial::operator*=(const GenusPolynomial& o) {
  *this = *this * o;
  return *this;
}

GenusPolynomial& GenusPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

GenusPolynomial operator*(const GenusPolynomial& a, const GenusPolynomial& b) {
  return GenusPolynomial(kernels::sparse_product(a.terms_, b.terms_, add_exponents));
}

GenusPolynomial multiply_serial(const GenusPolynomial& a, const GenusPolynomial& b) {
  return GenusPolynomial(kernels::sparse_product_serial(a.terms(), b.terms(), add_exponents));
}

GenusPolynomial multiply_parallel(const GenusPolynomial& a, const GenusPolynomial& b) {
  return GenusPolynomial(kernels::sparse_product_parallel(a.terms(), b.terms(), add_exponents));
}

GenusPolynomial GenusPolynomial::operator-() const {
  GenusPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

GenusPolynomial GenusPolynomial::pow(unsigned k) const {
  GenusPolynomial result(1);
  GenusPolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

GenusPolynomial GenusPolynomial::inverted_variable() const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(-e, c);
  return GenusPolynomial(std::move(t));
}

GenusPolynomial GenusPolynomial::shifted(int k) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e + k, c);
  return GenusPolynomial(std::move(t));
}

Rational GenusPolynomial::evaluate(const Rational& y) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && y == 0) throw ValidationError("Laurent polynomial " + to_string() + " has a pole at 0");
    Rational power = 1;
    Rational base = e >= 0 ? y : Rational(1) / y;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
    sum += Rational(c) * power;
  }
  return sum;
}

std::string GenusPolynomial::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
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
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

GenusPolynomial poly_arith(const GenusPolynomial& a, const GenusPolynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  return {};
}

GenusPolynomial parse_genus_polynomial(std::string_view text, std::string_view var) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto fail = [&](const std::string& why) {
    throw ValidationError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) fail("empty");
  GenusPolynomial result;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      fail("expected '+' or '-' at offset " + std::to_string(i));
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer coef = start == i ? Integer(1) : Integer(s.substr(start, i - start), 10);
    bool has_digits = start != i;
    int exponent = 0;
    if (has_digits && i < s.size() && s[i] == '*') ++i;
    if (s.compare(i, var.size(), var) == 0) {
      i += var.size();
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (es == i || (s[es] == '-' && es + 1 == i)) fail("missing exponent");
        exponent = std::stoi(s.substr(es, i - es));
      }
    } else if (!has_digits) {
      fail("expected a term at offset " + std::to_string(start));
    }
    result += GenusPolynomial::monomial(coef * sign, exponent);
    any = true;
  }
  return result;
}

}  // namespace hodge
