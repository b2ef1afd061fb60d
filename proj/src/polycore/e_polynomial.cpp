#include "hodge/polycore/e_polynomial.hpp"

#include "hodge/polycore/kernels.hpp"

#include <algorithm>
#include <sstream>

namespace hodge {

namespace {

EPolynomial::Exponent add_exponents(const EPolynomial::Exponent& a, const EPolynomial::Exponent& b) {
  return {a.first + b.first, a.second + b.second};
}

void render_power(std::ostringstream& out, const char* var, int e) {
  out << var;
  if (e != 1) out << '^' << e;
}

}  // namespace

EPolynomial::EPolynomial(long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, Integer(constant));
}

EPolynomial::EPolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

EPolynomial EPolynomial::monomial(const Integer& coef, int k, int l) {
  EPolynomial p;
  p.add_term({k, l}, coef);
  return p;
}

Integer EPolynomial::coefficient(int k, int l) const {
  auto it = terms_.find({k, l});
  return it == terms_.end() ? Integer(0) : it->second;
}

int EPolynomial::degree_bound() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max({d, e.first, e.second});
  return d;
}

void EPolynomial::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

EPolynomial& EPolynomial::operator+=(const EPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

EPolynomial& EPolynomial::operator-=(const EPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

EPolynomial operator*(const EPolynomial& a, const EPolynomial& b) {
  return EPolynomial(kernels::sparse_product(a.terms_, b.terms_, add_exponents));
}

EPolynomial multiply_serial(const EPolynomial& a, const EPolynomial& b) {
  return EPolynomial(kernels::sparse_product_serial(a.terms(), b.terms(), add_exponents));
}

EPolynomial EPolynomial::operator-() const {
  EPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

EPolynomial EPolynomial::pow(unsigned k) const {
  EPolynomial result(1);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string EPolynomial::to_string() const {
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
    if (e.first == 0 && e.second == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    if (e.first != 0) render_power(out, "u", e.first);
    if (e.first != 0 && e.second != 0) out << '*';
    if (e.second != 0) render_power(out, "v", e.second);
  }
  return out.str();
}

GenusPolynomial specialize_e(const EPolynomial& e, ESpecialization at) {
  GenusPolynomial out;
  for (const auto& [exp, c] : e.terms()) {
    switch (at) {
      case ESpecialization::chi_y:
        out += GenusPolynomial::monomial(exp.first % 2 == 0 ? c : Integer(-c), exp.first);
        break;
      case ESpecialization::weight:
        out += GenusPolynomial::monomial(c, exp.first + exp.second);
        break;
      case ESpecialization::euler:
        out += GenusPolynomial(c);
        break;
    }
  }
  return out;
}

}  // namespace hodge
