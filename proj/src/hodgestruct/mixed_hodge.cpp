#include "hodge/hodgestruct/mixed_hodge.hpp"

#include "hodge/error.hpp"

#include <set>
#include <sstream>

namespace hodge {

namespace {

std::string describe(const HodgeIndex& idx) {
  std::ostringstream out;
  out << '(' << idx.degree << ',' << idx.p << ',';
  if (idx.q == kUnknownWeight) {
    out << '_';
  } else {
    out << idx.q;
  }
  out << ')';
  return out.str();
}

}  // namespace

MixedHodgeComplex MixedHodgeComplex::from_entries(const std::vector<std::pair<HodgeIndex, Integer>>& entries,
                                                  std::optional<std::string> label) {
  MixedHodgeComplex k;
  k.label_ = std::move(label);
  for (const auto& [idx, dim] : entries) {
    if (dim < 0) {
      throw ValidationError("negative dimension " + dim.get_str() + " at " + describe(idx));
    }
    if (k.entries_.count(idx) != 0) throw ValidationError("repeated table entry " + describe(idx));
    if (dim != 0) k.entries_.emplace(idx, dim);
  }
  return k;
}

bool MixedHodgeComplex::has_unknown_weights() const {
  for (const auto& [idx, dim] : entries_) {
    if (idx.q == kUnknownWeight) return true;
  }
  return false;
}

std::vector<int> MixedHodgeComplex::degrees() const {
  std::set<int> s;
  for (const auto& [idx, dim] : entries_) s.insert(idx.degree);
  return {s.begin(), s.end()};
}

Integer MixedHodgeComplex::total_dimension() const {
  Integer t = 0;
  for (const auto& [idx, dim] : entries_) t += dim;
  return t;
}

MixedHodgeComplex operator+(const MixedHodgeComplex& a, const MixedHodgeComplex& b) {
  MixedHodgeComplex r = a;
  r.label_.reset();
  for (const auto& [idx, dim] : b.entries_) r.entries_[idx] += dim;
  return r;
}

MixedHodgeComplex MixedHodgeComplex::shifted(int k) const {
  MixedHodgeComplex r;
  r.label_ = label_;
  for (const auto& [idx, dim] : entries_) r.entries_.emplace(HodgeIndex{idx.degree + k, idx.p, idx.q}, dim);
  return r;
}

GenusPolynomial chi_y_of_complex(const MixedHodgeComplex& k) {
  GenusPolynomial out;
  for (const auto& [idx, dim] : k.entries()) {
    // (-1)^i (-y)^p
    bool negative = ((idx.degree + idx.p) % 2) != 0;
    out += GenusPolynomial::monomial(negative ? Integer(-dim) : dim, idx.p);
  }
  return out;
}

EPolynomial e_polynomial_of_complex(const MixedHodgeComplex& k) {
  EPolynomial out;
  for (const auto& [idx, dim] : k.entries()) {
    if (idx.q == kUnknownWeight) {
      throw ValidationError("E-polynomial needs weight data; entry " + describe(idx) + " has none");
    }
    out += EPolynomial::monomial(idx.degree % 2 == 0 ? dim : Integer(-dim), idx.p, idx.q);
  }
  return out;
}

GenusPolynomial poincare_dual(const GenusPolynomial& p, int n) {
  GenusPolynomial r = p.inverted_variable().shifted(n);
  if (n % 2 != 0) r = -r;
  return r;
}

Integer specialize_genus(const GenusPolynomial& p, GenusSpecialization at) {
  int y = at == GenusSpecialization::euler ? -1 : at == GenusSpecialization::arithmetic ? 0 : 1;
  Rational v = p.evaluate(y);
  return v.get_num();  // exact: integer coefficients at y in {-1, 0, 1}
}

PureHodgeStructure PureHodgeStructure::make(int weight, std::map<std::pair<int, int>, Integer> hpq,
                                            bool polarized_real) {
  for (const auto& [pq, h] : hpq) {
    if (pq.first + pq.second != weight) {
      throw ValidationError("h^{" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                            "} is not of weight " + std::to_string(weight));
    }
    if (h < 0) throw ValidationError("negative Hodge number");
  }
  std::erase_if(hpq, [](const auto& kv) { return kv.second == 0; });
  if (polarized_real) {
    for (const auto& [pq, h] : hpq) {
      auto it = hpq.find({pq.second, pq.first});
      if (it == hpq.end() || it->second != h) {
        throw ValidationError("Hodge symmetry fails at h^{" + std::to_string(pq.first) + "," +
                              std::to_string(pq.second) + "}");
      }
    }
  }
  PureHodgeStructure s;
  s.weight_ = weight;
  s.hpq_ = std::move(hpq);
  s.polarized_real_ = polarized_real;
  return s;
}

MixedHodgeComplex PureHodgeStructure::as_complex(int degree) const {
  std::vector<std::pair<HodgeIndex, Integer>> e;
  for (const auto& [pq, h] : hpq_) e.push_back({HodgeIndex{degree, pq.first, pq.second}, h});
  return MixedHodgeComplex::from_entries(e);
}

GenusPolynomial PureHodgeStructure::chi_y() const {
  GenusPolynomial out;
  for (const auto& [pq, h] : hpq_) out += GenusPolynomial::monomial(pq.first % 2 == 0 ? h : Integer(-h), pq.first);
  return out;
}

}  // namespace hodge
