#pragma once

#include "hodge/polycore/integer.hpp"
#include "hodge/polycore/y_rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

class CohomRing;
using RingPtr = std::shared_ptr<const CohomRing>;

inline bool is_zero_coef(const Rational& c) { return c == 0; }
inline bool is_zero_coef(const YRational& c) { return c.is_zero(); }

/// Element of a CohomRing with coefficients in Coef (Rational for plain
/// cohomology classes, YRational for classes depending polynomially on y).
template <class Coef>
class Element {
 public:
  using Terms = std::map<std::size_t, Coef>;  // basis index -> coefficient

  Element() = default;
  explicit Element(RingPtr ring) : ring_(std::move(ring)) {}
  Element(RingPtr ring, Terms terms);

  static Element basis(RingPtr ring, std::size_t index, Coef c = Coef(1)) {
    return Element(std::move(ring), Terms{{index, std::move(c)}});
  }
  static Element scalar(RingPtr ring, Coef c) { return basis(std::move(ring), 0, std::move(c)); }

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coef coefficient(std::size_t index) const;
  /// Coefficient of the unit.
  Coef constant_term() const { return coefficient(0); }
  /// Coefficient of the designated top class.
  Coef integrate() const;
  Element degree_part(int k) const;
  /// True when every term has degree k (the zero element is homogeneous).
  bool is_homogeneous(int k) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Coef& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Coef& s) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b) { return a.times(b); }
  Element operator-() const {
    Element r = *this;
    for (auto& [i, c] : r.terms_) c = -c;
    return r;
  }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  Element pow(unsigned k) const;

 private:
  Element times(const Element& o) const;
  void check_same_ring(const Element& o) const;
  void add(std::size_t i, const Coef& c);
  RingPtr ring_;
  Terms terms_;
};

using CohomClass = Element<Rational>;
using ClassPolynomial = Element<YRational>;

ClassPolynomial lift(const CohomClass& c);
/// Substitutes a rational value for y; throws at y = -1 if a (1+y)
/// denominator remains.
CohomClass evaluate_at(const ClassPolynomial& c, const Rational& y);
/// Coefficient of y^k of a class whose coefficients are polynomials.
CohomClass y_coefficient(const ClassPolynomial& c, int k);

struct BasisElement {
  std::string name;
  int degree = 0;
};

/// A linear combination of basis names, used to state custom products.
using NamedCombination = std::vector<std::pair<std::string, Rational>>;

struct CustomRingSpec {
  std::vector<BasisElement> basis;  // the unit "1" is added if absent
  std::vector<std::tuple<std::string, std::string, NamedCombination>> products;
  std::string top;
};

/// Graded commutative ring with a finite basis, structure constants and an
/// integration functional reading off the coefficient of a top class.
class CohomRing : public std::enable_shared_from_this<CohomRing> {
 public:
  enum class Kind { point, proj_space, product, proj_bundle, custom };
  using Product = std::vector<std::pair<std::size_t, Rational>>;

  static RingPtr point();
  static RingPtr proj_space(int n);
  /// Generators of factor i (1-based) get the suffix i, e.g. h1, h2.
  static RingPtr product(std::vector<RingPtr> factors);
  /// Cohomology of the bundle of lines P(V) -> base, V of the given rank with
  /// Chern classes chern[0] = c_1, ... over the base. The new generator xi is
  /// c_1(O(1)), subject to xi^r + c_1 xi^{r-1} + ... + c_r = 0.
  static RingPtr proj_bundle(RingPtr base, int rank, std::vector<CohomClass> chern);
  static RingPtr custom(const CustomRingSpec& spec);

  Kind kind() const { return kind_; }
  std::size_t size() const { return basis_.size(); }
  const BasisElement& basis(std::size_t i) const { return basis_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  int top_degree() const { return top_degree_; }
  std::size_t top_index() const { return top_; }
  const Product& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }

  /// Names usable in ring-element expressions, with their classes.
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  CohomClass generator(const std::string& name) const;
  CohomClass one() const;
  CohomClass top_class() const;
  /// Number of basis elements in each degree.
  std::vector<long> betti() const;
  /// Canonical description; equal signatures mean identical rings.
  const std::string& signature() const { return signature_; }

  const std::vector<RingPtr>& factors() const { return factors_; }
  const RingPtr& base() const { return base_; }
  int bundle_rank() const { return bundle_rank_; }
  const std::vector<CohomClass>& bundle_chern() const { return bundle_chern_; }

  /// Product rings: pullback along the projection to factor i (0-based).
  CohomClass pullback_from_factor(std::size_t i, const CohomClass& c) const;
  /// Projective bundles: pullback along the bundle projection.
  CohomClass pullback_from_base(const CohomClass& c) const;
  /// Projective bundles: c_1(O(1)).
  CohomClass xi() const;

  /// Index tuple of a product basis element (one index per factor), or the
  /// (base index, xi exponent) pair of a projective-bundle basis element.
  const std::vector<std::size_t>& coordinates(std::size_t i) const { return coords_[i]; }

 private:
  CohomRing() = default;
  static void check_degree_cap(int top_degree);

  Kind kind_ = Kind::point;
  std::vector<BasisElement> basis_;
  std::vector<Product> table_;
  std::size_t top_ = 0;
  int top_degree_ = 0;
  std::vector<std::string> generator_names_;
  std::vector<std::size_t> generator_index_;
  std::string signature_;
  std::vector<RingPtr> factors_;
  RingPtr base_;
  int bundle_rank_ = 0;
  std::vector<CohomClass> bundle_chern_;
  std::vector<std::vector<std::size_t>> coords_;

};

/// Rings are identified by their signatures.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Text form, lowest degree first: "(1 + y) + (1 - y)*h".
std::string to_string(const CohomClass& c);
std::string to_string(const ClassPolynomial& c);

// ---------------------------------------------------------------------------

template <class Coef>
Element<Coef>::Element(RingPtr ring, Terms terms) : ring_(std::move(ring)) {
  for (auto& [i, c] : terms) {
    if (!is_zero_coef(c)) terms_.emplace(i, std::move(c));
  }
}

template <class Coef>
Coef Element<Coef>::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Coef(0) : it->second;
}

template <class Coef>
Coef Element<Coef>::integrate() const {
  return coefficient(ring_->top_index());
}

template <class Coef>
Element<Coef> Element<Coef>::degree_part(int k) const {
  Element r(ring_);
  for (const auto& [i, c] : terms_) {
    if (ring_->basis(i).degree == k) r.terms_.emplace(i, c);
  }
  return r;
}

template <class Coef>
bool Element<Coef>::is_homogeneous(int k) const {
  for (const auto& kv : terms_) {
    if (ring_->basis(kv.first).degree != k) return false;
  }
  return true;
}

template <class Coef>
void Element<Coef>::check_same_ring(const Element& o) const {
  if (!ring_) throw std::logic_error("ring element without a ring");
  if (ring_ != o.ring_ && !same_ring(ring_, o.ring_)) {
    throw std::invalid_argument("ring elements live in different rings: " + ring_->signature() + " vs " +
                                o.ring_->signature());
  }
}

template <class Coef>
void Element<Coef>::add(std::size_t i, const Coef& c) {
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (is_zero_coef(it->second)) terms_.erase(it);
  } else if (is_zero_coef(it->second)) {
    terms_.erase(it);
  }
}

template <class Coef>
Element<Coef>& Element<Coef>::operator+=(const Element& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  check_same_ring(o);
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

template <class Coef>
Element<Coef>& Element<Coef>::operator-=(const Element& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  check_same_ring(o);
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

template <class Coef>
Element<Coef>& Element<Coef>::operator*=(const Coef& s) {
  if (is_zero_coef(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= s;
  std::erase_if(terms_, [](const auto& kv) { return is_zero_coef(kv.second); });
  return *this;
}

template <class Coef>
Element<Coef> Element<Coef>::times(const Element& o) const {
  check_same_ring(o);
  Element r(ring_);
  for (const auto& [i, a] : terms_) {
    for (const auto& [j, b] : o.terms_) {
      const auto& prod = ring_->product(i, j);
      if (prod.empty()) continue;
      Coef ab = a;
      ab *= b;
      for (const auto& [k, s] : prod) {
        Coef t = ab;
        t *= Coef(s);
        r.add(k, t);
      }
    }
  }
  return r;
}

template <class Coef>
Element<Coef> Element<Coef>::pow(unsigned k) const {
  Element r = Element::scalar(ring_, Coef(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

}  // namespace hodge
