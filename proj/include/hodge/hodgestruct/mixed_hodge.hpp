#pragma once

#include "hodge/polycore/e_polynomial.hpp"
#include "hodge/polycore/genus_polynomial.hpp"
#include "hodge/polycore/integer.hpp"

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

/// Stands in for q when only the Hodge filtration of an entry is known.
inline constexpr int kUnknownWeight = std::numeric_limits<int>::min();

struct HodgeIndex {
  int degree = 0;  // cohomological degree i
  int p = 0;
  int q = 0;
  auto operator<=>(const HodgeIndex&) const = default;
};

/// Finitely supported table (i, p, q) -> dim representing the class
/// sum_i (-1)^i [K^i] in K_0(mhs). The sign is applied by the genus
/// functions; the table itself stores nonnegative dimensions.
class MixedHodgeComplex {
 public:
  using Entries = std::map<HodgeIndex, Integer>;

  MixedHodgeComplex() = default;
  /// Throws ValidationError on negative dimensions or repeated indices.
  static MixedHodgeComplex from_entries(const std::vector<std::pair<HodgeIndex, Integer>>& entries,
                                        std::optional<std::string> label = std::nullopt);

  const Entries& entries() const { return entries_; }
  const std::optional<std::string>& label() const { return label_; }
  bool empty() const { return entries_.empty(); }
  bool has_unknown_weights() const;
  /// Cohomological degrees carrying a nonzero entry, ascending.
  std::vector<int> degrees() const;
  Integer total_dimension() const;

  /// Entrywise sum of tables.
  friend MixedHodgeComplex operator+(const MixedHodgeComplex& a, const MixedHodgeComplex& b);
  /// Moves every entry from degree i to degree i + k.
  MixedHodgeComplex shifted(int k) const;
  friend bool operator==(const MixedHodgeComplex& a, const MixedHodgeComplex& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Entries entries_;
  std::optional<std::string> label_;
};

/// sum_{i,p} (-1)^i dim(i,p,.) (-y)^p
GenusPolynomial chi_y_of_complex(const MixedHodgeComplex& k);

/// Coefficient of u^k v^l is sum_i (-1)^i dim(i,k,l). Rejects tables with
/// unknown weights.
EPolynomial e_polynomial_of_complex(const MixedHodgeComplex& k);

/// (-y)^n P(1/y): exchanges chi_y and chi_y^c of a smooth n-dimensional
/// variety.
GenusPolynomial poincare_dual(const GenusPolynomial& p, int n);

enum class GenusSpecialization { euler, arithmetic, signature };

/// Value at y = -1, 0 or 1.
Integer specialize_genus(const GenusPolynomial& p, GenusSpecialization at);

/// Pure Hodge structure of weight k given by its Hodge numbers.
class PureHodgeStructure {
 public:
  /// Every (p,q) must satisfy p+q = weight; with polarized_real set, Hodge
  /// symmetry h^{p,q} = h^{q,p} is enforced as well.
  static PureHodgeStructure make(int weight, std::map<std::pair<int, int>, Integer> hpq, bool polarized_real);

  int weight() const { return weight_; }
  const std::map<std::pair<int, int>, Integer>& hodge_numbers() const { return hpq_; }
  bool polarized_real() const { return polarized_real_; }

  /// The structure placed in a single cohomological degree.
  MixedHodgeComplex as_complex(int degree) const;
  /// sum_p h^{p,q} (-y)^p
  GenusPolynomial chi_y() const;

 private:
  int weight_ = 0;
  std::map<std::pair<int, int>, Integer> hpq_;
  bool polarized_real_ = false;
};

}  // namespace hodge
