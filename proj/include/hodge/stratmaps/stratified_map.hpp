#pragma once

#include "hodge/hodgestruct/mixed_hodge.hpp"
#include "hodge/polycore/genus_polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace hodge {

/// One stratum of the target. `genus` is the genus of the closure unless
/// genus_is_closure is false, in which case it is the genus of the open
/// stratum itself.
struct StratumRecord {
  std::string id;
  GenusPolynomial genus;
  bool genus_is_closure = true;
  std::vector<std::string> below;  // strata W with W < S, i.e. W in closure(S) \ S
  GenusPolynomial fiber_genus;
  bool monodromy_trivial = false;
};

/// Whether the supplied genera are chi_y^c data, or chi_y data of projective
/// closures and fibers.
enum class GenusKind { compact_support, projective };

struct EvalOptions {
  /// Skips the trivial-monodromy requirement, e.g. for Zariski locally
  /// trivial maps.
  bool assume_trivial_monodromy = false;
};

class StratifiedMapDescriptor {
 public:
  /// Validates ids, references and acyclicity, and derives the hat-genera.
  /// Every stratum other than the generic one is taken to lie in the closure
  /// of the generic stratum, whether or not it is listed.
  static StratifiedMapDescriptor build(std::vector<StratumRecord> records, const std::string& generic_id,
                                       GenusKind kind = GenusKind::compact_support);

  const std::vector<StratumRecord>& strata() const { return records_; }
  const StratumRecord& generic() const { return records_[generic_]; }
  GenusKind kind() const { return kind_; }
  std::size_t index_of(const std::string& id) const;
  /// Strict predecessors of stratum i after transitive closure.
  const std::vector<std::size_t>& strictly_below(std::size_t i) const { return below_[i]; }

  const GenusPolynomial& hat_genus(const std::string& id) const;
  const GenusPolynomial& hat_genus(std::size_t i) const { return hat_[i]; }
  /// Genus of the closure, given or reconstructed from the open genera.
  const GenusPolynomial& closure_genus(std::size_t i) const { return closure_[i]; }
  /// hat-genera keyed by stratum id, for audit output.
  std::map<std::string, GenusPolynomial> hat_genera() const;

 private:
  std::vector<StratumRecord> records_;
  std::size_t generic_ = 0;
  GenusKind kind_ = GenusKind::compact_support;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<GenusPolynomial> hat_;
  std::vector<GenusPolynomial> closure_;
};

/// chi(Y) chi(F) + sum over non-generic S of hat(S) (chi(F_S) - chi(F)).
/// Refuses (MonodromyRefusal) if a non-generic stratum lacks the trivial
/// monodromy flag and no override is given.
GenusPolynomial total_space_chi_c(const StratifiedMapDescriptor& d, EvalOptions options = {});
/// Same sum evaluated stratum by stratum in one thread; reference for the
/// OpenMP version above.
GenusPolynomial total_space_chi_c_serial(const StratifiedMapDescriptor& d, EvalOptions options = {});
/// The chi_y version; needs a descriptor of kind projective.
GenusPolynomial total_space_chi(const StratifiedMapDescriptor& d, EvalOptions options = {});

struct StalkStratum {
  std::string id;
  GenusPolynomial open_genus_c;
  MixedHodgeComplex stalk;
};

struct StalkSumDescriptor {
  std::vector<StalkStratum> strata;
};

/// sum_S chi_y^c(S) chi_y(stalk_S). Constancy of the cohomology sheaves along
/// each stratum is the caller's claim and is not checked.
GenusPolynomial stalk_sum_chi(const StalkSumDescriptor& d);

}  // namespace hodge
