#include "hodge/stratmaps/stratified_map.hpp"

#include "hodge/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace hodge {

namespace {

// Depth-first topological order over the "below" edges; throws on cycles.
std::vector<std::size_t> topological_order(const std::vector<std::vector<std::size_t>>& direct,
                                           const std::vector<StratumRecord>& records) {
  enum class Mark { none, active, done };
  std::vector<Mark> mark(direct.size(), Mark::none);
  std::vector<std::size_t> order;

  auto visit = [&](auto&& self, std::size_t v, std::vector<std::size_t>& path) -> void {
    if (mark[v] == Mark::done) return;
    if (mark[v] == Mark::active) {
      std::string cycle;
      auto start = std::find(path.begin(), path.end(), v);
      for (auto it = start; it != path.end(); ++it) cycle += records[*it].id + " > ";
      throw ValidationError("strata order has a cycle: " + cycle + records[v].id);
    }
    mark[v] = Mark::active;
    path.push_back(v);
    for (std::size_t w : direct[v]) self(self, w, path);
    path.pop_back();
    mark[v] = Mark::done;
    order.push_back(v);
  };

  for (std::size_t v = 0; v < direct.size(); ++v) {
    std::vector<std::size_t> path;
    visit(visit, v, path);
  }
  return order;
}

void require_monodromy(const StratifiedMapDescriptor& d, EvalOptions options) {
  if (options.assume_trivial_monodromy) return;
  for (std::size_t i = 0; i < d.strata().size(); ++i) {
    const auto& s = d.strata()[i];
    if (&s == &d.generic()) continue;
    if (!s.monodromy_trivial) {
      throw MonodromyRefusal("stratum '" + s.id +
                             "' is not declared trivial-monodromy; the stratified formula needs trivial "
                             "monodromy on every singular stratum (mark it trivial-monodromy or pass "
                             "--assume-trivial-monodromy)");
    }
  }
}

GenusPolynomial contribution(const StratifiedMapDescriptor& d, std::size_t i) {
  const auto& s = d.strata()[i];
  const auto& generic_fiber = d.generic().fiber_genus;
  if (&s == &d.generic()) return d.closure_genus(i) * generic_fiber;
  return d.hat_genus(i) * (s.fiber_genus - generic_fiber);
}

}  // namespace

StratifiedMapDescriptor StratifiedMapDescriptor::build(std::vector<StratumRecord> records,
                                                       const std::string& generic_id, GenusKind kind) {
  StratifiedMapDescriptor d;
  d.kind_ = kind;
  if (records.empty()) throw ValidationError("stratified map needs at least one stratum");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!index.emplace(records[i].id, i).second) {
      throw ValidationError("stratum '" + records[i].id + "' is declared twice");
    }
    if (kind == GenusKind::projective && !records[i].genus_is_closure) {
      throw ValidationError("stratum '" + records[i].id +
                            "': projective chi_y data must be given for closures, not open strata");
    }
  }
  auto g = index.find(generic_id);
  if (g == index.end()) throw ValidationError("generic stratum '" + generic_id + "' is not declared");
  d.generic_ = g->second;

  std::vector<std::vector<std::size_t>> direct(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& w : records[i].below) {
      auto it = index.find(w);
      if (it == index.end()) {
        throw ValidationError("stratum '" + records[i].id + "' lies over unknown stratum '" + w + "'");
      }
      if (it->second == i) throw ValidationError("stratum '" + w + "' is listed below itself");
      if (it->second == d.generic_) {
        throw ValidationError("the generic stratum '" + w + "' cannot lie in the closure of '" +
                              records[i].id + "'");
      }
      direct[i].push_back(it->second);
    }
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i != d.generic_ && std::find(direct[d.generic_].begin(), direct[d.generic_].end(), i) ==
                               direct[d.generic_].end()) {
      direct[d.generic_].push_back(i);
    }
  }

  const auto order = topological_order(direct, records);

  // Transitive closure, built in topological order (predecessors first).
  std::vector<std::vector<bool>> reach(records.size(), std::vector<bool>(records.size(), false));
  for (std::size_t v : order) {
    for (std::size_t w : direct[v]) {
      reach[v][w] = true;
      for (std::size_t u = 0; u < records.size(); ++u) {
        if (reach[w][u]) reach[v][u] = true;
      }
    }
  }
  d.below_.assign(records.size(), {});
  for (std::size_t v = 0; v < records.size(); ++v) {
    for (std::size_t u = 0; u < records.size(); ++u) {
      if (reach[v][u]) d.below_[v].push_back(u);
    }
  }

  d.hat_.assign(records.size(), GenusPolynomial());
  d.closure_.assign(records.size(), GenusPolynomial());
  for (std::size_t v : order) {
    GenusPolynomial lower;
    for (std::size_t w : d.below_[v]) lower += d.hat_[w];
    if (records[v].genus_is_closure) {
      d.closure_[v] = records[v].genus;
      d.hat_[v] = records[v].genus - lower;
    } else {
      d.hat_[v] = records[v].genus;
      d.closure_[v] = records[v].genus + lower;
    }
  }
  d.records_ = std::move(records);
  return d;
}

std::size_t StratifiedMapDescriptor::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (records_[i].id == id) return i;
  }
  throw ValidationError("unknown stratum '" + id + "'");
}

const GenusPolynomial& StratifiedMapDescriptor::hat_genus(const std::string& id) const {
  return hat_[index_of(id)];
}

std::map<std::string, GenusPolynomial> StratifiedMapDescriptor::hat_genera() const {
  std::map<std::string, GenusPolynomial> out;
  for (std::size_t i = 0; i < records_.size(); ++i) out.emplace(records_[i].id, hat_[i]);
  return out;
}

GenusPolynomial total_space_chi_c(const StratifiedMapDescriptor& d, EvalOptions options) {
  require_monodromy(d, options);
  const long n = static_cast<long>(d.strata().size());
  std::vector<GenusPolynomial> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = contribution(d, static_cast<std::size_t>(i));
  GenusPolynomial total;
  for (const auto& p : parts) total += p;
  return total;
}

GenusPolynomial total_space_chi_c_serial(const StratifiedMapDescriptor& d, EvalOptions options) {
  require_monodromy(d, options);
  GenusPolynomial total;
  for (std::size_t i = 0; i < d.strata().size(); ++i) total += contribution(d, i);
  return total;
}

GenusPolynomial total_space_chi(const StratifiedMapDescriptor& d, EvalOptions options) {
  if (d.kind() != GenusKind::projective) {
    throw ValidationError("the chi_y version of the stratified formula needs chi_y data of projective closures "
                          "and fibers");
  }
  return total_space_chi_c(d, options);
}

GenusPolynomial stalk_sum_chi(const StalkSumDescriptor& d) {
  GenusPolynomial total;
  for (const auto& s : d.strata) total += s.open_genus_c * chi_y_of_complex(s.stalk);
  return total;
}

}  // namespace hodge
