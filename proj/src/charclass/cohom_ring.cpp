#include "hodge/charclass/cohom_ring.hpp"

#include "hodge/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hodge {

namespace {

constexpr int kDefaultMaxDegree = 16;
constexpr std::size_t kMaxBasisSize = 1024;

int max_degree_cap() {
  const char* env = std::getenv("HODGE_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return kDefaultMaxDegree;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw ValidationError(std::string("HODGE_MAX_DEGREE is not a nonnegative integer: ") + env);
  return static_cast<int>(v);
}

void check_basis_size(std::size_t n) {
  if (n > kMaxBasisSize) {
    throw ValidationError("ring basis of size " + std::to_string(n) + " exceeds the supported " +
                          std::to_string(kMaxBasisSize));
  }
}

// Appends suffix to every generator symbol of a monomial name: "h^2*a" with
// suffix "1" becomes "h1^2*a1".
std::string rename_monomial(const std::string& name, const std::string& suffix) {
  if (name == "1") return name;
  std::string out;
  std::stringstream ss(name);
  std::string token;
  while (std::getline(ss, token, '*')) {
    if (!out.empty()) out += '*';
    auto caret = token.find('^');
    if (caret == std::string::npos) {
      out += token + suffix;
    } else {
      out += token.substr(0, caret) + suffix + token.substr(caret);
    }
  }
  return out;
}

std::string join_monomials(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p == "1") continue;
    if (!out.empty()) out += '*';
    out += p;
  }
  return out.empty() ? "1" : out;
}

std::string xi_name(const std::string& base, int k, const std::string& xi) {
  if (k == 0) return base;
  std::string x = k == 1 ? xi : xi + "^" + std::to_string(k);
  return base == "1" ? x : base + "*" + x;
}

}  // namespace

void CohomRing::check_degree_cap(int top_degree) {
  int cap = max_degree_cap();
  if (top_degree > cap) {
    throw ValidationError("ring of top degree " + std::to_string(top_degree) + " exceeds HODGE_MAX_DEGREE = " +
                          std::to_string(cap));
  }
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->signature() == b->signature();
}

RingPtr CohomRing::point() {
  std::shared_ptr<CohomRing> r(new CohomRing());
  r->kind_ = Kind::point;
  r->basis_ = {{"1", 0}};
  r->table_ = {{{0, Rational(1)}}};
  r->coords_ = {{0}};
  r->signature_ = "pt";
  return r;
}

RingPtr CohomRing::proj_space(int n) {
  if (n < 0) throw ValidationError("projective space of negative dimension");
  check_degree_cap(n);
  std::shared_ptr<CohomRing> r(new CohomRing());
  r->kind_ = Kind::proj_space;
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  for (int k = 0; k <= n; ++k) {
    r->basis_.push_back({k == 0 ? "1" : (k == 1 ? "h" : "h^" + std::to_string(k)), k});
    r->coords_.push_back({static_cast<std::size_t>(k)});
  }
  r->table_.assign(size * size, {});
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (a + b < size) r->table_[a * size + b] = {{a + b, Rational(1)}};
    }
  }
  r->top_ = size - 1;
  r->top_degree_ = n;
  if (n >= 1) {
    r->generator_names_ = {"h"};
    r->generator_index_ = {1};
  }
  r->signature_ = "P" + std::to_string(n);
  return r;
}

RingPtr CohomRing::product(std::vector<RingPtr> factors) {
  if (factors.empty()) return point();
  int top_degree = 0;
  std::size_t size = 1;
  for (const auto& f : factors) {
    top_degree += f->top_degree();
    size *= f->size();
    check_basis_size(size);
  }
  check_degree_cap(top_degree);

  std::shared_ptr<CohomRing> r(new CohomRing());
  r->kind_ = Kind::product;
  const std::size_t m = factors.size();
  // Mixed radix with the last factor varying fastest.
  std::vector<std::size_t> stride(m, 1);
  for (std::size_t k = m - 1; k-- > 0;) stride[k] = stride[k + 1] * factors[k + 1]->size();
  auto index_of_coords = [&](const std::vector<std::size_t>& c) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < m; ++k) idx += c[k] * stride[k];
    return idx;
  };

  r->basis_.resize(size);
  r->coords_.resize(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::vector<std::size_t> c(m);
    std::vector<std::string> names;
    int degree = 0;
    for (std::size_t k = 0; k < m; ++k) {
      c[k] = (idx / stride[k]) % factors[k]->size();
      const auto& b = factors[k]->basis(c[k]);
      names.push_back(rename_monomial(b.name, std::to_string(k + 1)));
      degree += b.degree;
    }
    r->basis_[idx] = {join_monomials(names), degree};
    r->coords_[idx] = std::move(c);
  }

  r->table_.assign(size * size, {});
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      // Cartesian product of the factorwise expansions.
      std::vector<std::pair<std::vector<std::size_t>, Rational>> acc{{{}, Rational(1)}};
      for (std::size_t k = 0; k < m && !acc.empty(); ++k) {
        const auto& p = factors[k]->product(r->coords_[i][k], r->coords_[j][k]);
        std::vector<std::pair<std::vector<std::size_t>, Rational>> next;
        for (const auto& [partial, coef] : acc) {
          for (const auto& [t, s] : p) {
            auto c = partial;
            c.push_back(t);
            next.emplace_back(std::move(c), coef * s);
          }
        }
        acc = std::move(next);
      }
      std::map<std::size_t, Rational> merged;
      for (const auto& [c, coef] : acc) merged[index_of_coords(c)] += coef;
      auto& cell = r->table_[i * size + j];
      for (auto& [t, coef] : merged) {
        if (coef != 0) cell.emplace_back(t, coef);
      }
    }
  }

  std::vector<std::size_t> top(m);
  for (std::size_t k = 0; k < m; ++k) top[k] = factors[k]->top_index();
  r->top_ = index_of_coords(top);
  r->top_degree_ = top_degree;

  std::string sig = "product(";
  for (std::size_t k = 0; k < m; ++k) {
    const auto& f = factors[k];
    for (std::size_t g = 0; g < f->generator_names().size(); ++g) {
      r->generator_names_.push_back(rename_monomial(f->generator_names()[g], std::to_string(k + 1)));
      std::vector<std::size_t> c(m, 0);
      c[k] = f->generator_index_[g];
      r->generator_index_.push_back(index_of_coords(c));
    }
    sig += (k ? "," : "") + f->signature();
  }
  r->signature_ = sig + ")";
  r->factors_ = std::move(factors);
  return r;
}

RingPtr CohomRing::proj_bundle(RingPtr base, int rank, std::vector<CohomClass> chern) {
  if (rank < 1) throw ValidationError("projective bundle needs a vector bundle of rank >= 1");
  const int top_degree = base->top_degree() + rank - 1;
  check_degree_cap(top_degree);
  const std::size_t bsize = base->size();
  const std::size_t r = static_cast<std::size_t>(rank);
  check_basis_size(bsize * r);

  // c_1 .. c_r over the base, padded with zeros.
  std::vector<CohomClass> c(r + 1, CohomClass(base));
  c[0] = base->one();
  for (std::size_t i = 0; i < chern.size(); ++i) {
    if (chern[i].ring() && !same_ring(chern[i].ring(), base)) {
      throw ValidationError("Chern class c" + std::to_string(i + 1) + " does not live on the base ring");
    }
    if (!chern[i].is_homogeneous(static_cast<int>(i + 1))) {
      throw ValidationError("Chern class c" + std::to_string(i + 1) + " is not of degree " + std::to_string(i + 1));
    }
    if (i + 1 > r) {
      if (!chern[i].is_zero()) {
        throw ValidationError("Chern class c" + std::to_string(i + 1) + " is nonzero above the rank " +
                              std::to_string(rank));
      }
      continue;
    }
    c[i + 1] = CohomClass(base, chern[i].terms());
  }

  // xi^m written as sum_{k<r} e[m][k] xi^k, for m <= 2r - 2.
  std::vector<std::vector<CohomClass>> xipow(2 * r - 1, std::vector<CohomClass>(r, CohomClass(base)));
  for (std::size_t m = 0; m < 2 * r - 1; ++m) {
    if (m < r) {
      xipow[m][m] = base->one();
      continue;
    }
    const auto& prev = xipow[m - 1];
    auto& cur = xipow[m];
    for (std::size_t k = 0; k + 1 < r; ++k) cur[k + 1] += prev[k];
    for (std::size_t i = 1; i <= r; ++i) cur[r - i] -= prev[r - 1] * c[i];
  }

  std::shared_ptr<CohomRing> out(new CohomRing());
  out->kind_ = Kind::proj_bundle;
  const std::size_t size = bsize * r;
  std::string xi = "xi";
  {
    int n = 1;
    auto taken = [&](const std::string& s) {
      return std::find(base->generator_names().begin(), base->generator_names().end(), s) !=
             base->generator_names().end();
    };
    while (taken(xi)) xi = "xi" + std::to_string(++n);
  }
  out->basis_.resize(size);
  out->coords_.resize(size);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < bsize; ++j) {
      const std::size_t idx = k * bsize + j;
      out->basis_[idx] = {xi_name(base->basis(j).name, static_cast<int>(k), xi),
                          base->basis(j).degree + static_cast<int>(k)};
      out->coords_[idx] = {j, k};
    }
  }
  out->table_.assign(size * size, {});
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t jj = 0; jj < size; ++jj) {
      const auto bi = out->coords_[i][0], ki = out->coords_[i][1];
      const auto bj = out->coords_[jj][0], kj = out->coords_[jj][1];
      CohomClass bb(base, {});
      for (const auto& [t, s] : base->product(bi, bj)) bb += CohomClass::basis(base, t, s);
      if (bb.is_zero()) continue;
      std::map<std::size_t, Rational> merged;
      for (std::size_t k = 0; k < r; ++k) {
        const auto& e = xipow[ki + kj][k];
        if (e.is_zero()) continue;
        const CohomClass prod = bb * e;
        for (const auto& [t, s] : prod.terms()) merged[k * bsize + t] += s;
      }
      auto& cell = out->table_[i * size + jj];
      for (auto& [t, s] : merged) {
        if (s != 0) cell.emplace_back(t, s);
      }
    }
  }
  out->top_ = (r - 1) * bsize + base->top_index();
  out->top_degree_ = top_degree;
  out->generator_names_ = base->generator_names();
  out->generator_index_ = base->generator_index_;
  if (r >= 2) {
    out->generator_names_.push_back(xi);
    out->generator_index_.push_back(bsize);
  }

  std::string sig = "projbundle(" + base->signature() + ";rank " + std::to_string(rank);
  for (std::size_t i = 1; i <= r; ++i) sig += ";c" + std::to_string(i) + "=" + to_string(c[i]);
  out->signature_ = sig + ")";
  out->base_ = std::move(base);
  out->bundle_rank_ = rank;
  out->bundle_chern_.assign(c.begin() + 1, c.end());
  return out;
}

RingPtr CohomRing::custom(const CustomRingSpec& spec) {
  std::shared_ptr<CohomRing> r(new CohomRing());
  r->kind_ = Kind::custom;
  r->basis_.push_back({"1", 0});
  for (const auto& b : spec.basis) {
    if (b.name == "1") {
      if (b.degree != 0) throw ValidationError("the unit '1' must have degree 0");
      continue;
    }
    if (b.degree < 0) throw ValidationError("basis element '" + b.name + "' has negative degree");
    for (const auto& existing : r->basis_) {
      if (existing.name == b.name) throw ValidationError("basis element '" + b.name + "' is declared twice");
    }
    r->basis_.push_back(b);
  }
  const std::size_t size = r->basis_.size();
  check_basis_size(size);
  for (std::size_t i = 0; i < size; ++i) r->coords_.push_back({i});

  auto lookup = [&](const std::string& name) {
    auto idx = r->index_of(name);
    if (!idx) throw ValidationError("unknown basis element '" + name + "' in custom ring");
    return *idx;
  };

  r->table_.assign(size * size, {});
  std::vector<bool> given(size * size, false);
  for (std::size_t i = 0; i < size; ++i) {
    r->table_[i] = {{i, Rational(1)}};
    r->table_[i * size] = {{i, Rational(1)}};
    given[i] = given[i * size] = true;
  }
  for (const auto& [a, b, rhs] : spec.products) {
    const std::size_t ia = lookup(a), ib = lookup(b);
    const int degree = r->basis_[ia].degree + r->basis_[ib].degree;
    std::map<std::size_t, Rational> merged;
    for (const auto& [name, coef] : rhs) {
      const std::size_t t = lookup(name);
      if (coef != 0 && r->basis_[t].degree != degree) {
        throw ValidationError("product " + a + "*" + b + " must have degree " + std::to_string(degree) + " but '" +
                              name + "' has degree " + std::to_string(r->basis_[t].degree));
      }
      merged[t] += coef;
    }
    Product cell;
    for (auto& [t, s] : merged) {
      if (s != 0) cell.emplace_back(t, s);
    }
    for (auto [x, y] : {std::pair{ia, ib}, std::pair{ib, ia}}) {
      const std::size_t slot = x * size + y;
      if (given[slot] && r->table_[slot] != cell) {
        throw ValidationError("conflicting values for the product " + a + "*" + b);
      }
      r->table_[slot] = cell;
      given[slot] = true;
    }
  }

  auto top = r->index_of(spec.top);
  if (!top) throw ValidationError("top class '" + spec.top + "' is not a basis element");
  r->top_ = *top;
  r->top_degree_ = r->basis_[*top].degree;
  for (const auto& b : r->basis_) {
    if (b.degree > r->top_degree_) {
      throw ValidationError("basis element '" + b.name + "' lies above the top class '" + spec.top + "'");
    }
  }
  check_degree_cap(r->top_degree_);

  for (std::size_t i = 1; i < size; ++i) {
    r->generator_names_.push_back(r->basis_[i].name);
    r->generator_index_.push_back(i);
  }
  RingPtr ring = r;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t k = 0; k < size; ++k) {
        auto ei = CohomClass::basis(ring, i), ej = CohomClass::basis(ring, j), ek = CohomClass::basis(ring, k);
        if ((ei * ej) * ek != ei * (ej * ek)) {
          throw ValidationError("custom ring is not associative: (" + r->basis_[i].name + "*" + r->basis_[j].name +
                                ")*" + r->basis_[k].name + " differs from " + r->basis_[i].name + "*(" +
                                r->basis_[j].name + "*" + r->basis_[k].name + ")");
        }
      }
    }
  }

  std::string sig = "custom{";
  for (std::size_t i = 0; i < size; ++i) sig += r->basis_[i].name + ":" + std::to_string(r->basis_[i].degree) + ";";
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      if (r->table_[i * size + j].empty()) continue;
      sig += r->basis_[i].name + "*" + r->basis_[j].name + "=" +
             to_string(CohomClass(ring, [&] {
               CohomClass::Terms t;
               for (const auto& [k, s] : r->table_[i * size + j]) t[k] = s;
               return t;
             }())) +
             ";";
    }
  }
  r->signature_ = sig + "top " + spec.top + "}";
  return ring;
}

std::optional<std::size_t> CohomRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name == name) return i;
  }
  return std::nullopt;
}

CohomClass CohomRing::generator(const std::string& name) const {
  for (std::size_t g = 0; g < generator_names_.size(); ++g) {
    if (generator_names_[g] == name) return CohomClass::basis(shared_from_this(), generator_index_[g]);
  }
  if (kind_ == Kind::proj_bundle && bundle_rank_ == 1 && name == "xi") return xi();
  throw ValidationError("ring " + signature_ + " has no generator '" + name + "'");
}

CohomClass CohomRing::one() const { return CohomClass::basis(shared_from_this(), 0); }
CohomClass CohomRing::top_class() const { return CohomClass::basis(shared_from_this(), top_); }

std::vector<long> CohomRing::betti() const {
  std::vector<long> b(static_cast<std::size_t>(top_degree_) + 1, 0);
  for (const auto& e : basis_) ++b[static_cast<std::size_t>(e.degree)];
  return b;
}

CohomClass CohomRing::pullback_from_factor(std::size_t i, const CohomClass& c) const {
  if (kind_ != Kind::product || i >= factors_.size()) throw ValidationError("not a factor of " + signature_);
  if (!same_ring(c.ring(), factors_[i]) && !c.is_zero()) {
    throw ValidationError("class does not live on factor " + std::to_string(i + 1) + " of " + signature_);
  }
  std::size_t stride = 1;
  for (std::size_t k = i + 1; k < factors_.size(); ++k) stride *= factors_[k]->size();
  CohomClass::Terms t;
  for (const auto& [idx, coef] : c.terms()) t[idx * stride] = coef;
  return CohomClass(shared_from_this(), std::move(t));
}

CohomClass CohomRing::pullback_from_base(const CohomClass& c) const {
  if (kind_ != Kind::proj_bundle) throw ValidationError(signature_ + " is not a projective bundle");
  if (!same_ring(c.ring(), base_) && !c.is_zero()) throw ValidationError("class does not live on the base ring");
  return CohomClass(shared_from_this(), c.terms());
}

CohomClass CohomRing::xi() const {
  if (kind_ != Kind::proj_bundle) throw ValidationError(signature_ + " is not a projective bundle");
  if (bundle_rank_ == 1) return -pullback_from_base(bundle_chern_[0]);
  return CohomClass::basis(shared_from_this(), base_->size());
}

ClassPolynomial lift(const CohomClass& c) {
  ClassPolynomial::Terms t;
  for (const auto& [i, coef] : c.terms()) t.emplace(i, YRational(coef));
  return ClassPolynomial(c.ring(), std::move(t));
}

CohomClass evaluate_at(const ClassPolynomial& c, const Rational& y) {
  CohomClass::Terms t;
  for (const auto& [i, coef] : c.terms()) t.emplace(i, coef.evaluate(y));
  return CohomClass(c.ring(), std::move(t));
}

CohomClass y_coefficient(const ClassPolynomial& c, int k) {
  CohomClass::Terms t;
  for (const auto& [i, coef] : c.terms()) {
    if (!coef.is_polynomial()) throw InconsistencyError("class has a (1+y) denominator: " + coef.to_string());
    t.emplace(i, coef.numerator().coefficient(static_cast<std::size_t>(k)));
  }
  return CohomClass(c.ring(), std::move(t));
}

namespace {

template <class Coef, class Render>
std::string render(const Element<Coef>& c, Render coef_text) {
  if (c.is_zero()) return "0";
  std::vector<std::size_t> order;
  for (const auto& kv : c.terms()) order.push_back(kv.first);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c.ring()->basis(a).degree < c.ring()->basis(b).degree;
  });
  std::string out;
  for (std::size_t i : order) {
    const std::string& name = c.ring()->basis(i).name;
    auto [negative, text] = coef_text(c.terms().at(i), name == "1");
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (name == "1") {
      out += text;
    } else if (text == "1") {
      out += name;
    } else {
      out += text + "*" + name;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const CohomClass& c) {
  return render(c, [](const Rational& q, bool) { return std::pair{q < 0, Rational(abs(q)).get_str()}; });
}

std::string to_string(const ClassPolynomial& c) {
  return render(c, [](const YRational& q, bool) {
    const auto& coeffs = q.numerator().coefficients();
    int nonzero = 0;
    for (const auto& x : coeffs) nonzero += x != 0;
    if (q.is_polynomial() && nonzero == 1 && coeffs.size() == 1) {
      return std::pair{coeffs[0] < 0, Rational(abs(coeffs[0])).get_str()};
    }
    return std::pair{false, "(" + q.to_string() + ")"};
  });
}

}  // namespace hodge
