#include "hodge/verify/oracles.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace hodge::oracle {

GenusPolynomial dense_multiply(const GenusPolynomial& a, const GenusPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return GenusPolynomial();
  const int alo = *a.min_exponent(), ahi = *a.max_exponent();
  const int blo = *b.min_exponent(), bhi = *b.max_exponent();
  std::vector<Integer> av(static_cast<std::size_t>(ahi - alo + 1)), bv(static_cast<std::size_t>(bhi - blo + 1));
  for (int e = alo; e <= ahi; ++e) av[static_cast<std::size_t>(e - alo)] = a.coefficient(e);
  for (int e = blo; e <= bhi; ++e) bv[static_cast<std::size_t>(e - blo)] = b.coefficient(e);
  std::vector<Integer> out(av.size() + bv.size() - 1);
  for (std::size_t i = 0; i < av.size(); ++i) {
    for (std::size_t j = 0; j < bv.size(); ++j) out[i + j] += av[i] * bv[j];
  }
  GenusPolynomial r;
  for (std::size_t k = 0; k < out.size(); ++k) r += GenusPolynomial::monomial(out[k], alo + blo + static_cast<int>(k));
  return r;
}

EPolynomial dense_multiply(const EPolynomial& a, const EPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return EPolynomial();
  auto bounds = [](const EPolynomial& p) {
    int klo = 1 << 30, khi = -(1 << 30), llo = 1 << 30, lhi = -(1 << 30);
    for (const auto& [e, c] : p.terms()) {
      klo = std::min(klo, e.first);
      khi = std::max(khi, e.first);
      llo = std::min(llo, e.second);
      lhi = std::max(lhi, e.second);
    }
    return std::array<int, 4>{klo, khi, llo, lhi};
  };
  const auto ba = bounds(a), bb = bounds(b);
  const int klo = ba[0] + bb[0], khi = ba[1] + bb[1], llo = ba[2] + bb[2], lhi = ba[3] + bb[3];
  const std::size_t width = static_cast<std::size_t>(lhi - llo + 1);
  std::vector<Integer> grid(static_cast<std::size_t>(khi - klo + 1) * width);
  for (int k1 = ba[0]; k1 <= ba[1]; ++k1) {
    for (int l1 = ba[2]; l1 <= ba[3]; ++l1) {
      Integer c1 = a.coefficient(k1, l1);
      if (c1 == 0) continue;
      for (int k2 = bb[0]; k2 <= bb[1]; ++k2) {
        for (int l2 = bb[2]; l2 <= bb[3]; ++l2) {
          Integer c2 = b.coefficient(k2, l2);
          if (c2 == 0) continue;
          grid[static_cast<std::size_t>(k1 + k2 - klo) * width + static_cast<std::size_t>(l1 + l2 - llo)] += c1 * c2;
        }
      }
    }
  }
  EPolynomial r;
  for (int k = klo; k <= khi; ++k) {
    for (int l = llo; l <= lhi; ++l) {
      r += EPolynomial::monomial(grid[static_cast<std::size_t>(k - klo) * width + static_cast<std::size_t>(l - llo)], k, l);
    }
  }
  return r;
}

GenusPolynomial diamond_chi_y(const std::map<std::pair<int, int>, long>& hpq) {
  GenusPolynomial g;
  for (const auto& [pq, h] : hpq) {
    g += GenusPolynomial::monomial(pq.second % 2 ? -h : h, pq.first);
  }
  return g;
}

GenusPolynomial chi_y_proj_space(int n) {
  GenusPolynomial g;
  for (int k = 0; k <= n; ++k) g += GenusPolynomial::monomial(k % 2 ? -1 : 1, k);
  return g;
}

GenusPolynomial additive_strata_sum(const std::vector<GenusPolynomial>& open_genera,
                                    const std::vector<GenusPolynomial>& fiber_genera) {
  GenusPolynomial total;
  for (std::size_t i = 0; i < open_genera.size(); ++i) total += dense_multiply(open_genera[i], fiber_genera[i]);
  return total;
}

std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return b;
}

std::vector<Rational> todd_series(int degree) {
  // alpha / (1 - e^{-alpha}) = sum_n (-1)^n B_n alpha^n / n!
  auto b = bernoulli(degree);
  std::vector<Rational> out;
  for (int n = 0; n <= degree; ++n) {
    Rational c = b[static_cast<std::size_t>(n)] / Rational(factorial(static_cast<unsigned>(n)));
    out.push_back(n % 2 ? Rational(-c) : c);
  }
  return out;
}

std::vector<Rational> l_tilde_series(int degree) {
  // alpha coth(alpha / 2) = 2 sum_k B_{2k} alpha^{2k} / (2k)!
  auto b = bernoulli(degree);
  std::vector<Rational> out(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (int n = 0; n <= degree; n += 2) {
    out[static_cast<std::size_t>(n)] = 2 * b[static_cast<std::size_t>(n)] / Rational(factorial(static_cast<unsigned>(n)));
  }
  return out;
}

namespace {

template <class Coef>
Element<Coef> evaluate_series(const CohomClass& root, const std::vector<Coef>& q) {
  Element<Coef> acc(root.ring());
  CohomClass power = root.ring()->one();
  for (std::size_t k = 0; k < q.size() && !power.is_zero(); ++k) {
    Element<Coef> term(root.ring());
    for (const auto& [i, c] : power.terms()) term += Element<Coef>::basis(root.ring(), i, Coef(c) * q[k]);
    acc += term;
    power = power * root;
  }
  return acc;
}

}  // namespace

CohomClass root_product(const std::vector<CohomClass>& roots, const std::vector<Rational>& q) {
  if (roots.empty()) throw std::invalid_argument("root_product needs at least one root");
  CohomClass out = roots.front().ring()->one();
  for (const auto& r : roots) out = out * evaluate_series(r, q);
  return out;
}

ClassPolynomial root_product(const std::vector<CohomClass>& roots, const std::vector<YRational>& q) {
  if (roots.empty()) throw std::invalid_argument("root_product needs at least one root");
  ClassPolynomial out = ClassPolynomial::scalar(roots.front().ring(), YRational(1));
  for (const auto& r : roots) out = out * evaluate_series(r, q);
  return out;
}

CohomClass root_chern_character(const std::vector<CohomClass>& roots) {
  if (roots.empty()) throw std::invalid_argument("root_chern_character needs at least one root");
  const int top = roots.front().ring()->top_degree();
  std::vector<Rational> exp;
  for (int k = 0; k <= top; ++k) exp.push_back(Rational(1) / Rational(factorial(static_cast<unsigned>(k))));
  CohomClass out(roots.front().ring());
  for (const auto& r : roots) out += evaluate_series(r, exp);
  return out;
}

std::pair<long, long> cech_dims_p1(long d) {
  // Cover by U0, U1 with coordinate ring C[t], C[1/t], intersection C[t, 1/t].
  // Sections of O(d) on U0 are t^a (a >= 0) and on U1 are t^a (a <= d).
  // H^0 counts monomials in both; H^1 counts monomials of C[t, 1/t] in
  // neither (a < 0 and a > d).
  long h0 = 0, h1 = 0;
  const long span = std::abs(d) + 2;
  for (long a = -span; a <= span; ++a) {
    const bool in0 = a >= 0, in1 = a <= d;
    if (in0 && in1) ++h0;
    if (!in0 && !in1) ++h1;
  }
  return {h0, h1};
}

long cell_count(const RingPtr& ring) { return static_cast<long>(ring->size()); }

long classical_riemann_hurwitz(long chi_base, long chi_fiber, const std::vector<long>& special_fiber_euler) {
  long total = chi_base * chi_fiber;
  for (long e : special_fiber_euler) total += e - chi_fiber;
  return total;
}

}  // namespace hodge::oracle
