#include "hodge/charclass/classes.hpp"

#include "hodge/error.hpp"

namespace hodge {

std::vector<CohomClass> power_sums(const BundleData& e) {
  const int top = e.ring()->top_degree();
  std::vector<CohomClass> p(static_cast<std::size_t>(top) + 1, CohomClass(e.ring()));
  for (int k = 1; k <= top; ++k) {
    CohomClass pk = e.c(k) * Rational(k % 2 ? k : -k);
    for (int i = 1; i < k; ++i) {
      CohomClass t = e.c(i) * p[static_cast<std::size_t>(k - i)];
      if (i % 2) {
        pk += t;
      } else {
        pk -= t;
      }
    }
    p[static_cast<std::size_t>(k)] = std::move(pk);
  }
  p.erase(p.begin());
  return p;
}

ClassPolynomial genus_from_series(const Series& q, const BundleData& e) {
  const RingPtr& ring = e.ring();
  const int top = ring->top_degree();
  if (q.empty() || !q[0].is_unit()) {
    throw ValidationError("multiplicative class needs a series whose constant term is a unit, got " +
                          (q.empty() ? std::string("0") : q[0].to_string()));
  }
  const YRational q0 = q[0];
  Series normalized;
  const YRational inv = q0.inverse();
  for (int k = 0; k <= top; ++k) {
    normalized.push_back(static_cast<std::size_t>(k) < q.size() ? q[static_cast<std::size_t>(k)] * inv : YRational(0));
  }
  const Series l = series_log(normalized, top);
  const auto p = power_sums(e);

  ClassPolynomial x(ring);
  for (int k = 1; k <= top; ++k) {
    const YRational& lk = l[static_cast<std::size_t>(k)];
    if (lk.is_zero()) continue;
    ClassPolynomial pk = lift(p[static_cast<std::size_t>(k) - 1]);
    pk *= lk;
    x += pk;
  }

  // exp(x); x is nilpotent of order top + 1.
  ClassPolynomial result = ClassPolynomial::scalar(ring, YRational(1));
  ClassPolynomial power = result;
  for (int m = 1; m <= top; ++m) {
    power = power * x;
    if (power.is_zero()) break;
    ClassPolynomial term = power;
    term *= YRational(Rational(1) / Rational(factorial(static_cast<unsigned>(m))));
    result += term;
  }

  YRational scale(1);
  for (int i = 0; i < e.rank(); ++i) scale *= q0;
  result *= scale;
  return result;
}

CohomClass chern_character(const BundleData& e) {
  const auto p = power_sums(e);
  CohomClass ch = e.ring()->one() * Rational(e.rank());
  for (std::size_t k = 1; k <= p.size(); ++k) {
    ch += p[k - 1] * Rational(Rational(1) / Rational(factorial(static_cast<unsigned>(k))));
  }
  return ch;
}

ClassPolynomial chern_character_scaled(const BundleData& e) {
  const auto p = power_sums(e);
  ClassPolynomial ch = ClassPolynomial::scalar(e.ring(), YRational(e.rank()));
  for (std::size_t k = 1; k <= p.size(); ++k) {
    ClassPolynomial t = lift(p[k - 1]);
    t *= YRational::one_plus_y_power(static_cast<int>(k)) *
         Rational(Rational(1) / Rational(factorial(static_cast<unsigned>(k))));
    ch += t;
  }
  return ch;
}

ClassPolynomial lambda_y_class(const BundleData& e) {
  // prod_j (1 + y e^{beta_j}) has constant term (1+y)^rank, which is exactly
  // what genus_from_series produces from the series 1 + y e^alpha.
  return genus_from_series(catalog_series(SeriesKind::lambda_y, e.ring()->top_degree()), e);
}

ClassPolynomial todd_class(const BundleData& e) {
  return genus_from_series(catalog_series(SeriesKind::todd, e.ring()->top_degree()), e);
}

ClassPolynomial hirzebruch_class(const BundleData& e, bool normalized) {
  const int top = e.ring()->top_degree();
  if (normalized) return genus_from_series(catalog_series(SeriesKind::hirzebruch_normalized, top), e);
  ClassPolynomial t = genus_from_series(catalog_series(SeriesKind::hirzebruch, top), e);
  if (t != todd_class(e) * lambda_y_class(dual(e))) {
    throw InconsistencyError("Hirzebruch class does not factor as td * ch(lambda_y(dual)) on " +
                             e.ring()->signature());
  }
  return t;
}

}  // namespace hodge
