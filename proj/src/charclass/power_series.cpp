#include "hodge/charclass/power_series.hpp"

#include "hodge/error.hpp"
#include "hodge/polycore/integer.hpp"

#include <map>
#include <mutex>

namespace hodge {

namespace {

// e^{s alpha} up to alpha^degree, for a rational s.
Series exponential(const Rational& s, int degree) {
  Series out;
  Rational term = 1;
  for (int k = 0; k <= degree; ++k) {
    out.emplace_back(term);
    term *= s;
    term /= (k + 1);
  }
  return out;
}

// (1 - e^{-alpha}) / alpha = sum_k (-1)^k alpha^k / (k+1)!
Series todd_denominator(int degree) {
  Series out;
  for (int k = 0; k <= degree; ++k) {
    Rational c(1, 1);
    c /= Rational(factorial(static_cast<unsigned>(k + 1)));
    out.emplace_back(k % 2 ? Rational(-c) : c);
  }
  return out;
}

Series build(SeriesKind kind, int degree) {
  const YRational y = YRational::y();
  switch (kind) {
    case SeriesKind::todd:
      return series_inverse(todd_denominator(degree), degree);
    case SeriesKind::hirzebruch: {
      Series twist = exponential(-1, degree);  // 1 + y e^{-alpha}
      for (auto& c : twist) c *= y;
      twist[0] += YRational(1);
      return series_multiply(catalog_series(SeriesKind::todd, degree), twist, degree);
    }
    case SeriesKind::hirzebruch_normalized: {
      // Coefficient k is todd_k (1+y)^k, except that the linear term loses y.
      const Series& td = catalog_series(SeriesKind::todd, degree);
      Series out;
      for (int k = 0; k <= degree; ++k) out.push_back(td[static_cast<std::size_t>(k)] * YRational::one_plus_y_power(k));
      if (degree >= 1) out[1] -= y;
      return out;
    }
    case SeriesKind::lambda_y: {
      Series out = exponential(1, degree);
      for (auto& c : out) c *= y;
      out[0] += YRational(1);
      return out;
    }
    case SeriesKind::chern: {
      Series out(static_cast<std::size_t>(degree) + 1, YRational(0));
      out[0] = 1;
      if (degree >= 1) out[1] = 1;
      return out;
    }
  }
  return {};
}

}  // namespace

Series series_multiply(const Series& a, const Series& b, int degree) {
  Series out(static_cast<std::size_t>(degree) + 1, YRational(0));
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(degree); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(degree); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series series_inverse(const Series& a, int degree) {
  if (a.empty() || !a[0].is_unit()) throw ValidationError("series constant term is not a unit");
  const YRational inv0 = a[0].inverse();
  Series out(static_cast<std::size_t>(degree) + 1, YRational(0));
  out[0] = inv0;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(degree); ++k) {
    YRational acc;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc += a[i] * out[k - i];
    out[k] = -(acc * inv0);
  }
  return out;
}

Series series_log(const Series& a, int degree) {
  if (a.empty() || !(a[0] == YRational(1))) throw ValidationError("log needs a series with constant term 1");
  // log(1+u) = sum_m (-1)^{m+1} u^m / m; u has no constant term so m <= degree.
  Series u = a;
  u.resize(static_cast<std::size_t>(degree) + 1, YRational(0));
  u[0] = 0;
  Series out(static_cast<std::size_t>(degree) + 1, YRational(0));
  Series power = u;
  for (int m = 1; m <= degree; ++m) {
    Rational w(m % 2 ? 1 : -1, m);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += power[k] * w;
    power = series_multiply(power, u, degree);
  }
  return out;
}

Series rescaled_normalization(const Series& a) {
  Series out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    out.push_back(a[k] * YRational::one_plus_y_power(static_cast<int>(k) - 1));
  }
  return out;
}

const Series& catalog_series(SeriesKind kind, int degree) {
  static std::recursive_mutex mutex;
  static std::map<std::pair<int, int>, Series> cache;
  std::lock_guard lock(mutex);
  const auto key = std::pair{static_cast<int>(kind), degree};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Series s = build(kind, degree);
  return cache.emplace(key, std::move(s)).first->second;
}

}  // namespace hodge
