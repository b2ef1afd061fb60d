#pragma once

#include "hodge/polycore/y_rational.hpp"

#include <vector>

namespace hodge {

/// Truncated power series in alpha with coefficients in Q[y][1/(1+y)];
/// entry k is the coefficient of alpha^k.
using Series = std::vector<YRational>;

enum class SeriesKind {
  todd,                   // alpha / (1 - e^{-alpha})
  hirzebruch,             // alpha (1 + y e^{-alpha}) / (1 - e^{-alpha})
  hirzebruch_normalized,  // alpha (1+y) / (1 - e^{-alpha(1+y)}) - alpha y
  lambda_y,               // 1 + y e^{alpha}
  chern,                  // 1 + alpha
};

/// Catalog series up to alpha^degree. Results are cached; the cache is
/// guarded, so this may be called from several threads.
const Series& catalog_series(SeriesKind kind, int degree);

Series series_multiply(const Series& a, const Series& b, int degree);
/// Multiplicative inverse; the constant term must be a unit.
Series series_inverse(const Series& a, int degree);
/// log of a series with constant term 1.
Series series_log(const Series& a, int degree);
/// Q(alpha (1+y)) / (1+y)
Series rescaled_normalization(const Series& a);

}  // namespace hodge
