#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hodge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optionally signed decimal integer; throws ValidationError.
Integer parse_integer(std::string_view text);

/// Parses "a", "-a" or "a/b"; the result is canonical.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace hodge
