#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>

namespace goldentiles {

// Exact integers and rationals (GMP-backed). Rationals are kept canonical by
// the backend: gcd(num, den) == 1 and den > 0. Expression templates are off so
// these behave like plain value types inside generic code.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// Largest integer <= q.
Int floor_int(const Rational& q);

/// Parse "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
Rational parse_rational(const std::string& s);

/// Format as "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& q);

/// Exact integer square root test; fills *root (>= 0) on success.
bool is_perfect_square(const Int& n, Int* root = nullptr);

/// Exact rational square root: returns r >= 0 with r*r == q, when one exists.
std::optional<Rational> rational_sqrt(const Rational& q);

} // namespace goldentiles
