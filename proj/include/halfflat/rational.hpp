#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace halfflat {

// Exact arbitrary-precision scalars. mpq_class keeps values canonical
// (coprime numerator/denominator, positive denominator), which is exactly
// the invariant everything downstream relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational rational(long num, long den = 1);

// Exact integer square root; absent when n is negative or not a square.
std::optional<Integer> integer_sqrt_exact(const Integer& n);

// Exact nonnegative square root in Q; absent unless q is a perfect square.
std::optional<Rational> rational_sqrt_exact(const Rational& q);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

} // namespace halfflat
