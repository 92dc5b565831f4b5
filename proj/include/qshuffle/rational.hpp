#pragma once
#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qshuffle {

// Exact rational scalars. GMP keeps values canonical (lowest terms, positive
// denominator) through arithmetic, but values built from raw integer pairs or
// text must go through these helpers so they are canonicalized up front.
using Rational = mpq_class;

Rational rational(long num, long den = 1);

// Accepts "p" or "p/q" with an optional leading sign; rejects anything else,
// including q == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

Rational rational_pow(const Rational& base, unsigned exponent);
Rational binomial(unsigned n, unsigned k);

}  // namespace qshuffle
