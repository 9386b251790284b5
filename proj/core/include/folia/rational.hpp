#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace folia {

// Exact arithmetic throughout: arbitrary-precision rationals, always stored
// in lowest terms with a positive denominator (mpq_class keeps arithmetic
// results canonical; parsing canonicalizes explicitly).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
Rational rational_from_string(std::string_view text);

// "p" when the value is an integer, "p/q" otherwise.
std::string to_string(const Rational& r);

// Always "p/q", even for integers ("3" prints as "3/1").
std::string to_fraction_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace folia
