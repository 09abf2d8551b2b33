#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace morsepoly {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", integers and decimals with optional exponent ("8.4", "-1e-12").
// Decimals are read exactly as fractions over powers of ten.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// n/d in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& q) { return sgn(q); }

inline double to_double(const Rational& q) { return q.get_d(); }

// Exact: every finite double is a dyadic rational.
Rational from_double(double x);

Rational abs_value(const Rational& q);

Rational pow(const Rational& q, unsigned e);

// Simplest fraction (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace morsepoly
