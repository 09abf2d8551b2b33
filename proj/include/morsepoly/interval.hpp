#pragma once

#include <algorithm>

#include "morsepoly/polynomial.hpp"

namespace morsepoly {

// Closed interval with exact rational endpoints.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit Interval(const Rational& x) : lo(x), hi(x) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool inside_open(const Interval& o) const { return o.lo < lo && hi < o.hi; }
};

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline Interval operator*(const Rational& k, const Interval& a) {
  return k >= 0 ? Interval(k * a.lo, k * a.hi) : Interval(k * a.hi, k * a.lo);
}

inline Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Horner in interval arithmetic.
Interval eval(const Polynomial& p, const Interval& x);

// Centered form p(m) + p'(X)(X - m); tight when p' is small on X.
Interval eval_centered(const Polynomial& p, const Polynomial& dp, const Interval& x);

}  // namespace morsepoly
