#pragma once

#include <vector>

#include "morsepoly/polynomial.hpp"

namespace morsepoly {

// lower == upper means the root is exactly that rational. Otherwise the root
// lies in the open interval and the square-free part has nonzero, opposite
// signs at both ends.
struct IsolatedRoot {
  Rational lower;
  Rational upper;
  int multiplicity = 1;

  bool exact() const { return lower == upper; }
  Rational width() const { return upper - lower; }
  Rational midpoint() const { return (lower + upper) / 2; }
  double approx() const { return midpoint().get_d(); }
};

class SturmSequence {
 public:
  // p must be square-free and nonzero.
  explicit SturmSequence(const Polynomial& p);

  int variations_at(const Rational& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;
  // Distinct roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  int count_all() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }
  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

// 1 + max |a_i / a_n|
Rational cauchy_bound(const Polynomial& p);

// Distinct real roots, ascending, with multiplicities.
std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p);

int count_distinct_real_roots(const Polynomial& p);
int count_distinct_real_roots(const Polynomial& p, const Rational& a, const Rational& b);

// Shrinks r below width by bisection; throws std::logic_error if r does not isolate.
IsolatedRoot refine_root(const Polynomial& p, const IsolatedRoot& r, const Rational& width);

// Same, for a polynomial already known to be square-free (skips the gcd).
IsolatedRoot refine_root_squarefree(const Polynomial& f, const IsolatedRoot& r, const Rational& width);

// One bisection step; keeps the isolating invariant.
void bisect_once(const Polynomial& f, IsolatedRoot& r);

}  // namespace morsepoly
