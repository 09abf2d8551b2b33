#pragma once

#include "morsepoly/polynomial.hpp"

namespace morsepoly {

// Sylvester-determinant convention: res(x - a, x - b) = a - b.
Rational resultant(const Polynomial& p, const Polynomial& q);

// (-1)^(n(n-1)/2) * res(p, p') / a_n, for degree >= 2.
Rational discriminant(const Polynomial& p);

}  // namespace morsepoly
