#include "morsepoly/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace morsepoly {

namespace {

Rational rpow(const Rational& x, long e) {
  if (e >= 0) return pow(x, static_cast<unsigned>(e));
  return 1 / pow(x, static_cast<unsigned>(-e));
}

}  // namespace

// Subresultant pseudo-remainder sequence (Collins/Brown).
Rational resultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
  Polynomial a = p, b = q;
  Rational s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  if (b.degree() == 0) return s * pow(b.leading(), static_cast<unsigned>(a.degree()));
  Rational g = 1, h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = r * Rational(1 / (g * rpow(h, delta)));
    g = a.leading();
    h = rpow(h, 1 - delta) * rpow(g, delta);
    if (b.degree() == 0) {
      const long da = a.degree();
      h = rpow(h, 1 - da) * pow(b.leading(), static_cast<unsigned>(da));
      return s * h;
    }
  }
}

Rational discriminant(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2) throw std::domain_error("discriminant needs degree >= 2");
  Rational r = resultant(p, derivative(p)) / p.leading();
  return (n * (n - 1) / 2) % 2 == 0 ? r : Rational(-r);
}

}  // namespace morsepoly
