#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "morsepoly/rational.hpp"

namespace morsepoly {

// Dense univariate polynomial over Q; coefficient i multiplies x^i.
// The leading stored coefficient is never zero, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& k);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Rational eval(const Polynomial& p, const Rational& x);
double eval_approx(const Polynomial& p, double x);
Polynomial derivative(const Polynomial& p);
Polynomial integrate_from_zero(const Polynomial& p);

// Scaled so the leading coefficient is 1. Zero stays zero.
Polynomial monic(const Polynomial& p);

// a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);

// lc(b)^(deg a - deg b + 1) * a = q*b + r; returns r.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial squarefree_part(const Polynomial& p);

// Yun: p = lc * prod f_i^i with f_i square-free, coprime, monic.
// Entry i-1 holds f_i (possibly the constant 1).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

// p(x) -> p(alpha*x + beta)
Polynomial compose_affine(const Polynomial& p, const Rational& alpha, const Rational& beta);

// Unique polynomial of degree < n through n points with distinct xs.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

std::string to_string(const Polynomial& p, char var = 'x');

}  // namespace morsepoly
