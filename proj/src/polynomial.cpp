#include "morsepoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace morsepoly {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
  Polynomial p = constant(1);
  for (const auto& r : roots) p = p * Polynomial({Rational(-r), Rational(1)});
  return p;
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Rational eval(const Polynomial& p, const Rational& x) {
  auto c = p.coefficients();
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double eval_approx(const Polynomial& p, double x) {
  auto c = p.coefficients();
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  auto c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<long>(i);
  return Polynomial(std::move(out));
}

Polynomial integrate_from_zero(const Polynomial& p) {
  auto c = p.coefficients();
  if (c.empty()) return {};
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i] / static_cast<long>(i + 1);
  return Polynomial(std::move(out));
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv = 1 / b.leading();
  auto bc = b.coefficients();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int delta = a.degree() - b.degree();
  return divide(a * pow(b.leading(), static_cast<unsigned>(delta + 1)), b).second;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return monic(p);
  return monic(divide(p, gcd(p, derivative(p))).first);
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  const Polynomial f = monic(p);
  const Polynomial df = derivative(f);
  Polynomial a = gcd(f, df);
  Polynomial b = divide(f, a).first;
  Polynomial c = divide(df, a).first;
  Polynomial d = c - derivative(b);
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    out.push_back(g);
    b = divide(b, g).first;
    c = divide(d, g).first;
    d = c - derivative(b);
  }
  return out;
}

Polynomial compose_affine(const Polynomial& p, const Rational& alpha, const Rational& beta) {
  const Polynomial lin({beta, alpha});
  Polynomial acc;
  auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + Polynomial::constant(*it);
  return acc;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences.
  std::vector<Rational> dd(ys.begin(), ys.end());
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rational den = xs[i] - xs[i - j];
      if (den == 0) throw std::domain_error("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  Polynomial acc;
  for (std::size_t i = n; i-- > 0;)
    acc = acc * Polynomial({Rational(-xs[i]), Rational(1)}) + Polynomial::constant(dd[i]);
  return acc;
}

std::string to_string(const Polynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto c = p.coefficients();
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& k = c[i];
    if (k == 0) continue;
    Rational mag = abs_value(k);
    if (first) {
      if (k < 0) os << "-";
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0 && mag != 1) os << "*";
    if (i >= 1) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace morsepoly
