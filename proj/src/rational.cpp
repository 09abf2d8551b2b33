#include "morsepoly/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace morsepoly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view ex = s.substr(e + 1);
    bool eneg = false;
    if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
      eneg = ex.front() == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 6) bad(text);
    exponent = std::stol(std::string(ex));
    if (eneg) exponent = -exponent;
    s = s.substr(0, e);
  }

  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      bad(text);
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) bad(text);
    digits = std::string(s);
  }
  if (digits.empty()) digits = "0";

  Integer mantissa(digits, 10);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite double");
  return Rational(x);
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow(const Rational& q, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;
}

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  Rational lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  // Stern-Brocot descent via continued fractions, 0 < lo <= hi.
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational r = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  Rational out = fl + 1 / r;
  out.canonicalize();
  return out;
}

}  // namespace morsepoly
