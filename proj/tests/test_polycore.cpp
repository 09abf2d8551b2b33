#include <doctest.h>

#include <map>
#include <random>

#include "morsepoly/polynomial.hpp"
#include "morsepoly/resultant.hpp"
#include "morsepoly/roots.hpp"
#include "oracles.hpp"

using namespace morsepoly;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

Polynomial cubic_q(const Rational& b, const Rational& c) { return Polynomial({c, b, 3, 1}); }

Rational dq(const Rational& b, const Rational& c) { return 54 * b * c - 108 * c - 4 * b * b * b + 9 * b * b - 27 * c * c; }

}  // namespace

TEST_CASE("parse_rational reads decimals exactly") {
  CHECK(Q("8.4") == Rational(42, 5));
  CHECK(Q("-0.5") == Rational(-1, 2));
  CHECK(Q("512/625") == Rational(512, 625));
  CHECK(Q("1e-12") == Rational(1, 1000000000000L));
  CHECK(Q("  7 ") == 7);
  CHECK(Q("2.5e1") == 25);
  CHECK_THROWS(Q("abc"));
  CHECK_THROWS(Q("1/0"));
  CHECK_THROWS(Q("1.2.3"));
}

TEST_CASE("simplest_between") {
  CHECK(simplest_between(Q("0.33"), Q("0.34")) == Rational(1, 3));
  CHECK(simplest_between(Q("2.7"), Q("2.8")) == Rational(11, 4));
  CHECK(simplest_between(Q("-0.34"), Q("-0.33")) == Rational(-1, 3));
  CHECK(simplest_between(Q("-1"), Q("1")) == 0);
  CHECK(simplest_between(Q("3"), Q("3")) == 3);
}

TEST_CASE("eval") {
  CHECK(eval(Polynomial({1, 0, 1}), 0) == 1);
  CHECK(eval(cubic_q(2, 0), -1) == 0);
  // dq as a polynomial in c at b = 3 vanishes at c = 1.
  Polynomial dq_c({Rational(-4 * 27 + 9 * 9), Rational(54 * 3 - 108), Rational(-27)});
  CHECK(eval(dq_c, 1) == 0);
  CHECK(eval_approx(Polynomial({1, 2, 3}), 2.0) == doctest::Approx(17.0));
}

TEST_CASE("derivative and integrate_from_zero") {
  CHECK(derivative(Polynomial::monomial(1, 5)) == Polynomial::monomial(5, 4));
  CHECK(derivative(Polynomial::constant(7)).is_zero());
  CHECK(integrate_from_zero(Polynomial::monomial(5, 4)) == Polynomial::monomial(1, 5));
  CHECK(integrate_from_zero(Polynomial{}).is_zero());

  const Rational b = Q("7/3"), c = Q("2/5");
  Polynomial p({0, 0, Rational(5 * c / 2), Rational(5 * b / 3), Rational(15, 4), 1});
  CHECK(derivative(p) == Polynomial({0, c, b, 3, 1}) * Rational(5));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> cs;
    for (int i = 0; i < 7; ++i) cs.push_back(oracle::random_rational(rng, -50, 50, 7));
    Polynomial q(cs);
    CHECK(derivative(integrate_from_zero(q)) == q);
    CHECK(eval(integrate_from_zero(q), 0) == 0);
  }
}

TEST_CASE("division, gcd and square-free decomposition") {
  std::vector<Rational> r{1, 1, 2, -3, -3, -3};
  Polynomial p = Polynomial::from_roots(r);
  auto [q, rem] = divide(p, Polynomial({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(squarefree_part(p) == Polynomial::from_roots(std::vector<Rational>{1, 2, -3}));
  auto f = squarefree_decomposition(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == Polynomial({-2, 1}));
  CHECK(f[1] == Polynomial({-1, 1}));
  CHECK(f[2] == Polynomial({3, 1}));
}

TEST_CASE("isolate_real_roots examples") {
  CHECK(isolate_real_roots(Polynomial({1, 0, 1})).empty());
  auto roots = isolate_real_roots(Polynomial::from_roots(std::vector<Rational>{0, -1, -2}));
  REQUIRE(roots.size() == 3);
  const int expected[] = {-2, -1, 0};
  for (int i = 0; i < 3; ++i) {
    CHECK(roots[i].multiplicity == 1);
    CHECK(roots[i].lower <= expected[i]);
    CHECK(roots[i].upper >= expected[i]);
  }
  CHECK_THROWS(isolate_real_roots(Polynomial{}));
}

TEST_CASE("isolate_real_roots recovers known factorizations") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> deg(1, 8), root(-6, 6), den(1, 3);
  for (int t = 0; t < 300; ++t) {
    std::vector<Rational> rs;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) rs.push_back(frac(root(rng), den(rng)));
    Polynomial p = Polynomial::from_roots(rs) * Rational(den(rng) * (t % 2 ? -1 : 1));
    std::map<Rational, int> mult;
    for (const auto& x : rs) ++mult[x];
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == mult.size());
    auto it = mult.begin();
    for (std::size_t i = 0; i < iso.size(); ++i, ++it) {
      CHECK(iso[i].lower <= it->first);
      CHECK(iso[i].upper >= it->first);
      CHECK(iso[i].multiplicity == it->second);
      if (i > 0) CHECK(iso[i - 1].upper <= iso[i].lower);
    }
  }
}

TEST_CASE("Sturm count matches companion-matrix eigenvalues") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-9, 9), deg(1, 6);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    int d = deg(rng);
    std::vector<Rational> cs;
    for (int i = 0; i < d; ++i) cs.emplace_back(coef(rng));
    int lead = coef(rng);
    cs.emplace_back(lead == 0 ? 1 : lead);
    Polynomial p(cs);
    // Multiple roots are removed exactly first; the eigenvalues of the
    // square-free part are then well separated unless nearly colliding.
    Polynomial f = squarefree_part(p);
    int sturm = count_distinct_real_roots(p);
    if (f.degree() <= 0) {
      CHECK(sturm == 0);
      ++checked;
      continue;
    }
    auto eig = oracle::companion_roots(f);
    bool ambiguous = false;
    int real = 0;
    for (std::size_t i = 0; i < eig.size(); ++i) {
      double im = std::abs(eig[i].imag());
      if (im > 1e-9 && im < 1e-4) ambiguous = true;
      if (im <= 1e-9) ++real;
      for (std::size_t j = i + 1; j < eig.size(); ++j)
        if (std::abs(eig[i] - eig[j]) < 1e-4) ambiguous = true;
    }
    if (!ambiguous) {
      CHECK(sturm == real);
      ++checked;
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("refine_root") {
  auto r = refine_root(Polynomial({-2, 0, 1}), IsolatedRoot{1, 2, 1}, Rational(1, 1000));
  CHECK(r.width() <= Rational(1, 1000));
  CHECK(r.lower * r.lower <= 2);
  CHECK(r.upper * r.upper >= 2);

  auto z = refine_root(Polynomial({0, 1, 1}), IsolatedRoot{Rational(-1, 2), Rational(1, 2), 1}, Rational(1, 8));
  CHECK(z.lower <= 0);
  CHECK(z.upper >= 0);

  CHECK_THROWS_AS(refine_root(Polynomial({-2, 0, 1}), IsolatedRoot{2, 3, 1}, Rational(1, 10)), std::logic_error);

  // Middle root of q at (b,c) = (2, 1/10) against the companion matrix.
  Polynomial q = cubic_q(2, Q("1/10"));
  auto iso = isolate_real_roots(q);
  REQUIRE(iso.size() == 3);
  auto mid = refine_root(q, iso[1], Q("1e-12"));
  auto eig = oracle::companion_real_roots(q);
  REQUIRE(eig.size() == 3);
  CHECK(std::abs(mid.approx() - eig[1]) < 1e-11);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  const Rational a = Q("3/7"), b = Q("-5/2");
  CHECK(resultant(Polynomial({-a, 1}), Polynomial({-b, 1})) == a - b);
  CHECK(oracle::sylvester_resultant(Polynomial({-a, 1}), Polynomial({-b, 1})) == a - b);

  Polynomial rep = Polynomial::from_roots(std::vector<Rational>{1, 1, 4});
  CHECK(resultant(rep, derivative(rep)) == 0);

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int t = 0; t < 200; ++t) {
    auto make = [&] {
      std::vector<Rational> cs;
      int d = deg(rng);
      for (int i = 0; i <= d; ++i) cs.push_back(oracle::random_rational(rng, -20, 20, 3));
      if (cs.back() == 0) cs.back() = 1;
      return Polynomial(cs);
    };
    Polynomial p = make(), q = make();
    CHECK(resultant(p, q) == oracle::sylvester_resultant(p, q));
  }
}

TEST_CASE("discriminant") {
  const Rational b = Q("-7/3"), c = Q("5/11");
  CHECK(discriminant(Polynomial({c, b, 1})) == b * b - 4 * c);
  CHECK_THROWS_AS(discriminant(Polynomial({1, 1})), std::domain_error);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    Rational bb = oracle::random_rational(rng, -300, 300, 97), cc = oracle::random_rational(rng, -300, 300, 89);
    CHECK(discriminant(cubic_q(bb, cc)) == dq(bb, cc));
  }
}
