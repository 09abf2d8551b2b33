#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "morsepoly/strata5.hpp"
#include "oracles.hpp"

using namespace morsepoly;

namespace {

double distance_to(const std::vector<Polyline>& lines, const std::string& tag, double b, double c) {
  double best = 1e9;
  for (const auto& l : lines)
    if (l.tag == tag)
      for (auto [x, y] : l.points) best = std::min(best, std::hypot(x - b, y - c));
  return best;
}

// Critical values of p5 at double (b, c), ascending critical points.
std::vector<long double> critical_values(long double b, long double c) {
  // Roots of q by the companion matrix, refined by Newton in long double.
  Eigen::Matrix3d m;
  m << 0, 0, -static_cast<double>(c), 1, 0, -static_cast<double>(b), 0, 1, -3;
  Eigen::EigenSolver<Eigen::Matrix3d> es(m, false);
  std::vector<long double> xs{0.0L};
  for (int i = 0; i < 3; ++i) {
    long double x = es.eigenvalues()[i].real();
    for (int k = 0; k < 8; ++k) x -= (((x + 3) * x + b) * x + c) / ((3 * x + 6) * x + b);
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<long double> v;
  for (long double x : xs)
    v.push_back(((((x * x * x * x * x) + 3.75L * x * x * x * x) + (5 * b / 3) * x * x * x) + 2.5L * c * x * x));
  return v;
}

}  // namespace

TEST_CASE("stratifying polynomials at landmarks") {
  CHECK(invariants5({3, 1}).dq == 0);
  auto e = invariants5({frac(45, 16), frac(25, 32)});
  CHECK(e.dq == 0);
  CHECK(e.h == 0);
  CHECK(invariants5({frac(135, 64), 0}).g == 0);
  CHECK(invariants5({frac(135, 64), 0}).h == 0);  // both curves meet at D
  CHECK(dq5(frac(9, 4), Rational(0)) == 0);
}

TEST_CASE("calibration points carry their region's passport") {
  for (auto [r, pt] : calibration_points5()) {
    CHECK(passport(p5(pt)) == PassportOutcome(Snake{region_passport(r)}));
    Stratum5 s = classify5(pt);
    CHECK(s.kind == Stratum5::Kind::Region);
    CHECK(s.region == r);
  }
}

TEST_CASE("classify5 edge cases") {
  CHECK(classify5({3, frac(1, 2)}).kind == Stratum5::Kind::Outside);
  CHECK(classify5({frac(135, 64), 0}).kind == Stratum5::Kind::Outside);
  CHECK(classify5({0, frac(1, 2)}).kind == Stratum5::Kind::Outside);
  CHECK(classify5({3, 1}).kind == Stratum5::Kind::Outside);
  CHECK(classify5({frac(45, 16), frac(25, 32)}).kind == Stratum5::Kind::Outside);
}

TEST_CASE("landmarks") {
  auto lm = landmarks5();
  REQUIRE(lm.size() == 6);
  CHECK(lm[1].name == "A");
  CHECK(dq5(lm[1].b, lm[1].c) == 0);
  CHECK(h5(lm[4].b, lm[4].c) == 0);
  const auto& f = lm[5];
  CHECK(f.b_box.width() <= frac(1, 100000000));
  CHECK(f.c_box.width() <= frac(1, 100000000));
  const double b = f.b.get_d(), c = f.c.get_d();
  // Terms reach ~1.5e4, so double evaluation alone carries ~3e-12 of rounding.
  CHECK(abs_value(g5(f.b, f.c)) < frac(1, 1000000000000L));
  CHECK(abs_value(h5(f.b, f.c)) < frac(1, 1000000000000L));
  CHECK(std::abs(g5(b, c)) < 1e-10);
  CHECK(std::hypot(b - 2.73, c - 0.72) < 0.01);
  CHECK(inside_oab({f.b, f.c}));
  auto tight = landmark_f(pow(Rational(1, 10), 30));
  CHECK(f.b_box.contains(tight.b));
  CHECK(f.c_box.contains(tight.c));
}

TEST_CASE("region map agrees with direct passports") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> bi(1, 3000000), ci(1, 1000000);
  int regions = 0;
  std::set<int> seen;
  while (regions < 500) {
    Param5 pt{frac(bi(rng), 1000000), frac(ci(rng), 1000000)};
    Stratum5 s = classify5(pt);
    if (s.kind != Stratum5::Kind::Region) continue;
    ++regions;
    seen.insert(static_cast<int>(s.region));
    CHECK(passport(p5(pt)) == PassportOutcome(Snake{s.passport}));
  }
  CHECK(seen.size() >= 3);
}

TEST_CASE("inside OAB the roots of q are negative") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> bi(1, 30000), ci(1, 10000);
  int n = 0;
  while (n < 300) {
    Param5 pt{frac(bi(rng), 10000), frac(ci(rng), 10000)};
    if (!inside_oab(pt)) continue;
    ++n;
    CHECK(count_distinct_real_roots(q5(pt), Rational(-1000), Rational(0)) == 3);
  }
}

TEST_CASE("arcs carry their degenerate patterns") {
  // Points on g = 0 or h = 0 from the quadratic in c, checked in long double.
  struct Case {
    Arc5 arc;
    long double b;
    bool on_g;
    bool upper;
  };
  const Case cases[] = {{Arc5::AF, 2.85L, true, true},  {Arc5::DF, 2.4L, true, true},
                        {Arc5::OF, 1.5L, false, true},  {Arc5::EF, 2.78L, false, true},
                        {Arc5::DE, 2.5L, false, false}};
  for (const auto& cs : cases) {
    const long double b = cs.b;
    long double A, B, C;
    if (cs.on_g) {
      A = -216;
      B = 1512 * b - 729;
      C = 128 * b * b * b - 1998 * b * b + 3645 * b;
    } else {
      A = 5832;
      B = 18225 - 9720 * b;
      C = 640 * b * b * b - 1350 * b * b;
    }
    const long double disc = std::sqrt(B * B - 4 * A * C);
    const long double r1 = (-B - disc) / (2 * A), r2 = (-B + disc) / (2 * A);
    const long double c = cs.on_g ? std::min(r1, r2) : (cs.upper ? std::max(r1, r2) : std::min(r1, r2));
    auto v = critical_values(b, c);
    std::vector<Interval> enc;
    for (auto x : v) enc.emplace_back(from_double(static_cast<double>(x)));
    CAPTURE(arc_name(cs.arc));
    CHECK(degenerate_pattern(enc, frac(1, 1000000000)) == arc_pattern(cs.arc));
    Param5 near{from_double(static_cast<double>(b)), from_double(static_cast<double>(c))};
    CHECK(inside_oab(near));
  }
}

TEST_CASE("regions partition the exact-sign grid") {
  const int n = 512;
  std::set<std::string> names;
  int regions = 0, other = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      Param5 pt{frac(3 * (2 * i + 1), 2 * n), frac(2 * j + 1, 2 * n)};
      Stratum5 s = classify5(pt);
      names.insert(s.name);
      if (s.kind == Stratum5::Kind::Region) ++regions;
      else ++other;
    }
  for (const char* r : {"OAF", "AEF", "ODF", "DEF", "BDE"}) CHECK(names.count(r) == 1);
  CHECK(regions + other == n * n);
}

TEST_CASE("traced curves pass through the landmarks") {
  const int n = 128;
  auto lines = trace_curves5(n);
  const double cell = std::hypot(3.0 / n, 1.0 / n);
  CHECK(distance_to(lines, "dq", 3, 1) <= cell);
  CHECK(distance_to(lines, "dq", 2.25, 0) <= cell);
  CHECK(distance_to(lines, "g", 3, 1) <= cell);
  CHECK(distance_to(lines, "g", 135.0 / 64, 0) <= cell);
  CHECK(distance_to(lines, "h", 45.0 / 16, 25.0 / 32) <= cell);
  CHECK_THROWS(trace_curves5(8));
}
