// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Tolerances and time limits are fixed here; nothing is tuned per run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "morsepoly/resultant.hpp"
#include "morsepoly/snakes.hpp"
#include "morsepoly/strata5.hpp"
#include "morsepoly/strata6.hpp"
#include "oracles.hpp"

using namespace morsepoly;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!pass) note << "; ";
      pass = false;
      note << what;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= limit_seconds) {
    std::ostringstream os;
    os << "took " << elapsed << " s, limit " << limit_seconds << " s";
    out.require(false, os.str());
  }
  failures += !out.pass;
  std::cout << "criterion " << std::setw(2) << number << "  " << (out.pass ? "PASS" : "FAIL") << "  " << title << "  ("
            << std::fixed << std::setprecision(elapsed < 0.1 ? 5 : 2) << elapsed << " s)" << std::defaultfloat;
  const std::string note = out.note.str();
  if (!note.empty()) std::cout << "  " << note;
  std::cout << std::endl;
}

Rational Q(const char* s) { return parse_rational(s); }

Passport P(std::initializer_list<int> v) { return Passport(v); }

bool brute_pap(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i + 2 < n; ++i)
    if ((p[i] < p[i + 1]) == (p[i + 1] < p[i + 2])) return false;
  if (n >= 2) {
    if (n % 2 == 0 && !(p[0] > p[1])) return false;
    if (n % 2 == 1 && !(p[0] < p[1])) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::cout << "acceptance run" << std::endl;

  criterion(1, "Euler-Bernoulli triangle rows 1-6", 1e-3, [](Outcome& o) {
    const auto tri = euler_bernoulli_triangle(6);
    const std::vector<std::vector<std::uint64_t>> expected{
        {1}, {0, 1}, {1, 1, 0}, {0, 1, 2, 2}, {5, 5, 4, 2, 0}, {0, 5, 10, 14, 16, 16}};
    o.require(tri == expected, "rows differ");
  });

  criterion(2, "PAP enumeration, orders 4 and 5 lists, brute force through order 7", 1.0, [](Outcome& o) {
    const std::vector<Passport> four{P({2, 1, 4, 3}), P({3, 1, 4, 2}), P({3, 2, 4, 1}), P({4, 1, 3, 2}), P({4, 2, 3, 1})};
    o.require(enumerate(4) == four, "order 4 list");
    const std::vector<Passport> five{
        P({1, 3, 2, 5, 4}), P({1, 4, 2, 5, 3}), P({1, 4, 3, 5, 2}), P({1, 5, 2, 4, 3}), P({1, 5, 3, 4, 2}),
        P({2, 3, 1, 5, 4}), P({2, 4, 1, 5, 3}), P({2, 4, 3, 5, 1}), P({2, 5, 1, 4, 3}), P({2, 5, 3, 4, 1}),
        P({3, 4, 1, 5, 2}), P({3, 4, 2, 5, 1}), P({3, 5, 1, 4, 2}), P({3, 5, 2, 4, 1}), P({4, 5, 1, 3, 2}),
        P({4, 5, 2, 3, 1})};
    o.require(enumerate(5) == five, "order 5 list");
    for (int n = 1; n <= 7; ++n) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = i + 1;
      std::vector<Passport> brute;
      do {
        if (brute_pap(p)) brute.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      o.require(enumerate(n) == brute, "brute force differs at order " + std::to_string(n));
    }
  });

  criterion(3, "worked passport examples", 1.0, [](Outcome& o) {
    const std::vector<std::pair<std::vector<const char*>, Passport>> cases{
        {{"0", "1", "2", "3"}, P({4, 2, 3, 1})},
        {{"0", "1", "3", "4"}, P({2, 1, 4, 3})},
        {{"0", "1", "3", "5"}, P({3, 2, 4, 1})},
        {{"0", "1", "3", "4.4"}, P({3, 1, 4, 2})},
        {{"0", "1", "3", "5", "7", "8.4"}, P({4, 1, 5, 3, 6, 2})}};
    for (const auto& [xs, expected] : cases) {
      CriticalPointSpec spec;
      for (const char* x : xs) spec.xs.push_back(Q(x));
      const auto out = passport(from_critical_points(spec));
      o.require(out == PassportOutcome(Snake{expected}), "got " + describe(out) + " for " + format_passport(expected));
    }
  });

  criterion(4, "construction round trip for every PAP of order <= 6", 60.0, [](Outcome& o) {
    int done = 0;
    for (int n = 1; n <= 6; ++n)
      for (const auto& target : enumerate(n)) {
        const ConstructResult r = construct(target);
        const auto out = passport(from_critical_points(r.spec));
        o.require(out == PassportOutcome(Snake{target}), "round trip failed for " + format_passport(target));
        ++done;
      }
    o.require(done == 86, "expected 86 targets");
    o.note << (o.pass ? "86 targets" : "");
  });

  criterion(5, "degree-5 landmarks", 1.0, [](Outcome& o) {
    o.require(dq5(Rational(3), Rational(1)) == 0, "dq(3,1)");
    o.require(dq5(Q("45/16"), Q("25/32")) == 0, "dq(45/16,25/32)");
    o.require(h5(Q("45/16"), Q("25/32")) == 0, "h(45/16,25/32)");
    o.require(g5(Q("135/64"), Rational(0)) == 0, "g(135/64,0)");
    const Landmark5 f = landmark_f(Q("1e-14"));
    o.require(std::abs(g5(f.b, f.c).get_d()) < 1e-12, "|g(F)|");
    o.require(std::abs(h5(f.b, f.c).get_d()) < 1e-12, "|h(F)|");
    o.require(std::hypot(f.b.get_d() - 2.73, f.c.get_d() - 0.72) < 0.01, "F far from (2.73, 0.72)");
    std::ostringstream os;
    os << std::setprecision(12) << "F = (" << f.b.get_d() << ", " << f.c.get_d() << ")";
    o.note << os.str();
  });

  criterion(6, "degree-5 region map, 500 points per region", 60.0, [](Outcome& o) {
    // Boxes spanned by each region's corner landmarks; points are kept only
    // when classified into that region.
    std::map<std::string, std::pair<double, double>> at;
    for (const auto& m : landmarks5()) at[m.name] = {m.b.get_d(), m.c.get_d()};
    const std::vector<std::pair<Region5, std::vector<std::string>>> corners{
        {Region5::OAF, {"O", "A", "F"}}, {Region5::AEF, {"A", "E", "F"}}, {Region5::ODF, {"O", "D", "F"}},
        {Region5::DEF, {"D", "E", "F"}}, {Region5::BDE, {"B", "D", "E"}}};
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> unit(0, 1000000);
    int mismatches = 0;
    for (const auto& [region, names] : corners) {
      double b0 = 1e9, b1 = -1e9, c0 = 1e9, c1 = -1e9;
      for (const auto& n : names) {
        b0 = std::min(b0, at[n].first);
        b1 = std::max(b1, at[n].first);
        c0 = std::min(c0, at[n].second);
        c1 = std::max(c1, at[n].second);
      }
      const Rational B0 = from_double(b0), B1 = from_double(b1), C0 = from_double(c0), C1 = from_double(c1);
      int found = 0, attempts = 0;
      while (found < 500 && attempts < 200000) {
        ++attempts;
        const Param5 pt{B0 + (B1 - B0) * frac(unit(rng), 1000000), C0 + (C1 - C0) * frac(unit(rng), 1000000)};
        const Stratum5 st = classify5(pt);
        if (st.kind != Stratum5::Kind::Region || st.region != region) continue;
        ++found;
        if (!(passport(p5(pt)) == PassportOutcome(Snake{st.passport}))) ++mismatches;
      }
      o.require(found == 500, "only " + std::to_string(found) + " points in " + region_name(region));
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  });

  criterion(7, "discriminant identities for dq and d", 5.0, [](Outcome& o) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
      const Rational b = oracle::random_rational(rng, -500, 500, 97), c = oracle::random_rational(rng, -500, 500, 89);
      const Polynomial q = q5({b, c});
      o.require(dq5(b, c) == oracle::sylvester_resultant(q, derivative(q)) * Rational(-1), "dq differs");
    }
    for (int t = 0; t < 20; ++t) {
      const Param6 pt{oracle::random_rational(rng, -500, 500, 97), oracle::random_rational(rng, -500, 500, 89),
                      oracle::random_rational(rng, -500, 500, 83)};
      const Polynomial q = q6(pt);
      o.require(d6(pt) == oracle::sylvester_resultant(q, derivative(q)), "d differs");
    }
  });

  criterion(8, "positive coefficients and four real roots give negative roots", 30.0, [](Outcome& o) {
    std::mt19937_64 rng(8);
    int found = 0, violations = 0;
    for (int t = 0; t < 400000 && found < 1000; ++t) {
      const Param6 pt{oracle::random_rational(rng, 1, 650, 100), oracle::random_rational(rng, 1, 450, 100),
                      oracle::random_rational(rng, 1, 100, 100)};
      if (!in_main_triangle(pt)) continue;
      ++found;
      const Polynomial q = q6(pt);
      if (count_distinct_real_roots(q, Rational(0), cauchy_bound(q)) != 0 || eval(q, 0) == 0) ++violations;
    }
    o.require(found == 1000, "only " + std::to_string(found) + " points found");
    o.require(violations == 0, std::to_string(violations) + " violations");
  });

  criterion(9, "degree-6 section counts at resolution 256", 600.0, [](Outcome& o) {
    const std::vector<std::pair<const char*, std::size_t>> cases{{"0.9", 5},  {"0.7", 7},   {"0.68", 13},
                                                                 {"0.6", 12}, {"0.55", 14}, {"0.5", 14}};
    for (const auto& [g, expected] : cases) {
      const SectionScan scan = scan_section(Q(g), 256);
      const auto labels = scan.labels();
      o.note << g << ":" << labels.size() << " ";
      o.require(labels.size() == expected, std::string("count at ") + g);
      for (const auto& c : scan.components) o.require(c.consistent, std::string("inconsistent samples at ") + g);
      if (std::string(g) == "0.5") {
        o.require(std::count(labels.begin(), labels.end(), 8) == 0, "8 present at 0.5");
        o.require(std::count(labels.begin(), labels.end(), 12) == 0, "12 present at 0.5");
      }
    }
  });

  criterion(10, "bifurcation thresholds in (0.5, 1.0) within 1e-3", 900.0, [](Outcome& o) {
    const std::vector<double> targets{0.8192, 0.6912, 0.6718, 0.57613, 0.54613};
    const auto report = detect_bifurcations(Q("0.5"), Q("1"), Q("1e-4"), 256, Q("0.01"));
    auto near = [](const Threshold& t, double x) { return std::abs(t.gamma.mid().get_d() - x) <= 1e-3; };
    for (double x : targets) {
      const bool hit = std::any_of(report.thresholds.begin(), report.thresholds.end(),
                                   [&](const Threshold& t) { return near(t, x); });
      std::ostringstream os;
      os << "no threshold near " << x;
      o.require(hit, os.str());
    }
    int spurious = 0;
    for (const auto& t : report.thresholds)
      if (std::none_of(targets.begin(), targets.end(), [&](double x) { return near(t, x); })) ++spurious;
    o.require(spurious == 0, std::to_string(spurious) + " changes away from every target");
    o.note << report.thresholds.size() << " signature changes in " << report.scans << " scans";
    for (const auto& [name, value] : {std::pair{"52488/78125", 52488.0 / 78125}, {"52488/72125", 52488.0 / 72125}})
      if (std::any_of(report.thresholds.begin(), report.thresholds.end(),
                      [&](const Threshold& t) { return near(t, value); }))
        o.note << "; the event near 0.6718 matches " << name;
  });

  criterion(11, "Snake exactly when s and z are nonzero, 500 points", 60.0, [](Outcome& o) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int tested = 0, mismatches = 0;
    while (tested < 500) {
      const Rational gamma = oracle::random_rational(rng, 45, 99, 100);
      const double l1 = unit(rng), l2 = unit(rng);
      if (l1 + l2 >= 1) continue;
      const ChartPoint cp = chart_point(gamma.get_d(), l1, l2);
      const Param6 pt{simplest_between(from_double(cp.a - 1e-9), from_double(cp.a + 1e-9)),
                      simplest_between(from_double(cp.b - 1e-9), from_double(cp.b + 1e-9)), gamma};
      if (!in_main_triangle(pt)) continue;
      ++tested;
      const SignTriple6 sg = invariants6(pt);
      const bool snake = std::holds_alternative<Snake>(passport(p6(pt)));
      mismatches += snake != (sg.s != 0 && sg.z != 0);
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
