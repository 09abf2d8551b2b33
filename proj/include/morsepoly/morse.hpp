#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "morsepoly/interval.hpp"
#include "morsepoly/polynomial.hpp"
#include "morsepoly/roots.hpp"
#include "morsepoly/snakes.hpp"

namespace morsepoly {

enum class Verdict { MorseSnake, DegenerateValues, NonrealCritical, RepeatedCritical };

struct CriticalData {
  std::vector<IsolatedRoot> points;  // roots of p', ascending
  std::vector<Interval> values;      // p at each point; a single point when exact
  Verdict verdict = Verdict::NonrealCritical;
};

struct Snake {
  Passport passport;
};
struct Degenerate {
  std::vector<int> pattern;
};
struct NonMorse {
  Verdict reason;  // NonrealCritical or RepeatedCritical
  std::string detail;
};
using PassportOutcome = std::variant<Snake, Degenerate, NonMorse>;

bool operator==(const Snake& a, const Snake& b);
bool operator==(const Degenerate& a, const Degenerate& b);
bool operator==(const NonMorse& a, const NonMorse& b);

std::string describe(const PassportOutcome& o);
const Passport* snake_passport(const PassportOutcome& o);

// 0 = x_0 < x_1 < ... < x_k
struct CriticalPointSpec {
  std::vector<Rational> xs;
};

void validate(const CriticalPointSpec& spec);

// Monic, degree k+2, critical points exactly spec.xs, p(0) = 0.
Polynomial from_critical_points(const CriticalPointSpec& spec);

const Rational& default_tolerance();

CriticalData critical_data(const Polynomial& p, const Rational& tol = default_tolerance());
PassportOutcome passport(const Polynomial& p, const Rational& tol = default_tolerance());

// Dense ranks of values; enclosures overlapping or closer than tol share a rank.
std::vector<int> degenerate_pattern(const std::vector<Interval>& values, const Rational& tol);
std::vector<int> degenerate_pattern(const std::vector<Rational>& values, const Rational& tol);

struct ConstructOptions {
  std::size_t max_evaluations = 10000;
  std::uint64_t seed = 0;
  Rational tol = default_tolerance();
};

struct ConstructResult {
  CriticalPointSpec spec;
  std::size_t evaluations = 0;
  int restarts = 0;
};

// Throws std::runtime_error when the evaluation budget runs out.
ConstructResult construct(const Passport& target, const ConstructOptions& opts = {});

// Consecutive differences p(x_i) - p(x_{i-1}) for the polynomial of gaps g
// (x_0 = 0, x_i = g_1 + ... + g_i), as integrals of p' in double precision.
std::vector<double> value_steps(const std::vector<double>& gaps);
Passport ranking_of_steps(const std::vector<double>& steps);

}  // namespace morsepoly
