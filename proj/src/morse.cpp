#include "morsepoly/morse.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "morsepoly/resultant.hpp"

namespace morsepoly {

bool operator==(const Snake& a, const Snake& b) { return a.passport == b.passport; }
bool operator==(const Degenerate& a, const Degenerate& b) { return a.pattern == b.pattern; }
bool operator==(const NonMorse& a, const NonMorse& b) { return a.reason == b.reason; }

std::string describe(const PassportOutcome& o) {
  if (auto s = std::get_if<Snake>(&o)) return "snake " + format_passport(s->passport);
  if (auto d = std::get_if<Degenerate>(&o)) return "degenerate " + format_passport(d->pattern);
  return "non-morse: " + std::get<NonMorse>(o).detail;
}

const Passport* snake_passport(const PassportOutcome& o) {
  auto s = std::get_if<Snake>(&o);
  return s ? &s->passport : nullptr;
}

void validate(const CriticalPointSpec& spec) {
  if (spec.xs.empty()) throw std::invalid_argument("critical point spec is empty");
  if (spec.xs.front() != 0) throw std::invalid_argument("critical point spec must start at 0");
  for (std::size_t i = 1; i < spec.xs.size(); ++i)
    if (!(spec.xs[i - 1] < spec.xs[i])) throw std::invalid_argument("critical points must be strictly increasing");
}

Polynomial from_critical_points(const CriticalPointSpec& spec) {
  validate(spec);
  Polynomial dp = Polynomial::from_roots(spec.xs);
  return integrate_from_zero(dp) * Rational(static_cast<long>(spec.xs.size() + 1));
}

const Rational& default_tolerance() {
  static const Rational tol = parse_rational("1e-12");
  return tol;
}

namespace {

// Groups overlapping (or tol-close) enclosures, then ranks groups by position.
std::vector<int> dense_ranks(const std::vector<Interval>& v, const Rational& tol) {
  const std::size_t n = v.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational gap = std::max(v[i].lo, v[j].lo) - std::min(v[i].hi, v[j].hi);
      if (gap <= tol) parent[find(i)] = find(j);
    }
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) roots.push_back(i);
  std::vector<Rational> lowest(n);
  for (std::size_t r : roots) {
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      if (find(i) == r && (first || v[i].lo < lowest[r])) {
        lowest[r] = v[i].lo;
        first = false;
      }
  }
  std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) { return lowest[a] < lowest[b]; });
  std::vector<int> rank(n);
  for (std::size_t i = 0; i < n; ++i)
    rank[i] = static_cast<int>(std::find(roots.begin(), roots.end(), find(i)) - roots.begin()) + 1;
  return rank;
}

bool has_repeat(const std::vector<int>& r) {
  std::vector<int> s = r;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

// Roots of the returned polynomial are the values p takes at repeated critical
// values: gcd(R, R') with R(y) = res_x(p', p - y).
Polynomial tie_certificate(const Polynomial& p, const Polynomial& dp) {
  const int n = p.degree();
  std::vector<Rational> ys, rs;
  for (int j = 0; j < n; ++j) {
    ys.emplace_back(j);
    rs.push_back(resultant(dp, p - Polynomial::constant(Rational(j))));
  }
  Polynomial r = interpolate(ys, rs);
  return gcd(r, derivative(r));
}

bool root_in(const Polynomial& g, const Interval& x) {
  if (g.degree() <= 0) return false;
  if (eval(g, x.lo) == 0) return true;
  if (x.lo == x.hi) return false;
  return SturmSequence(squarefree_part(g)).count(x.lo, x.hi) > 0;
}

Interval intersection(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

}  // namespace

CriticalData critical_data(const Polynomial& p, const Rational& tol) {
  if (tol <= 0) throw std::domain_error("tolerance must be positive");
  if (p.degree() < 2) throw std::domain_error("passport needs degree >= 2");
  CriticalData cd;
  const Polynomial dp = derivative(p);
  cd.points = isolate_real_roots(dp);
  int total = 0;
  bool repeated = false;
  for (const auto& r : cd.points) {
    total += r.multiplicity;
    repeated |= r.multiplicity > 1;
  }
  auto enclose = [&](const IsolatedRoot& r) { return eval_centered(p, dp, Interval(r.lower, r.upper)); };
  for (const auto& r : cd.points) cd.values.push_back(enclose(r));
  if (total < p.degree() - 1) {
    cd.verdict = Verdict::NonrealCritical;
    return cd;
  }
  if (repeated) {
    cd.verdict = Verdict::RepeatedCritical;
    return cd;
  }

  const std::size_t k = cd.points.size();
  std::optional<Polynomial> certificate;
  const Rational floor_width = pow(Rational(1, 2), 400);
  for (int iter = 0;; ++iter) {
    std::vector<char> involved(k, 0);
    bool any = false, all_tied = true, all_small = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!cd.values[i].intersects(cd.values[j])) continue;
        any = true;
        involved[i] = involved[j] = 1;
        const bool both_exact = cd.values[i].width() == 0 && cd.values[j].width() == 0;
        bool tied = both_exact;
        if (!both_exact && certificate && cd.values[i].width() <= tol && cd.values[j].width() <= tol)
          tied = root_in(*certificate, intersection(cd.values[i], cd.values[j]));
        all_tied &= tied;
        all_small &= cd.values[i].width() < floor_width && cd.values[j].width() < floor_width;
      }
    if (!any) {
      cd.verdict = Verdict::MorseSnake;
      return cd;
    }
    if (all_tied || all_small) {
      cd.verdict = Verdict::DegenerateValues;
      return cd;
    }
    if (!certificate && iter >= 6) certificate = tie_certificate(p, dp);
    for (std::size_t i = 0; i < k; ++i) {
      if (!involved[i]) continue;
      for (int step = 0; step < 4 && !cd.points[i].exact(); ++step) bisect_once(dp, cd.points[i]);
      cd.values[i] = enclose(cd.points[i]);
    }
  }
}

PassportOutcome passport(const Polynomial& p, const Rational& tol) {
  CriticalData cd = critical_data(p, tol);
  switch (cd.verdict) {
    case Verdict::NonrealCritical:
      return NonMorse{Verdict::NonrealCritical, "derivative has non-real roots"};
    case Verdict::RepeatedCritical:
      return NonMorse{Verdict::RepeatedCritical, "derivative has a multiple root"};
    case Verdict::DegenerateValues:
      return Degenerate{dense_ranks(cd.values, 0)};
    case Verdict::MorseSnake:
      break;
  }
  return Snake{dense_ranks(cd.values, -1)};
}

std::vector<int> degenerate_pattern(const std::vector<Interval>& values, const Rational& tol) {
  if (tol < 0) throw std::domain_error("tolerance must be nonnegative");
  std::vector<int> r = dense_ranks(values, tol);
  if (!has_repeat(r)) throw std::domain_error("degenerate_pattern: values are pairwise distinct");
  return r;
}

std::vector<int> degenerate_pattern(const std::vector<Rational>& values, const Rational& tol) {
  std::vector<Interval> v;
  for (const auto& x : values) v.emplace_back(x);
  return degenerate_pattern(v, tol);
}

// ---- construction ----------------------------------------------------------

std::vector<double> value_steps(const std::vector<double>& gaps) {
  std::vector<double> xs{0.0};
  for (double g : gaps) xs.push_back(xs.back() + g);
  auto dp = [&](double t) {
    double v = 1;
    for (double x : xs) v *= t - x;
    return v;
  };
  std::vector<double> steps;
  for (std::size_t i = 1; i < xs.size(); ++i)
    steps.push_back(boost::math::quadrature::gauss<double, 30>::integrate(dp, xs[i - 1], xs[i]));
  return steps;
}

Passport ranking_of_steps(const std::vector<double>& steps) {
  std::vector<double> v{0.0};
  for (double s : steps) v.push_back(v.back() + s);
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  Passport rank(v.size());
  for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r) + 1;
  return rank;
}

namespace {

class BudgetExhausted : public std::exception {};

struct Steering {
  const Passport& target;
  const ConstructOptions& opts;
  std::size_t evaluations = 0;

  std::vector<double> steps(const Eigen::VectorXd& u) {
    if (++evaluations > opts.max_evaluations) throw BudgetExhausted{};
    std::vector<double> gaps(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) gaps[i] = std::exp(u[i]);
    return value_steps(gaps);
  }

  Eigen::VectorXd direction(const Eigen::VectorXd& u) {
    auto s = steps(u);
    Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(s.data(), static_cast<Eigen::Index>(s.size()));
    return d / d.norm();
  }

  // Levenberg-Marquardt on |direction(u) - goal|; the scale direction is a null space.
  bool solve(Eigen::VectorXd& u, const Eigen::VectorXd& goal, double accuracy) {
    const Eigen::Index k = u.size();
    Eigen::VectorXd r = direction(u) - goal;
    double mu = 1e-3;
    for (int it = 0; it < 60; ++it) {
      if (r.norm() < accuracy) return true;
      Eigen::MatrixXd J(k, k);
      for (Eigen::Index j = 0; j < k; ++j) {
        Eigen::VectorXd v = u;
        v[j] += 1e-7;
        J.col(j) = (direction(v) - goal - r) / 1e-7;
      }
      Eigen::MatrixXd A = J.transpose() * J;
      Eigen::VectorXd g = J.transpose() * r;
      bool improved = false;
      for (int tries = 0; tries < 12 && !improved; ++tries) {
        Eigen::MatrixXd M = A;
        M.diagonal().array() += mu * (1.0 + A.diagonal().array());
        Eigen::VectorXd step = -M.ldlt().solve(g);
        Eigen::VectorXd trial = u + step;
        trial.array() -= trial.mean();
        if (!trial.allFinite() || trial.cwiseAbs().maxCoeff() > 30) {
          mu *= 10;
          continue;
        }
        Eigen::VectorXd rt = direction(trial) - goal;
        if (rt.norm() < r.norm()) {
          u = trial;
          r = rt;
          mu = std::max(mu / 5, 1e-12);
          improved = true;
        } else {
          mu *= 10;
        }
      }
      if (!improved) return r.norm() < accuracy;
    }
    return r.norm() < accuracy;
  }

  std::optional<CriticalPointSpec> verify(const Eigen::VectorXd& u) {
    std::vector<double> xs{0.0};
    for (Eigen::Index i = 0; i < u.size(); ++i) xs.push_back(xs.back() + std::exp(u[i]));
    double min_gap = std::exp(u.minCoeff());
    for (double rel : {1e-3, 1e-5, 1e-7, 1e-9, 0.0}) {
      CriticalPointSpec spec{{Rational(0)}};
      bool ok = true;
      for (std::size_t i = 1; i < xs.size(); ++i) {
        Rational x = rel > 0 ? simplest_between(from_double(xs[i] - rel * min_gap), from_double(xs[i] + rel * min_gap))
                             : from_double(xs[i]);
        if (!(spec.xs.back() < x)) {
          ok = false;
          break;
        }
        spec.xs.push_back(x);
      }
      if (!ok) continue;
      if (++evaluations > opts.max_evaluations) throw BudgetExhausted{};
      auto out = passport(from_critical_points(spec), opts.tol);
      if (auto s = snake_passport(out); s && *s == target) return spec;
    }
    return std::nullopt;
  }

  std::optional<CriticalPointSpec> run(Eigen::VectorXd u) {
    const Eigen::Index k = u.size();
    u.array() -= u.mean();
    Eigen::VectorXd t(k);
    for (Eigen::Index i = 0; i < k; ++i) t[i] = target[i + 1] - target[i];
    t /= t.norm();
    auto s0 = steps(u);
    if (ranking_of_steps(s0) == target)
      if (auto spec = verify(u)) return spec;
    Eigen::VectorXd start = Eigen::Map<Eigen::VectorXd>(s0.data(), k);
    start /= start.norm();
    for (Eigen::Index i = 0; i < k; ++i)
      if ((start[i] > 0) != (t[i] > 0)) return std::nullopt;
    double tau = 0, dt = 0.25;
    while (tau < 1) {
      const double next = std::min(1.0, tau + dt);
      Eigen::VectorXd goal = (1 - next) * start + next * t;
      goal /= goal.norm();
      Eigen::VectorXd trial = u;
      if (solve(trial, goal, next < 1 ? 1e-6 : 1e-11)) {
        u = trial;
        tau = next;
        dt = std::min(0.5, dt * 1.5);
        std::vector<double> gaps(k);
        for (Eigen::Index i = 0; i < k; ++i) gaps[i] = std::exp(u[i]);
        if (ranking_of_steps(value_steps(gaps)) == target)
          if (auto spec = verify(u)) return spec;
      } else {
        dt /= 2;
        if (dt < 1e-5) return std::nullopt;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

ConstructResult construct(const Passport& target, const ConstructOptions& opts) {
  if (auto why = pap_violation(target)) throw std::invalid_argument("construct: " + *why);
  if (target.size() == 1) return {CriticalPointSpec{{Rational(0)}}, 0, 0};
  const Eigen::Index k = static_cast<Eigen::Index>(target.size()) - 1;
  Steering steer{target, opts};
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  try {
    for (int attempt = 0;; ++attempt) {
      Eigen::VectorXd u(k);
      for (Eigen::Index i = 0; i < k; ++i) u[i] = attempt == 0 ? 0.0 : std::log(2.0 * (1.0 - unit(rng)));
      if (auto spec = steer.run(u)) return {*spec, steer.evaluations, attempt};
    }
  } catch (const BudgetExhausted&) {
  }
  throw std::runtime_error("construct: evaluation budget of " + std::to_string(opts.max_evaluations) +
                           " exhausted for " + format_passport(target));
}

}  // namespace morsepoly
