#include "morsepoly/strata6.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "strata6_terms.hpp"

namespace morsepoly {

namespace {

using detail::Term;

template <std::size_t N>
Rational eval_terms(const std::array<Term, N>& terms, const Param6& pt) {
  std::vector<Rational> pa{1}, pb{1}, pc{1};
  for (int e = 1; e <= 8; ++e) {
    pa.push_back(pa.back() * pt.a);
    pb.push_back(pb.back() * pt.b);
    pc.push_back(pc.back() * pt.c);
  }
  Rational sum = 0;
  for (const auto& t : terms) sum += Rational(static_cast<long>(t.coef)) * pa[t.i] * pb[t.j] * pc[t.k];
  return sum;
}

// Sign of the term sum, or 2 when the floating-point result cannot be trusted.
template <typename F, std::size_t N>
int float_sign(const std::array<Term, N>& terms, F a, F b, F c) {
  F pa[9], pb[9], pc[9];
  pa[0] = pb[0] = pc[0] = 1;
  for (int e = 1; e <= 8; ++e) {
    pa[e] = pa[e - 1] * a;
    pb[e] = pb[e - 1] * b;
    pc[e] = pc[e - 1] * c;
  }
  F sum = 0, mag = 0;
  for (const auto& t : terms) {
    const F v = static_cast<F>(t.coef) * pa[t.i] * pb[t.j] * pc[t.k];
    sum += v;
    mag += v < 0 ? -v : v;
  }
  // Each term: at most 3*8 products plus the rounding of c; summation adds N.
  const F u = std::numeric_limits<F>::epsilon();
  const F bound = 2 * (32 + static_cast<F>(N)) * u * mag;
  if (sum > bound) return 1;
  if (sum < -bound) return -1;
  return 2;
}

// Exact sign with a and b dyadic: everything is scaled to integers.
template <std::size_t N>
int exact_sign(const std::array<Term, N>& terms, double a, double b, const Rational& c) {
  int ea = 0, eb = 0;
  const double ma = std::frexp(a, &ea), mb = std::frexp(b, &eb);
  // a = A / 2^K with A integral once the mantissa is shifted by 53 bits.
  const int K = std::max({53 - ea, 53 - eb, 0});
  Integer A, B;
  mpz_set_d(A.get_mpz_t(), std::ldexp(ma, ea + K));
  mpz_set_d(B.get_mpz_t(), std::ldexp(mb, eb + K));
  const Integer C = c.get_num(), D = c.get_den();
  std::vector<Integer> pa{1}, pb{1}, pc{1}, pd{1}, p2{1};
  Integer two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(K));
  for (int e = 1; e <= 8; ++e) {
    pa.push_back(pa.back() * A);
    pb.push_back(pb.back() * B);
    pc.push_back(pc.back() * C);
    pd.push_back(pd.back() * D);
    p2.push_back(p2.back() * two_k);
  }
  Integer sum = 0;
  for (const auto& t : terms)
    sum += Integer(static_cast<long>(t.coef)) * pa[t.i] * pb[t.j] * p2[8 - t.i - t.j] * pc[t.k] * pd[8 - t.k];
  return sgn(sum);
}

template <std::size_t N>
int filtered_sign(const std::array<Term, N>& terms, double a, double b, const Rational& c, double cd) {
  int s = float_sign<double>(terms, a, b, cd);
  if (s != 2) return s;
  // Extended precision only when c converts with a single rounding.
  if (mpz_fits_ulong_p(c.get_num_mpz_t()) && mpz_fits_ulong_p(c.get_den_mpz_t())) {
    const long double cl = static_cast<long double>(c.get_num().get_ui()) / c.get_den().get_ui();
    s = float_sign<long double>(terms, a, b, cl);
    if (s != 2) return s;
  }
  return exact_sign(terms, a, b, c);
}

}  // namespace

Rational d6(const Param6& pt) { return eval_terms(detail::kDiscriminantTerms, pt); }
Rational s6(const Param6& pt) { return eval_terms(detail::kDistinctValuesTerms, pt); }
Rational z6(const Param6& pt) { return eval_terms(detail::kNonzeroValuesTerms, pt); }

SignTriple6 invariants6(const Param6& pt) { return {sign(d6(pt)), sign(s6(pt)), sign(z6(pt))}; }

SignTriple6 invariants6_filtered(double a, double b, const Rational& c) {
  const double cd = c.get_d();
  return {filtered_sign(detail::kDiscriminantTerms, a, b, c, cd),
          filtered_sign(detail::kDistinctValuesTerms, a, b, c, cd),
          filtered_sign(detail::kNonzeroValuesTerms, a, b, c, cd)};
}

Polynomial q6(const Param6& pt) { return Polynomial({pt.c, pt.b, pt.a, 4, 1}); }

Polynomial p6(const Param6& pt) {
  return integrate_from_zero(Polynomial({0, pt.c, pt.b, pt.a, 4, 1})) * Rational(6);
}

bool in_main_triangle(const Param6& pt) { return count_distinct_real_roots(q6(pt)) == 4; }

namespace {

// Solves prod y = gamma for t; a hint inside the bracket skips the bisection.
ChartPoint solve_chart(double gamma, double l1, double l2, long double hint) {
  static constexpr long double W[3][4] = {
      {0.75L, -0.25L, -0.25L, -0.25L}, {0.25L, 0.25L, -0.25L, -0.25L}, {0.25L, 0.25L, 0.25L, -0.75L}};
  const long double l3 = 1.0L - l1 - l2;
  long double om[4];
  for (int i = 0; i < 4; ++i) om[i] = l1 * W[0][i] + l2 * W[1][i] + l3 * W[2][i];
  auto prod = [&](long double t) {
    long double p = 1;
    for (int i = 0; i < 4; ++i) p *= 1 + t * om[i];
    return p;
  };
  // The product falls from 1 at t = 0 to 0 where the smallest y vanishes.
  // Safeguarded Newton: bisect whenever the step leaves the bracket.
  long double lo = 0, hi = -1.0L / om[3];
  long double t = hint;
  if (!(hint > lo && hint < hi)) {
    for (int it = 0; it < 10; ++it) {
      const long double mid = (lo + hi) / 2;
      if (prod(mid) > gamma) lo = mid;
      else hi = mid;
    }
    t = (lo + hi) / 2;
  }
  for (int it = 0; it < 100; ++it) {
    long double f1[4];
    for (int i = 0; i < 4; ++i) f1[i] = 1 + t * om[i];
    const long double f = f1[0] * f1[1] * f1[2] * f1[3] - gamma;
    if (f > 0) lo = t;
    else hi = t;
    const long double df = om[0] * f1[1] * f1[2] * f1[3] + om[1] * f1[0] * f1[2] * f1[3] +
                           om[2] * f1[0] * f1[1] * f1[3] + om[3] * f1[0] * f1[1] * f1[2];
    long double next = t - f / df;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    const long double step = next > t ? next - t : t - next;
    t = next;
    if (step <= 4 * std::numeric_limits<long double>::epsilon() * t) break;
  }
  ChartPoint cp;
  cp.t = static_cast<double>(t);
  long double y[4];
  for (int i = 0; i < 4; ++i) y[i] = 1 + t * om[i];
  long double e2 = 0, e3 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      e2 += y[i] * y[j];
      for (int k = j + 1; k < 4; ++k) e3 += y[i] * y[j] * y[k];
    }
  for (int i = 0; i < 4; ++i) cp.y[i] = static_cast<double>(y[i]);
  cp.a = static_cast<double>(e2);
  cp.b = static_cast<double>(e3);
  return cp;
}

}  // namespace

ChartPoint chart_point(double gamma, double l1, double l2) { return solve_chart(gamma, l1, l2, -1); }

namespace {

struct CellEval {
  int label = 0;
  int s_sign = 0, z_sign = 0;  // predicted from the root values
};

long double value_at(long double x, long double a, long double b, long double c) {
  return x * x * ((((x / 6 + 0.8L) * x + a / 4) * x + b / 3) * x + c / 2);
}

// Passport number from the critical values at the chart roots.
CellEval evaluate_cell(const ChartPoint& cp, double gamma) {
  CellEval out;
  long double xs[5], v[5];
  for (int i = 0; i < 4; ++i) xs[i] = -static_cast<long double>(cp.y[i]);
  xs[4] = 0;
  long double scale = 0;
  for (int i = 0; i < 5; ++i) {
    v[i] = value_at(xs[i], cp.a, cp.b, gamma);
    scale = std::max(scale, std::abs(v[i]));
  }
  int idx[5] = {0, 1, 2, 3, 4};
  std::sort(idx, idx + 5, [&](int p, int q) { return v[p] < v[q]; });
  for (int r = 0; r + 1 < 5; ++r)
    if (v[idx[r + 1]] - v[idx[r]] <= 1e-11L * scale) return out;
  Passport pp(5);
  for (int r = 0; r < 5; ++r) pp[idx[r]] = r + 1;
  out.label = order5_number(pp);
  int zs = 1, ss = -1;
  for (int i = 0; i < 4; ++i) {
    zs *= v[i] > 0 ? 1 : -1;
    for (int j = i + 1; j < 4; ++j) ss *= ((v[i] - v[j]) > 0) == ((xs[i] - xs[j]) > 0) ? 1 : -1;
  }
  out.s_sign = ss;
  out.z_sign = zs;
  return out;
}

const std::vector<Passport>& order5() {
  static const std::vector<Passport> list = enumerate(5);
  return list;
}

}  // namespace

std::vector<int> SectionScan::labels() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(c.label);
  std::sort(out.begin(), out.end());
  return out;
}

SectionScan scan_section(const Rational& gamma, int resolution, const ScanOptions& options) {
  if (gamma <= 0 || gamma > 1) throw std::domain_error("scan_section: gamma must lie in (0, 1]");
  if (resolution < 64) throw std::domain_error("scan_section: resolution must be at least 64");
  if (options.refine_depth < 0 || options.refine_depth > 6)
    throw std::domain_error("scan_section: refine depth must lie in 0..6");
  const int n = resolution;
  const double g = gamma.get_d();
  SectionScan scan;
  scan.gamma = gamma;
  scan.resolution = n;
  // q = (x+1)^4: the main triangle has shrunk to the point (6, 4).
  if (gamma == 1) return scan;

  // Grid index j*n + i; -1 marks positions outside the chart. Cells on the
  // diagonal are cut by the triangle side and only their subsamples count.
  std::vector<int> cell_of(static_cast<std::size_t>(n) * n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i + j <= n - 1; ++i) {
      SectionCell cell;
      cell.i = i;
      cell.j = j;
      if (i + j <= n - 2) {
        const ChartPoint cp = chart_point(g, (i + 0.5) / n, (j + 0.5) / n);
        cell.a = cp.a;
        cell.b = cp.b;
        const CellEval ev = evaluate_cell(cp, g);
        if (options.exact_signs) {
          cell.signs = invariants6_filtered(cp.a, cp.b, gamma);
          cell.in_triangle = cell.signs.d > 0;
          // Keep the label only where the exact signs confirm it.
          if (cell.in_triangle && ev.s_sign == cell.signs.s && ev.z_sign == cell.signs.z) cell.label = ev.label;
        } else {
          cell.in_triangle = true;
          cell.label = ev.label;
        }
      }
      if (cell.label) cell.support = 1u << cell.label;
      cell_of[j * n + i] = static_cast<int>(scan.cells.size());
      scan.cells.push_back(cell);
    }
  auto neighbor = [&](int c, int di, int dj) {
    const int ii = scan.cells[c].i + di, jj = scan.cells[c].j + dj;
    if (ii < 0 || jj < 0 || ii >= n || jj >= n) return -1;
    return cell_of[jj * n + ii];
  };

  // Local refinement. The first subsample hit of each label is kept as a
  // fallback representative for domains thinner than a cell.
  std::map<std::pair<int, int>, std::pair<double, double>> hit_point;
  const int k = 1 << options.refine_depth;
  const std::size_t ncells = scan.cells.size();
  for (std::size_t c = 0; c < ncells; ++c) {
    SectionCell& cell = scan.cells[c];
    bool edge = cell.label == 0;
    for (int dj = -1; dj <= 1 && !edge; ++dj)
      for (int di = -1; di <= 1 && !edge; ++di) {
        const int nb = neighbor(static_cast<int>(c), di, dj);
        edge = nb < 0 || scan.cells[nb].label != cell.label;
      }
    if (!edge || k == 1) continue;
    const long double hint = chart_point(g, (cell.i + 0.5) / n, (cell.j + 0.5) / n).t;
    for (int sj = 0; sj < k; ++sj)
      for (int si = 0; si < k; ++si) {
        const double l1 = (cell.i + (si + 0.5) / k) / n, l2 = (cell.j + (sj + 0.5) / k) / n;
        if (l1 + l2 >= 1) continue;
        const int label = evaluate_cell(solve_chart(g, l1, l2, hint), g).label;
        if (!label || (cell.support >> label & 1u)) continue;
        cell.support |= 1u << label;
        hit_point.emplace(std::make_pair(static_cast<int>(c), label), std::make_pair(l1, l2));
      }
  }

  // Domains: 8-connected clusters of cells supporting the same label, in
  // scanline order of their first cell.
  struct Cluster {
    int label;
    std::vector<int> cells;
  };
  std::vector<Cluster> clusters;
  std::vector<std::array<int, 17>> cluster_of(ncells);
  for (auto& row : cluster_of) row.fill(-1);
  for (std::size_t start = 0; start < ncells; ++start)
    for (int label = 1; label <= 16; ++label) {
      if (!(scan.cells[start].support >> label & 1u) || cluster_of[start][label] >= 0) continue;
      Cluster cl{label, {}};
      const int id = static_cast<int>(clusters.size());
      std::deque<int> queue{static_cast<int>(start)};
      cluster_of[start][label] = id;
      while (!queue.empty()) {
        const int c = queue.front();
        queue.pop_front();
        cl.cells.push_back(c);
        for (int dj = -1; dj <= 1; ++dj)
          for (int di = -1; di <= 1; ++di) {
            const int nb = neighbor(c, di, dj);
            if (nb < 0 || cluster_of[nb][label] >= 0 || !(scan.cells[nb].support >> label & 1u)) continue;
            cluster_of[nb][label] = id;
            queue.push_back(nb);
          }
      }
      clusters.push_back(std::move(cl));
    }

  // Thin domains break apart where they are narrower than the subgrid. A
  // small cluster joins any same-label cluster within the merge radius.
  {
    const std::size_t small = std::max<std::size_t>(16, static_cast<std::size_t>(n) * n / 4096);
    const int radius = std::max(2, n / 32);
    std::vector<int> parent(clusters.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t id = 0; id < clusters.size(); ++id) {
      const Cluster& cl = clusters[id];
      if (cl.cells.size() >= small) continue;
      for (int c : cl.cells)
        for (int dj = -radius; dj <= radius; ++dj)
          for (int di = -radius; di <= radius; ++di) {
            const int nb = neighbor(c, di, dj);
            if (nb < 0) continue;
            const int other = cluster_of[nb][cl.label];
            if (other >= 0 && other != static_cast<int>(id)) parent[find(other)] = find(static_cast<int>(id));
          }
    }
    std::map<int, int> renumber;
    std::vector<Cluster> merged;
    for (std::size_t id = 0; id < clusters.size(); ++id) {
      auto [it, fresh] = renumber.emplace(find(static_cast<int>(id)), static_cast<int>(merged.size()));
      if (fresh) merged.push_back({clusters[id].label, {}});
      auto& dst = merged[it->second].cells;
      dst.insert(dst.end(), clusters[id].cells.begin(), clusters[id].cells.end());
    }
    clusters = std::move(merged);
  }

  // Depth of each core cell: BFS from the edge of its center-label region.
  std::vector<int> depth(ncells, 0);
  {
    std::deque<int> queue;
    for (std::size_t c = 0; c < ncells; ++c) {
      if (!scan.cells[c].label) continue;
      bool boundary = false;
      for (int dj = -1; dj <= 1 && !boundary; ++dj)
        for (int di = -1; di <= 1 && !boundary; ++di) {
          const int nb = neighbor(static_cast<int>(c), di, dj);
          boundary = nb < 0 || scan.cells[nb].label != scan.cells[c].label;
        }
      if (boundary) {
        depth[c] = 1;
        queue.push_back(static_cast<int>(c));
      }
    }
    while (!queue.empty()) {
      const int c = queue.front();
      queue.pop_front();
      for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di) {
          const int nb = neighbor(c, di, dj);
          if (nb < 0 || depth[nb] || scan.cells[nb].label != scan.cells[c].label) continue;
          depth[nb] = depth[c] + 1;
          queue.push_back(nb);
        }
    }
  }

  auto snapped = [&](double a, double b, double da, double db) {
    return Param6{simplest_between(from_double(a - da), from_double(a + da)),
                  simplest_between(from_double(b - db), from_double(b + db)), gamma};
  };
  auto cell_point = [&](int c, bool snap) {
    const SectionCell& cell = scan.cells[c];
    if (!snap) return Param6{from_double(cell.a), from_double(cell.b), gamma};
    const ChartPoint right = chart_point(g, (cell.i + 1.5) / n, (cell.j + 0.5) / n);
    const ChartPoint up = chart_point(g, (cell.i + 0.5) / n, (cell.j + 1.5) / n);
    const double da = 0.1 * std::min(std::abs(right.a - cell.a), std::abs(up.a - cell.a)) + 1e-15;
    const double db = 0.1 * std::min(std::abs(right.b - cell.b), std::abs(up.b - cell.b)) + 1e-15;
    return snapped(cell.a, cell.b, da, db);
  };
  auto outcome_at = [&](const Param6& pt) { return passport(p6(pt)); };

  for (std::size_t id = 0; id < clusters.size(); ++id) {
    const Cluster& cl = clusters[id];
    SectionComponent comp;
    comp.id = static_cast<int>(id) + 1;
    comp.label = cl.label;
    comp.cells = cl.cells.size();
    std::vector<int> core;
    for (int c : cl.cells)
      if (scan.cells[c].label == cl.label) {
        core.push_back(c);
        scan.cells[c].component = comp.id;
      }
    comp.core = core.size();
    if (!options.representatives) {
      scan.components.push_back(std::move(comp));
      continue;
    }
    const Passport& expected = order5()[comp.label - 1];
    std::vector<Param6> points;
    if (core.empty()) {
      // Thinner than a cell: use the subsample that found it.
      for (int c : cl.cells) {
        auto it = hit_point.find({c, cl.label});
        if (it == hit_point.end()) continue;
        const ChartPoint cp = chart_point(g, it->second.first, it->second.second);
        points.push_back(Param6{from_double(cp.a), from_double(cp.b), gamma});
        if (points.size() == 3) break;
      }
    } else {
      // Deepest core cell, then two more spread across the core.
      int rep = core.front();
      for (int c : core)
        if (depth[c] > depth[rep]) rep = c;
      std::vector<int> chosen{rep};
      const int min_depth = std::max(1, depth[rep] / 2);
      while (chosen.size() < 3 && chosen.size() < core.size()) {
        int best = -1;
        double best_dist = -1;
        for (int c : core) {
          if (depth[c] < min_depth || std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
          double dist = std::numeric_limits<double>::infinity();
          for (int o : chosen)
            dist = std::min(dist, std::hypot(scan.cells[c].i - scan.cells[o].i, scan.cells[c].j - scan.cells[o].j));
          if (dist > best_dist) {
            best_dist = dist;
            best = c;
          }
        }
        if (best < 0) break;
        chosen.push_back(best);
      }
      Param6 first = cell_point(rep, true);
      if (!(outcome_at(first) == PassportOutcome(Snake{expected}))) first = cell_point(rep, false);
      points.push_back(first);
      for (std::size_t s = 1; s < chosen.size(); ++s) points.push_back(cell_point(chosen[s], false));
    }
    comp.representative = points.front();
    for (const auto& pt : points) comp.samples.push_back(outcome_at(pt));
    comp.outcome = comp.samples.front();
    for (const auto& o : comp.samples) comp.consistent &= o == comp.outcome;
    comp.consistent &= comp.outcome == PassportOutcome(Snake{expected});
    scan.components.push_back(std::move(comp));
  }
  return scan;
}

std::set<Passport> passports_present(const Rational& gamma, int resolution) {
  std::set<Passport> out;
  for (const auto& c : scan_section(gamma, resolution).components)
    if (auto p = snake_passport(c.outcome)) out.insert(*p);
  return out;
}

namespace {

struct Signature {
  std::vector<int> labels;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string label_list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s.empty() ? "none" : s;
}

std::string describe_change(const std::vector<int>& below, const std::vector<int>& above) {
  std::vector<int> appeared, vanished;
  std::set_difference(below.begin(), below.end(), above.begin(), above.end(), std::back_inserter(appeared));
  std::set_difference(above.begin(), above.end(), below.begin(), below.end(), std::back_inserter(vanished));
  std::ostringstream os;
  os << above.size() << " -> " << below.size() << " domains as gamma decreases";
  if (!appeared.empty()) os << "; gained " << label_list(appeared);
  if (!vanished.empty()) os << "; lost " << label_list(vanished);
  return os.str();
}

}  // namespace

BifurcationReport detect_bifurcations(const Rational& lo, const Rational& hi, const Rational& tol, int resolution,
                                      const Rational& coarse_step) {
  if (!(lo > 0 && lo < hi && hi <= 1)) throw std::domain_error("detect_bifurcations: need 0 < lo < hi <= 1");
  if (tol <= 0 || coarse_step <= 0) throw std::domain_error("detect_bifurcations: tolerances must be positive");
  BifurcationReport report{lo, hi, tol, resolution, {}, {}, 0};
  std::map<Rational, Signature> cache;
  auto signature = [&](const Rational& g) {
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    Signature s{scan_section(g, resolution, {4, false, false}).labels()};
    cache.emplace(g, s);
    ++report.scans;
    return s;
  };

  std::function<void(const Rational&, const Rational&)> refine = [&](const Rational& a, const Rational& b) {
    const Signature sa = signature(a), sb = signature(b);
    if (sa == sb) return;
    if (b - a <= tol) {
      Threshold t;
      t.gamma = Interval(a, b);
      t.labels_below = sa.labels;
      t.labels_above = sb.labels;
      t.count_below = sa.labels.size();
      t.count_above = sb.labels.size();
      t.description = describe_change(sa.labels, sb.labels);
      report.thresholds.push_back(std::move(t));
      return;
    }
    const Rational mid = (a + b) / 2;
    refine(a, mid);
    refine(mid, b);
  };

  std::vector<Rational> grid{hi};
  while (grid.back() - coarse_step > lo) grid.push_back(grid.back() - coarse_step);
  grid.push_back(lo);
  for (std::size_t k = grid.size() - 1; k > 0; --k) {
    // At gamma = 1 the section shrinks to the single point (6, 4).
    if (signature(grid[k - 1]).labels.empty() || signature(grid[k]).labels.empty()) {
      std::ostringstream os;
      os << "section is empty at one end of [" << grid[k].get_d() << ", " << grid[k - 1].get_d()
         << "]; interval skipped";
      report.warnings.push_back(os.str());
      continue;
    }
    refine(grid[k], grid[k - 1]);
  }

  std::sort(report.thresholds.begin(), report.thresholds.end(),
            [](const Threshold& x, const Threshold& y) { return x.gamma.lo < y.gamma.lo; });
  for (std::size_t k = 1; k < report.thresholds.size(); ++k) {
    auto& prev = report.thresholds[k - 1];
    auto& cur = report.thresholds[k];
    if (cur.gamma.lo - prev.gamma.hi <= tol) {
      prev.coarse = cur.coarse = true;
      std::ostringstream os;
      os << "thresholds near " << prev.gamma.mid().get_d() << " and " << cur.gamma.mid().get_d()
         << " are not separated at resolution " << resolution;
      report.warnings.push_back(os.str());
    }
  }
  return report;
}

std::vector<Polyline> section_curves(const Rational& gamma, int resolution) {
  if (resolution < 16) throw std::domain_error("section_curves: resolution must be at least 16");
  const int n = resolution;
  const double g = gamma.get_d();
  std::vector<Polyline> out;
  auto to_ab = [&](double x, double y) {
    const ChartPoint cp = chart_point(g, x / n, y / n);
    return Point2{cp.a, cp.b};
  };
  // Boundary: the three sides of the parameter simplex.
  Polyline edge{"boundary", {}};
  for (int k = 0; k <= n; ++k) edge.points.push_back(to_ab(k, 0));
  for (int k = 1; k <= n; ++k) edge.points.push_back(to_ab(n - k, k));
  for (int k = 1; k <= n; ++k) edge.points.push_back(to_ab(0, n - k));
  out.push_back(edge);

  ContourGrid gs, gz;
  for (ContourGrid* grid : {&gs, &gz}) {
    grid->nx = grid->ny = n;
    grid->sign.assign((n + 1) * (n + 1), 0);
    grid->value.assign((n + 1) * (n + 1), 0.0);
    grid->masked.assign((n + 1) * (n + 1), 1);
  }
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i + j <= n; ++i) {
      const ChartPoint cp = chart_point(g, static_cast<double>(i) / n, static_cast<double>(j) / n);
      const SignTriple6 sg = invariants6_filtered(cp.a, cp.b, gamma);
      const int k = gs.index(i, j);
      gs.masked[k] = gz.masked[k] = 0;
      gs.sign[k] = sg.s;
      gz.sign[k] = sg.z;
      Param6 pt{from_double(cp.a), from_double(cp.b), gamma};
      gs.value[k] = s6(pt).get_d();
      gz.value[k] = z6(pt).get_d();
    }
  for (auto& l : marching_squares(gs, to_ab)) out.push_back({"s", std::move(l)});
  for (auto& l : marching_squares(gz, to_ab)) out.push_back({"z", std::move(l)});
  return out;
}

}  // namespace morsepoly
