#include "morsepoly/strata5.hpp"

#include <cmath>
#include <stdexcept>

#include "morsepoly/contour.hpp"
#include "morsepoly/roots.hpp"

namespace morsepoly {

Rational dq5(const Rational& b, const Rational& c) {
  return 54 * b * c - 108 * c - 4 * b * b * b + 9 * b * b - 27 * c * c;
}
Rational g5(const Rational& b, const Rational& c) {
  return 128 * b * b * b - 1998 * b * b - 216 * c * c + 1512 * b * c + 3645 * b - 729 * c;
}
Rational h5(const Rational& b, const Rational& c) {
  return 640 * b * b * b - 1350 * b * b + 5832 * c * c - 9720 * b * c + 18225 * c;
}
double dq5(double b, double c) { return 54 * b * c - 108 * c - 4 * b * b * b + 9 * b * b - 27 * c * c; }
double g5(double b, double c) {
  return 128 * b * b * b - 1998 * b * b - 216 * c * c + 1512 * b * c + 3645 * b - 729 * c;
}
double h5(double b, double c) {
  return 640 * b * b * b - 1350 * b * b + 5832 * c * c - 9720 * b * c + 18225 * c;
}

namespace {

// dh/dc; negative on the lower branch of h = 0 (arc DE), positive on the upper one.
Rational hc5(const Rational& b, const Rational& c) { return 11664 * c + 18225 - 9720 * b; }

Interval ig5(const Interval& b, const Interval& c) {
  return Rational(128) * (b * b * b) - Rational(1998) * (b * b) - Rational(216) * (c * c) +
         Rational(1512) * (b * c) + Rational(3645) * b - Rational(729) * c;
}
Interval ih5(const Interval& b, const Interval& c) {
  return Rational(640) * (b * b * b) - Rational(1350) * (b * b) + Rational(5832) * (c * c) -
         Rational(9720) * (b * c) + Rational(18225) * c;
}

struct Jacobian {
  Interval gb, gc, hb, hc;
};

Jacobian jacobian(const Interval& b, const Interval& c) {
  return {Rational(384) * (b * b) - Rational(3996) * b + Rational(1512) * c + Interval(Rational(3645)),
          Rational(-432) * c + Rational(1512) * b - Interval(Rational(729)),
          Rational(1920) * (b * b) - Rational(2700) * b - Rational(9720) * c,
          Rational(11664) * c - Rational(9720) * b + Interval(Rational(18225))};
}

}  // namespace

Polynomial q5(const Param5& pt) { return Polynomial({pt.c, pt.b, 3, 1}); }

Polynomial p5(const Param5& pt) {
  return integrate_from_zero(Polynomial({0, pt.c, pt.b, 3, 1})) * Rational(5);
}

SignTriple5 invariants5(const Param5& pt) {
  return {sign(dq5(pt.b, pt.c)), sign(g5(pt.b, pt.c)), sign(h5(pt.b, pt.c))};
}

const Passport& region_passport(Region5 r) {
  static const Passport table[] = {{4, 2, 3, 1}, {3, 2, 4, 1}, {4, 1, 3, 2}, {3, 1, 4, 2}, {2, 1, 4, 3}};
  return table[static_cast<int>(r)];
}

std::string region_name(Region5 r) {
  static const char* names[] = {"OAF", "AEF", "ODF", "DEF", "BDE"};
  return names[static_cast<int>(r)];
}

std::string arc_name(Arc5 a) {
  static const char* names[] = {"AF", "OF", "DF", "EF", "DE"};
  return names[static_cast<int>(a)];
}

int arc_degenerate_index(Arc5 a) {
  static const int idx[] = {2, 3, 1, 4, 5};
  return idx[static_cast<int>(a)];
}

const std::vector<int>& arc_pattern(Arc5 a) {
  static const std::vector<int> pats[] = {{3, 2, 3, 1}, {3, 1, 2, 1}, {3, 1, 3, 2}, {2, 1, 3, 1}, {2, 1, 3, 2}};
  return pats[static_cast<int>(a)];
}

bool inside_oab(const Param5& pt) {
  if (pt.b <= 0 || pt.c <= 0) return false;
  if (dq5(pt.b, pt.c) <= 0) return false;
  return count_distinct_real_roots(q5(pt)) == 3;
}

Landmark5 landmark_f(const Rational& width) {
  if (width <= 0) throw std::domain_error("landmark width must be positive");
  // Newton in doubles from the seed, then exact Newton steps to go below double precision.
  double b = 2.73, c = 0.72;
  for (int it = 0; it < 50; ++it) {
    const double gb = 384 * b * b - 3996 * b + 1512 * c + 3645, gc = -432 * c + 1512 * b - 729;
    const double hb = 1920 * b * b - 2700 * b - 9720 * c, hcv = 11664 * c - 9720 * b + 18225;
    const double det = gb * hcv - gc * hb;
    const double db = (g5(b, c) * hcv - gc * h5(b, c)) / det;
    const double dc = (gb * h5(b, c) - hb * g5(b, c)) / det;
    b -= db;
    c -= dc;
    if (!std::isfinite(b) || !std::isfinite(c) || std::abs(b) > 10 || std::abs(c) > 10)
      throw std::runtime_error("Newton diverged while locating F");
    if (std::abs(db) + std::abs(dc) < 1e-15) break;
  }
  Rational mb = from_double(b), mc = from_double(c);
  const Rational snap = std::min(width, Rational(1, 1000000000000L)) / 100000000;
  for (int it = 0; it < 12; ++it) {
    Jacobian j = jacobian(Interval(mb), Interval(mc));
    const Rational det = j.gb.lo * j.hc.lo - j.gc.lo * j.hb.lo;
    const Rational gv = g5(mb, mc), hv = h5(mb, mc);
    const Rational db = (gv * j.hc.lo - j.gc.lo * hv) / det, dc = (j.gb.lo * hv - j.hb.lo * gv) / det;
    mb = simplest_between(mb - db - snap / 4, mb - db + snap / 4);
    mc = simplest_between(mc - dc - snap / 4, mc - dc + snap / 4);
    if (abs_value(db) + abs_value(dc) < snap) break;
  }

  // Krawczyk: K = m - Y f(m) + (I - Y J(X))(X - m) inside X proves a unique zero in X.
  const Rational r = width / 2;
  const Interval X(mb - r, mb + r), Yc(mc - r, mc + r);
  Jacobian jm = jacobian(Interval(mb), Interval(mc));
  const Rational det = jm.gb.lo * jm.hc.lo - jm.gc.lo * jm.hb.lo;
  const Rational y11 = jm.hc.lo / det, y12 = -jm.gc.lo / det, y21 = -jm.hb.lo / det, y22 = jm.gb.lo / det;
  const Rational fg = g5(mb, mc), fh = h5(mb, mc);
  Jacobian jx = jacobian(X, Yc);
  const Interval db(-r, r), dc(-r, r);
  const Interval one(Rational(1)), zero(Rational(0));
  const Interval m11 = one - (y11 * jx.gb + y12 * jx.hb), m12 = zero - (y11 * jx.gc + y12 * jx.hc);
  const Interval m21 = zero - (y21 * jx.gb + y22 * jx.hb), m22 = one - (y21 * jx.gc + y22 * jx.hc);
  const Interval kb = Interval(mb - (y11 * fg + y12 * fh)) + m11 * db + m12 * dc;
  const Interval kc = Interval(mc - (y21 * fg + y22 * fh)) + m21 * db + m22 * dc;
  if (!kb.inside_open(X) || !kc.inside_open(Yc)) throw std::runtime_error("could not certify F");
  return {"F", mb, mc, X, Yc};
}

std::vector<Landmark5> landmarks5(const Rational& f_width) {
  auto exact = [](const char* n, Rational b, Rational c) {
    return Landmark5{n, b, c, Interval(b), Interval(c)};
  };
  return {exact("O", 0, 0),
          exact("A", 3, 1),
          exact("B", frac(9, 4), 0),
          exact("D", frac(135, 64), 0),
          exact("E", frac(45, 16), frac(25, 32)),
          landmark_f(f_width)};
}

namespace {

const Landmark5& cached_f() {
  static const Landmark5 f = landmark_f(frac(1, 100000000));
  return f;
}

// -1 below, +1 above the F coordinate, 0 if inside every box tried.
int side_of_f(const Rational& x, bool along_c) {
  Landmark5 f = cached_f();
  for (int depth = 0; depth < 4; ++depth) {
    const Interval& box = along_c ? f.c_box : f.b_box;
    if (x < box.lo) return -1;
    if (x > box.hi) return 1;
    f = landmark_f(pow(Rational(1, 100000000), static_cast<unsigned>(depth + 2)));
  }
  return 0;
}

Stratum5 arc(Arc5 a) {
  Stratum5 s;
  s.kind = Stratum5::Kind::Arc;
  s.arc = a;
  s.name = arc_name(a);
  s.degenerate_index = arc_degenerate_index(a);
  s.pattern = arc_pattern(a);
  return s;
}

Stratum5 region(Region5 r) {
  Stratum5 s;
  s.kind = Stratum5::Kind::Region;
  s.region = r;
  s.name = region_name(r);
  s.passport = region_passport(r);
  return s;
}

Stratum5 junction() {
  Stratum5 s;
  s.kind = Stratum5::Kind::Junction;
  s.name = "F";
  return s;
}

}  // namespace

Stratum5 classify5(const Param5& pt) {
  if (!inside_oab(pt)) {
    Stratum5 s;
    s.name = "outside";
    return s;
  }
  const int sg = sign(g5(pt.b, pt.c)), sh = sign(h5(pt.b, pt.c));
  const int shc = sign(hc5(pt.b, pt.c));
  if (sg == 0 && sh == 0) return junction();
  if (sg == 0) {
    int side = side_of_f(pt.c, true);
    if (side == 0) return junction();
    return arc(side > 0 ? Arc5::AF : Arc5::DF);
  }
  if (sh == 0) {
    if (shc < 0) return arc(Arc5::DE);
    int side = side_of_f(pt.b, false);
    if (side == 0) return junction();
    return arc(side < 0 ? Arc5::OF : Arc5::EF);
  }
  if (sg > 0) return region(sh < 0 ? Region5::ODF : Region5::OAF);
  if (sh < 0) return region(Region5::DEF);
  return region(shc < 0 ? Region5::BDE : Region5::AEF);
}

std::array<std::pair<Region5, Param5>, 5> calibration_points5() {
  return {{{Region5::OAF, {frac(29, 10), frac(9, 10)}},
           {Region5::AEF, {frac(71, 25), frac(41, 50)}},
           {Region5::ODF, {frac(9, 5), frac(19, 100)}},
           {Region5::DEF, {frac(66, 25), frac(31, 50)}},
           {Region5::BDE, {frac(12, 5), frac(7, 25)}}}};
}

namespace {

// A c^2 + B(b) c + C(b) = 0, the shape shared by dq, g and h.
struct QuadraticInC {
  const char* tag;
  Rational a;
  Polynomial b_coef, c_coef;  // polynomials in b
};

double eval_d(const Polynomial& p, double x) { return eval_approx(p, x); }

}  // namespace

std::vector<Polyline> trace_curves5(int resolution) {
  if (resolution < 16) throw std::domain_error("trace_curves5: resolution must be at least 16");
  const QuadraticInC curves[] = {
      {"dq", -27, Polynomial({-108, 54}), Polynomial({0, 0, 9, -4})},
      {"g", -216, Polynomial({-729, 1512}), Polynomial({0, 3645, -1998, 128})},
      {"h", 5832, Polynomial({18225, -9720}), Polynomial({0, 0, -1350, 640})},
  };
  std::vector<Polyline> out;
  for (const auto& cv : curves) {
    // Branches exist where the discriminant in c is nonnegative; its roots are the folds.
    const Polynomial disc = cv.b_coef * cv.b_coef - cv.c_coef * Rational(4 * cv.a);
    std::vector<double> cuts{0.0, 3.0};
    for (const auto& r : isolate_real_roots(disc)) {
      double x = refine_root(disc, r, frac(1, 1000000000000000L)).approx();
      if (x > 0 && x < 3) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double lo = cuts[k], hi = cuts[k + 1];
      if (eval_d(disc, (lo + hi) / 2) < 0) continue;
      const int steps = std::max(2, static_cast<int>(std::ceil(resolution * (hi - lo) / 3)));
      std::vector<Point2> minus, plus;
      for (int s = 0; s <= steps; ++s) {
        const double b = lo + (hi - lo) * s / steps;
        const double A = cv.a.get_d(), B = eval_d(cv.b_coef, b), C = eval_d(cv.c_coef, b);
        const double root = std::sqrt(std::max(0.0, B * B - 4 * A * C));
        minus.emplace_back(b, (-B - root) / (2 * A));
        plus.emplace_back(b, (-B + root) / (2 * A));
      }
      // Walk one branch out and the other back so the fold joins them.
      std::vector<Point2> loop(minus.begin(), minus.end());
      loop.insert(loop.end(), plus.rbegin(), plus.rend());
      Polyline current{cv.tag, {}};
      for (auto [b, c] : loop) {
        if (c >= 0 && c <= 1) {
          current.points.emplace_back(b, c);
        } else if (!current.points.empty()) {
          if (current.points.size() > 1) out.push_back(current);
          current.points.clear();
        }
      }
      if (current.points.size() > 1) out.push_back(current);
    }
  }
  return out;
}

}  // namespace morsepoly
