#pragma once

#include <array>
#include <string>
#include <vector>

#include "morsepoly/contour.hpp"
#include "morsepoly/interval.hpp"
#include "morsepoly/morse.hpp"

namespace morsepoly {

// p' = x^4 + 3x^3 + b x^2 + c x = x q(x)
struct Param5 {
  Rational b, c;
};

Rational dq5(const Rational& b, const Rational& c);
Rational g5(const Rational& b, const Rational& c);
Rational h5(const Rational& b, const Rational& c);
double dq5(double b, double c);
double g5(double b, double c);
double h5(double b, double c);

Polynomial q5(const Param5& pt);
// Monic degree-5 p with p(0) = 0 and p' = 5 x q.
Polynomial p5(const Param5& pt);

struct SignTriple5 {
  int dq, g, h;
  friend bool operator==(const SignTriple5&, const SignTriple5&) = default;
};
SignTriple5 invariants5(const Param5& pt);

enum class Region5 { OAF, AEF, ODF, DEF, BDE };
enum class Arc5 { AF, OF, DF, EF, DE };

struct Stratum5 {
  enum class Kind { Region, Arc, Junction, Outside } kind = Kind::Outside;
  Region5 region{};
  Arc5 arc{};
  Passport passport;             // Region only
  int degenerate_index = 0;      // Arc only
  std::vector<int> pattern;      // Arc only
  std::string name;              // "OAF", "AF", "F", "outside"
};

const Passport& region_passport(Region5 r);
std::string region_name(Region5 r);
std::string arc_name(Arc5 a);
int arc_degenerate_index(Arc5 a);
const std::vector<int>& arc_pattern(Arc5 a);

Stratum5 classify5(const Param5& pt);

// Inside the curvilinear triangle OAB: b, c > 0 and q has three distinct real roots.
bool inside_oab(const Param5& pt);

struct Landmark5 {
  std::string name;
  Rational b, c;            // exact, or the box center for F
  Interval b_box, c_box;    // degenerate intervals for the exact points
};

// O, A, B, D, E exact; F certified to a box of the given width.
std::vector<Landmark5> landmarks5(const Rational& f_width = frac(1, 100000000));
Landmark5 landmark_f(const Rational& width);

// One rational point per region, each checked against a direct passport in the tests.
std::array<std::pair<Region5, Param5>, 5> calibration_points5();

// Zero sets of dq, g, h on [0,3] x [0,1].
std::vector<Polyline> trace_curves5(int resolution);

}  // namespace morsepoly
