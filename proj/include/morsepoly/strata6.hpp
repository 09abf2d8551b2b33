#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "morsepoly/contour.hpp"
#include "morsepoly/interval.hpp"
#include "morsepoly/morse.hpp"

namespace morsepoly {

// p' = x q(x), q = x^4 + 4x^3 + a x^2 + b x + c
struct Param6 {
  Rational a, b, c;
};

Rational d6(const Param6& pt);
Rational s6(const Param6& pt);
Rational z6(const Param6& pt);

struct SignTriple6 {
  int d, s, z;
  friend bool operator==(const SignTriple6&, const SignTriple6&) = default;
};
SignTriple6 invariants6(const Param6& pt);

// Same signs at (a, b) given as doubles (taken exactly) and rational c. A
// floating-point evaluation with a rigorous error bound decides most points;
// the rest fall back to exact arithmetic.
SignTriple6 invariants6_filtered(double a, double b, const Rational& c);

Polynomial q6(const Param6& pt);
// Monic degree-6 p with p(0) = 0 and p' = 6 x q.
Polynomial p6(const Param6& pt);

// q has four distinct real roots (exact Sturm count).
bool in_main_triangle(const Param6& pt);

// Coordinates on the main triangle at c = gamma. The roots of q are -y with
// y = 1 + t*omega, omega a convex combination (l1, l2, 1-l1-l2) of the three
// vertex directions and t fixed by prod y = gamma. Vertex directions: one
// triple root below the simple one, two double roots, one triple root above.
struct ChartPoint {
  std::array<double, 4> y;  // descending
  double a = 0, b = 0;
  double t = 0;
};
ChartPoint chart_point(double gamma, double l1, double l2);

struct SectionCell {
  int i = 0, j = 0;        // chart indices; center at ((i+1/2)/N, (j+1/2)/N)
  double a = 0, b = 0;
  SignTriple6 signs{};
  bool in_triangle = false;
  int label = 0;            // number of the passport in the order-5 list, 0 on a curve
  std::uint32_t support = 0;  // bit L set when passport L occurs in the cell
  int component = -1;       // domain of the center label
};

struct SectionComponent {
  int id = 0;
  Param6 representative;
  PassportOutcome outcome;
  int label = 0;
  std::size_t cells = 0;    // cells meeting the domain
  std::size_t core = 0;     // cells whose center lies in the domain
  std::vector<PassportOutcome> samples;
  bool consistent = true;   // all samples agree with the outcome
};

struct SectionScan {
  Rational gamma;
  int resolution = 0;
  std::vector<SectionCell> cells;
  std::vector<SectionComponent> components;

  std::vector<int> labels() const;  // sorted multiset of component labels
};

struct ScanOptions {
  // Cells next to a label change are resampled on a 2^d x 2^d subgrid.
  int refine_depth = 4;
  // Confirm center labels against the exact signs of s and z.
  bool exact_signs = true;
  // Exact passports at representatives and samples.
  bool representatives = true;
};

SectionScan scan_section(const Rational& gamma, int resolution, const ScanOptions& options = {});

std::set<Passport> passports_present(const Rational& gamma, int resolution);

struct Threshold {
  Interval gamma;
  std::size_t count_below = 0, count_above = 0;
  std::vector<int> labels_below, labels_above;
  std::string description;
  bool coarse = false;
};

struct BifurcationReport {
  Rational lo, hi, tol;
  int resolution = 0;
  std::vector<Threshold> thresholds;  // ascending in gamma
  std::vector<std::string> warnings;
  int scans = 0;                      // sections computed
};

BifurcationReport detect_bifurcations(const Rational& lo, const Rational& hi, const Rational& tol, int resolution,
                                      const Rational& coarse_step = frac(1, 200));

// Plot geometry in the (a, b) plane: triangle boundary, s = 0 and z = 0.
std::vector<Polyline> section_curves(const Rational& gamma, int resolution);

}  // namespace morsepoly
