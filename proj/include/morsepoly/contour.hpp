#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace morsepoly {

using Point2 = std::pair<double, double>;

struct Polyline {
  std::string tag;
  std::vector<Point2> points;
};

// Node (i, j), 0 <= i <= nx, 0 <= j <= ny, stored at j*(nx+1)+i. Topology comes
// from `sign` (exact where available); `value` only places the crossing along an edge.
struct ContourGrid {
  int nx = 0, ny = 0;
  std::vector<int> sign;
  std::vector<double> value;
  // Nodes outside the domain of interest; cells touching them are skipped.
  std::vector<char> masked;

  int index(int i, int j) const { return j * (nx + 1) + i; }
};

// Zero level set as joined polylines, mapped from fractional grid coordinates.
std::vector<std::vector<Point2>> marching_squares(const ContourGrid& grid,
                                                  const std::function<Point2(double, double)>& map);

}  // namespace morsepoly
