#include "morsepoly/contour.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

namespace morsepoly {

namespace {

// Edge id: horizontal edges (i,j)-(i+1,j) even, vertical (i,j)-(i,j+1) odd.
std::int64_t edge_key(int i, int j, bool vertical, int nx) {
  return (static_cast<std::int64_t>(j) * (nx + 1) + i) * 2 + (vertical ? 1 : 0);
}

}  // namespace

std::vector<std::vector<Point2>> marching_squares(const ContourGrid& g,
                                                  const std::function<Point2(double, double)>& map) {
  auto high = [&](int i, int j) { return g.sign[g.index(i, j)] >= 0; };
  auto val = [&](int i, int j) { return g.value[g.index(i, j)]; };
  auto masked = [&](int i, int j) { return !g.masked.empty() && g.masked[g.index(i, j)]; };

  std::map<std::int64_t, Point2> where;
  std::vector<std::pair<std::int64_t, std::int64_t>> segments;

  auto crossing = [&](int i0, int j0, int i1, int j1) {
    double v0 = val(i0, j0), v1 = val(i1, j1);
    double t = 0.5;
    if ((v0 < 0) != (v1 < 0) && v0 != v1) t = std::clamp(v0 / (v0 - v1), 0.0, 1.0);
    return Point2{i0 + t * (i1 - i0), j0 + t * (j1 - j0)};
  };

  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      if (masked(i, j) || masked(i + 1, j) || masked(i, j + 1) || masked(i + 1, j + 1)) continue;
      const bool c0 = high(i, j), c1 = high(i + 1, j), c2 = high(i + 1, j + 1), c3 = high(i, j + 1);
      // Edges: 0 bottom, 1 right, 2 top, 3 left.
      std::array<std::int64_t, 4> key = {edge_key(i, j, false, g.nx), edge_key(i + 1, j, true, g.nx),
                                         edge_key(i, j + 1, false, g.nx), edge_key(i, j, true, g.nx)};
      std::array<bool, 4> cut = {c0 != c1, c1 != c2, c2 != c3, c3 != c0};
      if (cut[0]) where.emplace(key[0], crossing(i, j, i + 1, j));
      if (cut[1]) where.emplace(key[1], crossing(i + 1, j, i + 1, j + 1));
      if (cut[2]) where.emplace(key[2], crossing(i, j + 1, i + 1, j + 1));
      if (cut[3]) where.emplace(key[3], crossing(i, j, i, j + 1));
      int n = cut[0] + cut[1] + cut[2] + cut[3];
      if (n == 2) {
        std::int64_t ends[2];
        int k = 0;
        for (int e = 0; e < 4; ++e)
          if (cut[e]) ends[k++] = key[e];
        segments.emplace_back(ends[0], ends[1]);
      } else if (n == 4) {
        // Saddle: the center value decides which corners connect.
        const double center = (val(i, j) + val(i + 1, j) + val(i + 1, j + 1) + val(i, j + 1)) / 4;
        if ((center >= 0) == c0) {
          segments.emplace_back(key[0], key[1]);
          segments.emplace_back(key[2], key[3]);
        } else {
          segments.emplace_back(key[0], key[3]);
          segments.emplace_back(key[1], key[2]);
        }
      }
    }

  std::map<std::int64_t, std::vector<std::size_t>> incident;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    incident[segments[s].first].push_back(s);
    incident[segments[s].second].push_back(s);
  }
  std::vector<char> used(segments.size(), 0);
  std::vector<std::vector<Point2>> lines;

  auto walk = [&](std::size_t s, std::int64_t from) {
    std::vector<std::int64_t> chain{from};
    std::int64_t at = from;
    while (true) {
      used[s] = 1;
      at = segments[s].first == at ? segments[s].second : segments[s].first;
      chain.push_back(at);
      std::size_t next = segments.size();
      for (std::size_t t : incident[at])
        if (!used[t]) next = t;
      if (next == segments.size()) break;
      s = next;
    }
    std::vector<Point2> pts;
    for (auto e : chain) {
      auto [x, y] = where.at(e);
      pts.push_back(map(x, y));
    }
    lines.push_back(std::move(pts));
  };

  // Open chains first (start at an endpoint with a single segment), then loops.
  for (auto& [e, segs] : incident)
    if (segs.size() == 1 && !used[segs[0]]) walk(segs[0], e);
  for (std::size_t s = 0; s < segments.size(); ++s)
    if (!used[s]) walk(s, segments[s].first);
  return lines;
}

}  // namespace morsepoly
