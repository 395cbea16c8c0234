#pragma once

// All lower convex polygons from (0,0) to (h,e) with slopes in [0,1] and
// lattice vertices, by direct recursion over vertex sequences.

#include <vector>

#include "slopekit/polygon/newton_polygon.hpp"

namespace oracle {

using slopekit::Rational;
using slopekit::polygon::NewtonPolygon;
using slopekit::polygon::Segment;

inline void enumerate_rec(std::int64_t x, std::int64_t y, Rational last, std::int64_t h,
                          std::int64_t e, std::vector<Segment>& cur,
                          std::vector<NewtonPolygon>& out) {
  if (x == h) {
    if (y == e) out.push_back(NewtonPolygon::make(cur));
    return;
  }
  for (std::int64_t nx = x + 1; nx <= h; ++nx) {
    for (std::int64_t ny = y; ny <= y + (nx - x) && ny <= e; ++ny) {
      const Rational slope(ny - y, nx - x);
      if (!cur.empty() && slope <= last) continue;
      // A vertex only if the segment cannot be extended with the same slope
      // through a lattice point; that is handled by requiring strictly
      // increasing slopes, so each polygon appears once.
      cur.push_back({slope, nx - x});
      enumerate_rec(nx, ny, slope, h, e, cur, out);
      cur.pop_back();
    }
  }
}

inline std::vector<NewtonPolygon> all_polygons(std::int64_t h, std::int64_t e) {
  std::vector<NewtonPolygon> out;
  std::vector<Segment> cur;
  enumerate_rec(0, 0, Rational(-1), h, e, cur, out);
  return out;
}

}  // namespace oracle
