#pragma once

#include <map>
#include <set>
#include <vector>

#include "slopekit/polygon/newton_polygon.hpp"

namespace slopekit::display {

using polygon::NewtonPolygon;
using polygon::Point;

/// Lattice data driving the deformation: the parallelogram P, the points
/// on or above np(*), and their layers j = s*y - r*x.
struct Stratification {
  int d = 0, c = 0;
  Rational lambda;
  NewtonPolygon np_star;
  std::vector<Point> P;
  std::vector<Point> P_star;
  std::map<int, std::vector<Point>> layers;

  int h() const noexcept { return d + c; }
  int s() const noexcept { return static_cast<int>(lambda.denominator()); }
  int r() const noexcept { return static_cast<int>(lambda.numerator()); }
  const std::vector<Point>& layer(int j) const;
  /// Union of layers 0..l without (s, r).
  std::vector<Point> Q(int l) const;
  bool operator==(const Stratification&) const = default;
};

/// Rows y in [0, c-1], each holding x in [y+1, y+d].
std::vector<Point> parallelogram(int d, int c);
/// Layer index s*y - r*x.
inline int layer_index(Rational lambda, Point pt) {
  return static_cast<int>(lambda.denominator() * pt.y - lambda.numerator() * pt.x);
}
bool on_or_above(const NewtonPolygon& np, Point pt);

/// np0 must end at (d + c, c). np(*) is the hull of np0 and (s, r); no
/// attainability check is made here.
Stratification strata(int d, int c, const NewtonPolygon& np0, Rational lambda);

/// (j - g, i + g).
std::pair<int, int> inv_M(int g, std::pair<int, int> ij);

struct PolarizedStratification {
  Stratification strata;
  /// Inv_np orbits inside P(*)_pol (size 1 or 2).
  std::vector<std::vector<Point>> classes;
};

/// Uses the symmetric hull of np0, (s,r) and its Inv_np image.
PolarizedStratification pol_strata(int g, const NewtonPolygon& np0, Rational lambda);

}  // namespace slopekit::display
