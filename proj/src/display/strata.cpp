#include "slopekit/display/strata.hpp"

#include <algorithm>

#include "slopekit/error.hpp"

namespace slopekit::display {

const std::vector<Point>& Stratification::layer(int j) const {
  static const std::vector<Point> empty;
  auto it = layers.find(j);
  return it == layers.end() ? empty : it->second;
}

std::vector<Point> Stratification::Q(int l) const {
  std::vector<Point> out;
  const Point sr{s(), r()};
  for (const auto& [j, pts] : layers) {
    if (j < 0 || j > l) continue;
    for (const auto& pt : pts)
      if (!(pt == sr)) out.push_back(pt);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> parallelogram(int d, int c) {
  require(d >= 1 && c >= 1, ErrorKind::InvalidArgument, "parallelogram needs d, c >= 1");
  std::vector<Point> out;
  for (int y = 0; y < c; ++y)
    for (int x = y + 1; x <= y + d; ++x) out.push_back({x, y});
  return out;
}

bool on_or_above(const NewtonPolygon& np, Point pt) {
  if (pt.x < 0 || pt.x > np.height()) return false;
  return Rational(pt.y) >= np.value_at(pt.x);
}

namespace {

Stratification build(int d, int c, Rational lambda, NewtonPolygon np_star) {
  Stratification st;
  st.d = d;
  st.c = c;
  st.lambda = lambda;
  st.np_star = std::move(np_star);
  st.P = parallelogram(d, c);
  for (const auto& pt : st.P) {
    if (!on_or_above(st.np_star, pt)) continue;
    st.P_star.push_back(pt);
    st.layers[layer_index(lambda, pt)].push_back(pt);
  }
  return st;
}

void check_base(int d, int c, const NewtonPolygon& np0, Rational lambda) {
  require(d >= 1 && c >= 1, ErrorKind::InvalidArgument, "strata need d, c >= 1");
  require(np0.endpoint() == Point{d + c, c}, ErrorKind::InvalidArgument,
          "base polygon " + np0.to_compact() + " does not end at (h, c)");
  require(lambda > 0 && lambda < 1, ErrorKind::InvalidArgument, "slope must lie in (0,1)");
  require(lambda.denominator() <= d + c, ErrorKind::InvalidArgument,
          "slope denominator exceeds the height");
}

}  // namespace

Stratification strata(int d, int c, const NewtonPolygon& np0, Rational lambda) {
  check_base(d, c, np0, lambda);
  auto pts = np0.breakpoints();
  pts.push_back({lambda.denominator(), lambda.numerator()});
  return build(d, c, lambda, NewtonPolygon::lower_hull(std::move(pts)));
}

std::pair<int, int> inv_M(int g, std::pair<int, int> ij) { return {ij.second - g, ij.first + g}; }

PolarizedStratification pol_strata(int g, const NewtonPolygon& np0, Rational lambda) {
  check_base(g, g, np0, lambda);
  PolarizedStratification out;
  out.strata = build(g, g, lambda, polygon::symmetric_adjoin(np0, lambda));
  std::set<Point> seen;
  for (const auto& pt : out.strata.P_star) {
    if (seen.count(pt)) continue;
    const auto img = polygon::inv_np(g, pt);
    std::vector<Point> cls{pt};
    seen.insert(pt);
    if (!(img == pt)) {
      cls.push_back(img);
      seen.insert(img);
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace slopekit::display
