#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slopekit/rational.hpp"

namespace slopekit::polygon {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;
};

/// A slope together with its horizontal width. For slope r/s in lowest
/// terms the width is a multiple of s.
struct Segment {
  Rational slope;
  std::int64_t width = 0;
  bool operator==(const Segment&) const = default;
};

/// Lower convex polygon from (0,0) with integral breakpoints.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;

  /// Normalizes: merges equal adjacent slopes. Throws NonConvex when the
  /// slopes decrease, NonIntegralBreakpoint when a breakpoint is not a
  /// lattice point, InvalidArgument for nonpositive widths or slopes
  /// outside [0,1] (unless allow_steep).
  static NewtonPolygon make(std::vector<Segment> segments, bool allow_steep = false);
  /// Segments given as (slope, multiplicity); the width of r/s is s times
  /// the multiplicity.
  static NewtonPolygon from_multiplicities(
      const std::vector<std::pair<Rational, std::int64_t>>& parts);
  /// Lower convex hull of points; the leftmost point must be (0,0).
  /// Slopes are not restricted to [0,1].
  static NewtonPolygon lower_hull(std::vector<Point> points);
  /// Parses "1/2x6" or "(1/3 x3)(2/3 x3)"; throws Parse with the column.
  static NewtonPolygon parse(std::string_view text);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  std::vector<Point> breakpoints() const;
  Point endpoint() const;
  std::int64_t height() const { return endpoint().x; }
  /// Value at an abscissa in [0, height].
  Rational value_at(Rational x) const;
  /// Slopes with repetition, one per unit of width (lambda_1 <= ... <= lambda_h).
  std::vector<Rational> slope_sequence() const;
  /// Width carried by a slope; zero if absent.
  std::int64_t width_of(Rational slope) const;
  bool has_slope(Rational slope) const { return width_of(slope) > 0; }
  Rational min_slope() const;
  Rational max_slope() const;

  /// "(1/3 x3)(2/3 x3)", or "1/2x6" for a single slope.
  std::string to_compact() const;

  bool operator==(const NewtonPolygon&) const = default;

 private:
  std::vector<Segment> segments_;
};

/// nu1 lies on or below nu2 (nu1 specializes from nu2). Throws
/// EndpointMismatch when the endpoints differ.
bool lies_on_or_below(const NewtonPolygon& nu1, const NewtonPolygon& nu2);

enum class Comparison { Equal, Below, Above, Incomparable };
/// Below means a lies on or below b and differs from it.
Comparison compare(const NewtonPolygon& a, const NewtonPolygon& b);
const char* to_string(Comparison c) noexcept;
using slopekit::to_string;

/// Lower convex hull of the breakpoints of np together with extra points.
NewtonPolygon adjoin(const NewtonPolygon& np, Point point);

struct AttainabilityWitness {
  Rational lambda;
  NewtonPolygon witness;
  /// End of the preserved initial part (slopes < lambda).
  Point base;
  /// base + (s, r).
  Point inserted;
};

/// Attainability of lambda = r/s from np0 with multiplicity one, keeping
/// the part of np0 of slope < lambda. Throws NotApplicable when lambda is
/// already a slope of np0.
std::optional<AttainabilityWitness> attainable(const NewtonPolygon& np0, Rational lambda);

bool is_symmetric(const NewtonPolygon& np);
/// (2g - x, g - x + y).
Point inv_np(std::int64_t g, Point pt);
/// Hull adjoining (s,r) and its image under inv_np. Requires np symmetric
/// with endpoint (2g, g) and lambda < 1/2; lambda = 1/2 throws
/// NotSymmetricallyAttainable.
NewtonPolygon symmetric_adjoin(const NewtonPolygon& np, Rational lambda);

/// Newton polygon of a monic polynomial of degree h whose coefficient of
/// F^{h-x} has valuation vals[x-1] (nullopt for zero).
NewtonPolygon np_of_valuations(const std::vector<std::optional<std::int64_t>>& vals);

}  // namespace slopekit::polygon
