#include "slopekit/polygon/newton_polygon.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "slopekit/error.hpp"

namespace slopekit::polygon {

namespace {

// Cross product sign of (b - a) x (c - a); > 0 means a left turn.
__int128 cross(const Point& a, const Point& b, const Point& c) {
  return static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
         static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

std::vector<Segment> segments_from_vertices(const std::vector<Point>& v) {
  std::vector<Segment> out;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const auto dx = v[i].x - v[i - 1].x;
    const Rational slope(v[i].y - v[i - 1].y, dx);
    if (!out.empty() && out.back().slope == slope) {
      out.back().width += dx;
    } else {
      out.push_back({slope, dx});
    }
  }
  return out;
}

}  // namespace

NewtonPolygon NewtonPolygon::make(std::vector<Segment> segments, bool allow_steep) {
  NewtonPolygon np;
  Rational y = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& seg = segments[i];
    require(seg.width > 0, ErrorKind::InvalidArgument,
            "segment " + std::to_string(i + 1) + " has nonpositive width");
    require(seg.slope >= 0 && (allow_steep || seg.slope <= 1), ErrorKind::InvalidArgument,
            "slope " + to_string(seg.slope) + " outside [0,1]");
    if (!np.segments_.empty()) {
      require(seg.slope >= np.segments_.back().slope, ErrorKind::NonConvex,
              "slope " + to_string(seg.slope) + " follows larger slope " +
                  to_string(np.segments_.back().slope));
    }
    y += seg.slope * seg.width;
    require(y.denominator() == 1, ErrorKind::NonIntegralBreakpoint,
            "breakpoint after segment " + std::to_string(i + 1) + " has ordinate " + to_string(y));
    if (!np.segments_.empty() && np.segments_.back().slope == seg.slope) {
      np.segments_.back().width += seg.width;
    } else {
      np.segments_.push_back(seg);
    }
  }
  return np;
}

NewtonPolygon NewtonPolygon::from_multiplicities(
    const std::vector<std::pair<Rational, std::int64_t>>& parts) {
  std::vector<Segment> segs;
  for (const auto& [slope, mult] : parts) {
    require(mult > 0, ErrorKind::InvalidArgument, "multiplicity must be positive");
    segs.push_back({slope, mult * slope.denominator()});
  }
  return make(std::move(segs));
}

NewtonPolygon NewtonPolygon::lower_hull(std::vector<Point> points) {
  require(!points.empty(), ErrorKind::InvalidArgument, "no points");
  std::sort(points.begin(), points.end());
  require(points.front() == Point{0, 0}, ErrorKind::InvalidArgument,
          "lower hull must start at (0,0)");
  std::vector<Point> uniq;
  for (const auto& pt : points) {
    if (!uniq.empty() && uniq.back().x == pt.x) continue;  // sorted: keeps min y
    uniq.push_back(pt);
  }
  std::vector<Point> hull;
  for (const auto& pt : uniq) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  NewtonPolygon np;
  np.segments_ = segments_from_vertices(hull);
  for (const auto& seg : np.segments_) {
    require(seg.slope >= 0, ErrorKind::InvalidArgument, "negative slope in lower hull");
  }
  return np;
}

NewtonPolygon NewtonPolygon::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    raise(ErrorKind::Parse, "polygon parse error at column " + std::to_string(pos + 1) + ": " + msg);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == ',' || text[pos] == ';'))
      ++pos;
  };
  std::vector<Segment> segs;
  skip_ws();
  if (pos == text.size()) fail("empty polygon");
  while (pos < text.size()) {
    bool paren = false;
    if (text[pos] == '(') {
      paren = true;
      ++pos;
      skip_ws();
    }
    const auto start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '/' || text[pos] == '-'))
      ++pos;
    if (start == pos) fail("expected a slope");
    Rational slope;
    try {
      slope = parse_rational(text.substr(start, pos - start));
    } catch (const Error&) {
      const std::string bad(text.substr(start, pos - start));
      pos = start;
      fail("bad slope '" + bad + "'");
    }
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size() || (text[pos] != 'x' && text[pos] != '*')) fail("expected 'x<width>'");
    ++pos;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const auto wstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (wstart == pos) fail("expected a width");
    const auto width = std::stoll(std::string(text.substr(wstart, pos - wstart)));
    skip_ws();
    if (paren) {
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
    }
    segs.push_back({slope, width});
    skip_ws();
  }
  return make(std::move(segs));
}

std::vector<Point> NewtonPolygon::breakpoints() const {
  std::vector<Point> out{{0, 0}};
  Rational y = 0;
  std::int64_t x = 0;
  for (const auto& seg : segments_) {
    x += seg.width;
    y += seg.slope * seg.width;
    out.push_back({x, y.numerator()});
  }
  return out;
}

Point NewtonPolygon::endpoint() const { return breakpoints().back(); }

Rational NewtonPolygon::value_at(Rational x) const {
  require(x >= 0 && x <= height(), ErrorKind::InvalidArgument,
          "abscissa " + to_string(x) + " outside polygon");
  Rational y = 0, cur = 0;
  for (const auto& seg : segments_) {
    if (x <= cur + seg.width) return y + seg.slope * (x - cur);
    cur += seg.width;
    y += seg.slope * seg.width;
  }
  return y;
}

std::vector<Rational> NewtonPolygon::slope_sequence() const {
  std::vector<Rational> out;
  for (const auto& seg : segments_) out.insert(out.end(), static_cast<std::size_t>(seg.width), seg.slope);
  return out;
}

std::int64_t NewtonPolygon::width_of(Rational slope) const {
  for (const auto& seg : segments_)
    if (seg.slope == slope) return seg.width;
  return 0;
}

Rational NewtonPolygon::min_slope() const {
  require(!segments_.empty(), ErrorKind::InvalidArgument, "empty polygon");
  return segments_.front().slope;
}

Rational NewtonPolygon::max_slope() const {
  require(!segments_.empty(), ErrorKind::InvalidArgument, "empty polygon");
  return segments_.back().slope;
}

std::string NewtonPolygon::to_compact() const {
  std::ostringstream os;
  if (segments_.size() == 1) {
    os << to_string(segments_[0].slope) << "x" << segments_[0].width;
    return os.str();
  }
  for (const auto& seg : segments_) os << "(" << to_string(seg.slope) << " x" << seg.width << ")";
  return os.str();
}

bool lies_on_or_below(const NewtonPolygon& nu1, const NewtonPolygon& nu2) {
  const auto e1 = nu1.endpoint(), e2 = nu2.endpoint();
  if (!(e1 == e2)) {
    raise(ErrorKind::EndpointMismatch, "endpoints (" + std::to_string(e1.x) + "," +
                                           std::to_string(e1.y) + ") and (" +
                                           std::to_string(e2.x) + "," + std::to_string(e2.y) +
                                           ") differ");
  }
  for (const auto& b : nu1.breakpoints())
    if (Rational(b.y) > nu2.value_at(b.x)) return false;
  for (const auto& b : nu2.breakpoints())
    if (nu1.value_at(b.x) > Rational(b.y)) return false;
  return true;
}

Comparison compare(const NewtonPolygon& a, const NewtonPolygon& b) {
  const bool ab = lies_on_or_below(a, b);
  const bool ba = lies_on_or_below(b, a);
  if (ab && ba) return Comparison::Equal;
  if (ab) return Comparison::Below;
  if (ba) return Comparison::Above;
  return Comparison::Incomparable;
}

const char* to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::Equal: return "equal";
    case Comparison::Below: return "below";
    case Comparison::Above: return "above";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

NewtonPolygon adjoin(const NewtonPolygon& np, Point point) {
  const auto end = np.endpoint();
  require(point.x > 0 && point.y >= 0 && point.y <= point.x, ErrorKind::InvalidArgument,
          "adjoined point must satisfy 0 < x and 0 <= y <= x");
  require(point.x <= end.x, ErrorKind::InvalidArgument,
          "adjoined point lies beyond the polygon endpoint");
  auto pts = np.breakpoints();
  pts.push_back(point);
  auto out = NewtonPolygon::lower_hull(std::move(pts));
  require(out.endpoint() == end, ErrorKind::InvalidArgument,
          "adjoined point makes the endpoint unreachable");
  require(out.max_slope() <= 1, ErrorKind::InvalidArgument,
          "adjoining (" + std::to_string(point.x) + "," + std::to_string(point.y) +
              ") forces a slope above 1");
  return out;
}

std::optional<AttainabilityWitness> attainable(const NewtonPolygon& np0, Rational lambda) {
  require(lambda >= 0 && lambda <= 1, ErrorKind::InvalidArgument, "slope outside [0,1]");
  if (np0.has_slope(lambda)) {
    raise(ErrorKind::NotApplicable, "slope " + to_string(lambda) + " already occurs in " +
                                        np0.to_compact());
  }
  const auto s = lambda.denominator(), r = lambda.numerator();
  Point base{0, 0};
  for (const auto& seg : np0.segments()) {
    if (seg.slope >= lambda) break;
    base.x += seg.width;
    base.y += (seg.slope * seg.width).numerator();
  }
  const auto end = np0.endpoint();
  const Point ins{base.x + s, base.y + r};
  bool ok = false;
  if (ins == end) {
    ok = true;
  } else if (ins.x < end.x) {
    const Rational chord(end.y - ins.y, end.x - ins.x);
    ok = lambda <= chord && chord <= 1;
  }
  if (!ok) return std::nullopt;
  auto pts = np0.breakpoints();
  pts.push_back(ins);
  return AttainabilityWitness{lambda, NewtonPolygon::lower_hull(std::move(pts)), base, ins};
}

bool is_symmetric(const NewtonPolygon& np) {
  const auto& segs = np.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& a = segs[i];
    const auto& b = segs[segs.size() - 1 - i];
    if (a.width != b.width || a.slope != 1 - b.slope) return false;
  }
  return true;
}

Point inv_np(std::int64_t g, Point pt) { return {2 * g - pt.x, g - pt.x + pt.y}; }

NewtonPolygon symmetric_adjoin(const NewtonPolygon& np, Rational lambda) {
  require(is_symmetric(np), ErrorKind::Precondition, np.to_compact() + " is not symmetric");
  const auto end = np.endpoint();
  require(end.x == 2 * end.y, ErrorKind::Precondition, "symmetric polygon must end at (2g, g)");
  if (lambda == Rational(1, 2)) {
    raise(ErrorKind::NotSymmetricallyAttainable, "slope 1/2 cannot be adjoined symmetrically");
  }
  require(lambda >= 0 && lambda < Rational(1, 2), ErrorKind::InvalidArgument,
          "symmetric adjoin expects a slope below 1/2");
  const Point pt{lambda.denominator(), lambda.numerator()};
  require(2 * pt.x <= end.x, ErrorKind::Precondition,
          "slope denominator exceeds half the height");
  auto pts = np.breakpoints();
  pts.push_back(pt);
  pts.push_back(inv_np(end.y, pt));
  return NewtonPolygon::lower_hull(std::move(pts));
}

NewtonPolygon np_of_valuations(const std::vector<std::optional<std::int64_t>>& vals) {
  require(!vals.empty() && vals.back().has_value(), ErrorKind::InvalidArgument,
          "constant coefficient must be nonzero");
  std::vector<Point> pts{{0, 0}};
  for (std::size_t x = 0; x < vals.size(); ++x) {
    if (vals[x]) pts.push_back({static_cast<std::int64_t>(x) + 1, *vals[x]});
  }
  return NewtonPolygon::lower_hull(std::move(pts));
}

}  // namespace slopekit::polygon
