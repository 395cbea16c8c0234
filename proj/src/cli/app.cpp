#include "slopekit/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "slopekit/error.hpp"
#include "slopekit/io/json.hpp"
#include "slopekit/monodromy/artin_schreier.hpp"

namespace slopekit::cli {

namespace {

using arith::FiniteField;
using io::Json;
using polygon::NewtonPolygon;
using polygon::Point;
using Elem = FiniteField::Elem;

/// Raised by a command whose certificate or check did not go through.
struct CheckFailed {
  std::string what;
};

std::string point_text(Point pt) {
  return "(" + std::to_string(pt.x) + "," + std::to_string(pt.y) + ")";
}

std::string points_text(const std::vector<Point>& pts) {
  std::string out;
  for (const auto& pt : pts) out += (out.empty() ? "" : " ") + point_text(pt);
  return out.empty() ? "-" : out;
}

Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  require(comma != std::string::npos, ErrorKind::Parse, "point must be written x,y: " + text);
  try {
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::exception&) {
    raise(ErrorKind::Parse, "point must be written x,y: " + text);
  }
}

/// "F4", "F_4" or "4".
std::pair<std::uint32_t, int> parse_field(std::string text) {
  if (!text.empty() && (text[0] == 'F' || text[0] == 'f')) text.erase(0, 1);
  if (!text.empty() && text[0] == '_') text.erase(0, 1);
  std::uint64_t q = 0;
  try {
    q = std::stoull(text);
  } catch (const std::exception&) {
    raise(ErrorKind::Parse, "field must be written Fq, e.g. F4");
  }
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    require(is_prime(p), ErrorKind::InvalidArgument, "field order must be a prime power");
    int s = 0;
    for (std::uint64_t v = q; v > 1; v /= p) {
      require(v % p == 0, ErrorKind::InvalidArgument, "field order must be a prime power");
      ++s;
    }
    return {p, s};
  }
  raise(ErrorKind::InvalidArgument, "field order must be at least 2");
}

std::filesystem::path output_path(const std::string& name) {
  std::filesystem::path path(name);
  if (path.is_relative())
    if (const char* dir = std::getenv("SLOPEKIT_OUTPUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
  return path;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  const auto path = output_path(cfg.output);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), ErrorKind::InvalidArgument, "cannot write " + path.string());
  f << text;
}

void emit_json(const RunConfig& cfg, const std::string& kind, Json body, std::ostream& out) {
  emit(cfg, io::dump(io::tagged(kind, std::move(body))), out);
}

// SVG on a 20-unit lattice, y pointing up.
class Svg {
 public:
  Svg(std::int64_t width, std::int64_t height) : w_(width), h_(height) {}

  double X(double x) const { return kMargin + kScale * x; }
  double Y(double y) const { return kMargin + kScale * (static_cast<double>(h_) - y); }

  void line(Point a, Point b, const std::string& style) {
    body_ << "  <line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\""
          << Y(b.y) << "\" " << style << "/>\n";
  }
  void polyline(const std::vector<Point>& pts, const std::string& cls, const std::string& style) {
    body_ << "  <polyline class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      body_ << (i ? " " : "") << X(pts[i].x) << "," << Y(pts[i].y);
    body_ << "\" fill=\"none\" " << style << "/>\n";
  }
  void polygon(const std::vector<Point>& pts, const std::string& cls, const std::string& style) {
    body_ << "  <polygon class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      body_ << (i ? " " : "") << X(pts[i].x) << "," << Y(pts[i].y);
    body_ << "\" " << style << "/>\n";
  }
  void dot(Point pt, bool filled, const std::string& cls) {
    body_ << "  <circle class=\"" << cls << "\" cx=\"" << X(pt.x) << "\" cy=\"" << Y(pt.y)
          << "\" r=\"3\" stroke=\"black\" fill=\"" << (filled ? "black" : "white") << "\"/>\n";
  }
  void text(double x, double y, const std::string& s) {
    body_ << "  <text x=\"" << X(x) << "\" y=\"" << Y(y) << "\" font-size=\"10\">" << s << "</text>\n";
  }

  std::string str() const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * kMargin + kScale * w_
       << "\" height=\"" << 2 * kMargin + kScale * h_ << "\">\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  static constexpr int kScale = 20;
  static constexpr int kMargin = 20;
  std::int64_t w_, h_;
  std::ostringstream body_;
};

void draw_axes(Svg& svg, std::int64_t w, std::int64_t h) {
  svg.line({0, 0}, {w, 0}, "stroke=\"gray\"");
  svg.line({0, 0}, {0, h}, "stroke=\"gray\"");
}

std::string polygon_svg(const NewtonPolygon& np) {
  const auto end = np.endpoint();
  Svg svg(end.x, std::max<std::int64_t>(end.y, 1));
  draw_axes(svg, end.x, end.y);
  const auto bps = np.breakpoints();
  svg.polyline(bps, "newton-polygon", "stroke=\"black\" stroke-width=\"2\"");
  for (const auto& pt : bps) svg.dot(pt, true, "breakpoint");
  return svg.str();
}

std::string strata_svg(const display::Stratification& st, const NewtonPolygon& np0) {
  const auto h = st.h();
  Svg svg(h, st.c);
  draw_axes(svg, h, st.c);
  // The parallelogram P: rows y in [0, c-1], x in [y+1, y+d].
  svg.polygon({{1, 0}, {st.d, 0}, {st.d + st.c - 1, st.c - 1}, {st.c, st.c - 1}}, "parallelogram",
              "fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 2\"");
  svg.polyline(np0.breakpoints(), "base-polygon", "stroke=\"gray\"");
  svg.polyline(st.np_star.breakpoints(), "deformed-polygon", "stroke=\"black\" stroke-width=\"2\"");
  const std::set<Point> star(st.P_star.begin(), st.P_star.end());
  for (const auto& pt : st.P) svg.dot(pt, star.count(pt) > 0, star.count(pt) ? "stratum-point" : "lattice-point");
  svg.text(0, -0.8, "np(*) = " + st.np_star.to_compact());
  return svg.str();
}

display::Display load_base(const RunConfig& cfg, const std::string& base, const std::string& file) {
  if (!file.empty()) {
    std::ifstream f(file);
    require(static_cast<bool>(f), ErrorKind::Parse, "cannot read " + file);
    std::stringstream ss;
    ss << f.rdbuf();
    return io::display_from_json(io::parse(ss.str()));
  }
  require(!base.empty(), ErrorKind::Parse, "either --base or --display is required");
  require(is_prime(cfg.p), ErrorKind::InvalidArgument, "--p must be prime");
  const int m = cfg.precision > 0 ? cfg.precision : display::default_witt_length(base);
  return display::display_from_name(arith::WittRing::make(FiniteField::make(cfg.p, 1), m), base);
}

// ---- np ----

void cmd_np_compare(const RunConfig& cfg, const std::string& a, const std::string& b, std::ostream& out) {
  const auto A = NewtonPolygon::parse(a), B = NewtonPolygon::parse(b);
  const auto c = polygon::compare(A, B);
  if (cfg.format == Format::Json)
    emit_json(cfg, "np-compare", {{"a", io::to_json(A)}, {"b", io::to_json(B)}, {"result", polygon::to_string(c)}}, out);
  else
    emit(cfg, std::string(polygon::to_string(c)) + "\n", out);
}

void cmd_np_adjoin(const RunConfig& cfg, const std::string& poly, const std::string& pt, std::ostream& out) {
  const auto np = NewtonPolygon::parse(poly);
  const auto point = parse_point(pt);
  const auto res = polygon::adjoin(np, point);
  if (cfg.format == Format::Json)
    emit_json(cfg, "np-adjoin",
              {{"polygon", io::to_json(np)}, {"point", io::to_json(point)}, {"result", io::to_json(res)},
               {"compact", res.to_compact()}},
              out);
  else if (cfg.format == Format::Svg)
    emit(cfg, polygon_svg(res), out);
  else
    emit(cfg, res.to_compact() + "\n", out);
}

void cmd_np_symmetric(const RunConfig& cfg, const std::string& poly, const std::string& lambda,
                      std::ostream& out) {
  const auto np = NewtonPolygon::parse(poly);
  const bool sym = polygon::is_symmetric(np);
  std::optional<NewtonPolygon> res;
  if (!lambda.empty()) res = polygon::symmetric_adjoin(np, parse_rational(lambda));
  if (cfg.format == Format::Json) {
    Json j{{"polygon", io::to_json(np)}, {"symmetric", sym}};
    if (res) {
      j["lambda"] = lambda;
      j["result"] = io::to_json(*res);
      j["compact"] = res->to_compact();
    }
    emit_json(cfg, "np-symmetric", j, out);
  } else if (cfg.format == Format::Svg) {
    emit(cfg, polygon_svg(res ? *res : np), out);
  } else {
    std::string text = sym ? "symmetric\n" : "not symmetric\n";
    if (res) text += res->to_compact() + "\n";
    emit(cfg, text, out);
  }
}

void cmd_np_attain(const RunConfig& cfg, const std::string& poly, const std::string& lambda, std::ostream& out) {
  const auto np = NewtonPolygon::parse(poly);
  const auto l = parse_rational(lambda);
  const auto w = polygon::attainable(np, l);
  if (cfg.format == Format::Json) {
    Json j{{"polygon", io::to_json(np)}, {"lambda", io::to_json(l)}, {"attainable", w.has_value()}};
    j["witness"] = w ? io::to_json(*w) : Json(nullptr);
    emit_json(cfg, "np-attain", j, out);
  } else if (cfg.format == Format::Svg) {
    emit(cfg, polygon_svg(w ? w->witness : np), out);
  } else {
    emit(cfg, w ? "attainable, witness " + w->witness.to_compact() + "\n" : "not attainable\n", out);
  }
}

// ---- deform / certify ----

void cmd_deform(const RunConfig& cfg, const std::string& base, const std::string& file,
                const std::string& lambda, std::ostream& out) {
  const auto D0 = load_base(cfg, base, file);
  const auto spec = display::deformation(D0, parse_rational(lambda));
  const auto rep = io::deform_report(spec);
  if (cfg.format == Format::Json) {
    emit_json(cfg, "deform", io::to_json(rep), out);
    return;
  }
  std::ostringstream os;
  const auto& st = spec.strata;
  os << "base: " << (base.empty() ? file : base) << " (h=" << D0.h() << ", d=" << D0.d() << ", p="
     << D0.ring().p() << ")\n";
  os << "lambda: " << to_string(spec.lambda) << "\n";
  os << "np(*): " << st.np_star.to_compact() << "\n";
  os << "P(*): " << points_text(st.P_star) << "\n";
  for (const auto& [j, pts] : st.layers) os << "P(" << j << "): " << points_text(pts) << "\n";
  os << "chi: " << spec.chi.to_string() << "\n";
  os << "deformation terms: " << spec.terms.size() << "\n";
  os << "monodromy: " << rep.equation.to_string() << "\n";
  for (const auto& g : rep.graded) os << "level " << g.level << ": " << g.to_string() << "\n";
  emit(cfg, os.str(), out);
}

void cmd_certify(const RunConfig& cfg, const std::string& base, const std::string& file,
                 const std::string& lambda_text, int samples, std::ostream& out) {
  const auto D0 = load_base(cfg, base, file);
  const auto lambda = parse_rational(lambda_text);
  monodromy::check_largeness_preconditions(D0, lambda);
  const auto spec = display::deformation(D0, lambda);
  monodromy::LargenessOptions opt;
  opt.seed = cfg.seed;
  opt.samples = samples;
  opt.closure_guard = cfg.guard;
  const auto cert = monodromy::largeness_certificate(spec, opt);
  if (cfg.format == Format::Json) {
    emit_json(cfg, "certificate", io::to_json(cert), out);
  } else {
    std::ostringstream os;
    os << "lambda: " << to_string(cert.lambda) << " (h=" << cert.h << ", d=" << cert.d << ", p=" << cert.p << ")\n";
    for (const auto& leg : cert.legs) {
      os << "piece " << leg.piece << ": " << (leg.certified ? "certified" : "failed");
      if (leg.first_witt)
        os << " (" << leg.first_witt->equation.to_string() << "; group order "
           << leg.first_witt->equation.group_order << ")";
      if (leg.evidence && leg.evidence->pivot)
        os << " (pivot " << point_text(*leg.evidence->pivot) << ", subgroups "
           << leg.evidence->certified_subgroups << "/" << leg.evidence->subgroups << ")";
      if (!leg.failure.empty()) os << ": " << leg.failure;
      os << "\n";
    }
    if (cert.closure)
      os << "closure: n=" << cert.closure->n << " reached " << cert.closure->reached << "/"
         << cert.closure->order << "\n";
    else
      os << "closure: no quotient within the guard\n";
    os << "verdict: " << cert.verdict << "\n";
    emit(cfg, os.str(), out);
  }
  if (cert.verdict != "large") throw CheckFailed{"verdict: " + cert.verdict};
}

// ---- as ----

void cmd_as_test(const RunConfig& cfg, std::uint64_t q, const std::string& field, bool all,
                 std::vector<Elem> values, std::ostream& out) {
  const auto [p, s] = parse_field(field);
  const auto K = FiniteField::make(p, s, cfg.seed);
  monodromy::AsCriterion crit(K, q);
  if (all) {
    values.clear();
    for (Elem a = 0; a < K->order(); ++a) values.push_back(a);
  }
  require(!values.empty(), ErrorKind::Parse, "give --all or at least one --A");
  std::size_t agree = 0;
  Json rows = Json::array();
  std::ostringstream os;
  for (const auto A : values) {
    require(A < K->order(), ErrorKind::InvalidArgument, "A outside the field");
    const auto v = crit.test(A);
    const bool oracle = monodromy::as_reducible_oracle(A, K, q);
    agree += v.reducible == oracle;
    rows.push_back({{"A", A}, {"criterion", io::to_json(v)}, {"oracle", oracle}});
    if (!all) os << "A=" << A << ": " << (v.reducible ? "reducible" : "irreducible") << " (oracle "
                 << (oracle ? "reducible" : "irreducible") << ")\n";
  }
  if (cfg.format == Format::Json) {
    emit_json(cfg, "as-test",
              {{"q", q}, {"field", io::to_json(*K)}, {"cases", rows}, {"agreement", agree},
               {"total", values.size()}},
              out);
  } else {
    os << agree << "/" << values.size() << " agreement criterion vs oracle\n";
    emit(cfg, os.str(), out);
  }
  if (agree != values.size()) throw CheckFailed{"criterion and oracle disagree"};
}

// ---- units ----

void cmd_units_verify(const RunConfig& cfg, int s, int n, const std::string& lambda_text,
                      std::vector<int> covered, std::ostream& out) {
  require(s >= 2, ErrorKind::InvalidArgument, "--s must be at least 2");
  require(n >= 1, ErrorKind::InvalidArgument, "--n must be at least 1");
  const auto k = FiniteField::make(cfg.p, s);
  const auto lambda = lambda_text.empty() ? Rational(1, s) : parse_rational(lambda_text);
  require(lambda.denominator() == s, ErrorKind::InvalidArgument, "lambda must have denominator s");
  if (covered.empty()) covered = {0, 1, s};
  const auto q = k->order();
  const int r = static_cast<int>(lambda.numerator());
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<Elem> digit(0, q - 1);
  const bool exhaustive = q <= 32;

  // Commutator formula at levels 1..n-1 (the class sits at level m+1 <= n).
  std::uint64_t comm_cases = 0, comm_fail = 0;
  Json comm_bad = Json::array();
  for (int m = 1; m <= std::max(1, n - 1); ++m) {
    const auto O = arith::RamifiedOrder::division_order(k, lambda, m + 2);
    auto check = [&](Elem x, Elem y) {
      const auto c = unitgroup::commutator_class(*O, x, y, m);
      ++comm_cases;
      if (!c.ok) {
        ++comm_fail;
        if (comm_bad.size() < 8) comm_bad.push_back(io::to_json(c));
      }
    };
    if (exhaustive)
      for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) check(x, y);
    else
      for (int i = 0; i < 1000; ++i) check(digit(rng), digit(rng));
  }

  // Image of x^{tau^m} y - y^tau x.
  Json surj = Json::array();
  bool surj_ok = true;
  for (int m = 1; m <= std::max(1, n - 1); ++m) {
    std::set<Elem> image;
    for (Elem x = 0; x < q; ++x)
      for (Elem y = 0; y < q; ++y)
        image.insert(k->sub(k->mul(k->frobenius(x, r * m), y), k->mul(k->frobenius(y, r), x)));
    const bool full_expected = (m + 1) % s != 0;
    if (full_expected && image.size() != q) surj_ok = false;
    surj.push_back({{"n", m}, {"image_size", image.size()}, {"s_divides_n_plus_1", !full_expected}});
  }

  // p-th power lemma at levels 1 and 2.
  std::uint64_t pth_cases = 0, pth_fail = 0;
  Json counterexample = nullptr;
  for (int m = 1; m <= 2; ++m) {
    const auto O = arith::RamifiedOrder::division_order(k, lambda, (m + 1) * s + 2);
    for (Elem a = 0; a < q; ++a)
      for (int i = 0; i < (exhaustive ? 8 : 2); ++i) {
        std::vector<Elem> dg(static_cast<std::size_t>(O->precision()));
        for (auto& v : dg) v = digit(rng);
        const auto beta = O->from_digits(dg);
        const auto cls = unitgroup::pth_power_class(*O, a, beta, m);
        ++pth_cases;
        if (cls != a) {
          ++pth_fail;
          if (counterexample.is_null())
            counterexample = {{"p", cfg.p}, {"s", s}, {"n", m}, {"alpha", a}, {"beta", io::to_json(*O, beta)},
                              {"class", cls}, {"expected", a}};
        }
      }
  }

  const auto gen = unitgroup::generation_check(k, lambda, n, covered, cfg.seed, cfg.guard);

  const bool ok = comm_fail == 0 && surj_ok && gen.generates && (cfg.p == 2 || pth_fail == 0);
  if (cfg.format == Format::Json) {
    emit_json(cfg, "units-verify",
              {{"q", q},
               {"lambda", io::to_json(lambda)},
               {"n", n},
               {"commutator", {{"cases", comm_cases}, {"failures", comm_fail}, {"failing", comm_bad}}},
               {"surjectivity", surj},
               {"pth_power",
                {{"cases", pth_cases}, {"failures", pth_fail}, {"counterexample", counterexample}}},
               {"generation", io::to_json(gen)}},
              out);
  } else {
    std::ostringstream os;
    os << "q = " << q << ", lambda = " << to_string(lambda) << ", n = " << n << "\n";
    os << "commutator: " << comm_cases - comm_fail << "/" << comm_cases << " agree\n";
    os << "commutator image: " << (surj_ok ? "full" : "NOT full") << " whenever s does not divide n+1\n";
    os << "p-th power: " << pth_cases - pth_fail << "/" << pth_cases << " agree";
    if (!counterexample.is_null())
      os << "; counterexample n=" << counterexample["n"] << " alpha=" << counterexample["alpha"]
         << " class=" << counterexample["class"];
    os << "\n";
    os << "generation " << (gen.generates ? "true" : "false") << " (" << gen.reached << "/" << gen.order
       << ", covered";
    for (int c : gen.covered) os << " " << c;
    os << ")\n";
    emit(cfg, os.str(), out);
  }
  if (!ok) throw CheckFailed{"unit-group verification failed"};
}

// ---- plot ----

void cmd_plot(const RunConfig& cfg, int d, int c, const std::string& lambda, const std::string& poly,
              const std::string& base_poly, std::ostream& out) {
  if (!poly.empty()) {
    emit(cfg, polygon_svg(NewtonPolygon::parse(poly)), out);
    return;
  }
  require(d >= 1 && c >= 1, ErrorKind::InvalidArgument, "--d and --c must be positive");
  require(!lambda.empty(), ErrorKind::Parse, "--lambda is required with --d and --c");
  const int h = d + c;
  const auto np0 = base_poly.empty() ? NewtonPolygon::make({{Rational(c, h), h}})
                                     : NewtonPolygon::parse(base_poly);
  const auto st = display::strata(d, c, np0, parse_rational(lambda));
  if (cfg.format == Format::Json)
    emit_json(cfg, "strata", io::to_json(st), out);
  else
    emit(cfg, strata_svg(st, np0), out);
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return kParseError;
    case ErrorKind::SizeGuardExceeded:
    case ErrorKind::CertificateInapplicable:
      return kCertificateFailure;
    default:
      return kPrecondition;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton-polygon strata, deformations and monodromy certificates"};
  app.name("slopekit");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--seed", cfg.seed, "Seed for every pseudorandom choice");
  app.add_option("--precision", cfg.precision, "Witt length for named bases (0 = default)");
  app.add_option("--guard", cfg.guard, "Size guard for exhaustive enumerations");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "svg"}));
  app.add_option("--p", cfg.p, "Residue characteristic");
  app.add_option("-o,--output", cfg.output, "Output file (relative to SLOPEKIT_OUTPUT_DIR if set)");

  std::function<void()> action;

  auto* np = app.add_subcommand("np", "Newton polygon queries");
  np->require_subcommand(1);
  std::string np_a, np_b, np_poly, np_point, np_lambda;
  auto* np_compare = np->add_subcommand("compare", "Compare two polygons");
  np_compare->add_option("a", np_a)->required();
  np_compare->add_option("b", np_b)->required();
  np_compare->callback([&] { action = [&] { cmd_np_compare(cfg, np_a, np_b, out); }; });
  auto* np_adjoin = np->add_subcommand("adjoin", "Hull of a polygon and a point");
  np_adjoin->add_option("--poly", np_poly)->required();
  np_adjoin->add_option("--point", np_point, "x,y")->required();
  np_adjoin->callback([&] { action = [&] { cmd_np_adjoin(cfg, np_poly, np_point, out); }; });
  auto* np_sym = np->add_subcommand("symmetric", "Symmetry test and symmetric adjoin");
  np_sym->add_option("--poly", np_poly)->required();
  np_sym->add_option("--lambda", np_lambda);
  np_sym->callback([&] { action = [&] { cmd_np_symmetric(cfg, np_poly, np_lambda, out); }; });
  auto* np_attain = np->add_subcommand("attain", "Attainability of a slope");
  np_attain->add_option("--poly", np_poly)->required();
  np_attain->add_option("--lambda", np_lambda)->required();
  np_attain->callback([&] { action = [&] { cmd_np_attain(cfg, np_poly, np_lambda, out); }; });

  std::string base, display_file, lambda;
  int samples = 16;
  auto* deform = app.add_subcommand("deform", "Strata, deformed polynomial and monodromy equation");
  deform->add_option("--base", base, "Named base: ss6, H1/3, H1/2+H2/3");
  deform->add_option("--display", display_file, "Display JSON file");
  deform->add_option("--lambda", lambda)->required();
  deform->callback([&] { action = [&] { cmd_deform(cfg, base, display_file, lambda, out); }; });
  auto* certify = app.add_subcommand("certify", "Largeness certificate");
  certify->add_option("--base", base, "Named base: ss6, H1/3, H1/2+H2/3");
  certify->add_option("--display", display_file, "Display JSON file");
  certify->add_option("--lambda", lambda)->required();
  certify->add_option("--samples", samples, "Specializations for the first Witt check");
  certify->callback([&] { action = [&] { cmd_certify(cfg, base, display_file, lambda, samples, out); }; });

  auto* as = app.add_subcommand("as", "Artin-Schreier reducibility");
  as->require_subcommand(1);
  std::uint64_t as_q = 0;
  std::string as_field;
  bool as_all = false;
  std::vector<Elem> as_values;
  auto* as_test = as->add_subcommand("test", "Criterion against the factoring oracle");
  as_test->add_option("--q", as_q)->required();
  as_test->add_option("--field", as_field, "Field K, e.g. F16")->required();
  as_test->add_flag("--all", as_all, "Every A in K");
  as_test->add_option("--A", as_values, "Element codes of K");
  as_test->callback([&] { action = [&] { cmd_as_test(cfg, as_q, as_field, as_all, as_values, out); }; });

  auto* units = app.add_subcommand("units", "Unit-group checks");
  units->require_subcommand(1);
  int u_s = 2, u_n = 2;
  std::string u_lambda;
  std::vector<int> u_covered;
  auto* verify = units->add_subcommand("verify", "Commutator, p-th power and generation sweeps");
  verify->add_option("--s", u_s)->required();
  verify->add_option("--n", u_n)->required();
  verify->add_option("--lambda", u_lambda, "r/s, default 1/s");
  verify->add_option("--covered", u_covered, "Graded pieces, default 0 1 s")->delimiter(',');
  verify->callback([&] { action = [&] { cmd_units_verify(cfg, u_s, u_n, u_lambda, u_covered, out); }; });

  int pd = 0, pc = 0;
  std::string p_lambda, p_poly, p_base;
  auto* plot = app.add_subcommand("plot", "SVG of a polygon or of the parallelogram with np(*)");
  plot->add_option("--d", pd);
  plot->add_option("--c", pc);
  plot->add_option("--lambda", p_lambda);
  plot->add_option("--poly", p_poly, "Plot this polygon alone");
  plot->add_option("--base", p_base, "Base polygon ending at (d+c, c); default the straight line");
  plot->callback([&] {
    action = [&] {
      if (cfg.format == Format::Text) cfg.format = Format::Svg;
      cmd_plot(cfg, pd, pc, p_lambda, p_poly, p_base, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }
  cfg.format = format == "json" ? Format::Json : format == "svg" ? Format::Svg : Format::Text;

  try {
    action();
  } catch (const CheckFailed& e) {
    err << "slopekit: " << e.what << "\n";
    return kCertificateFailure;
  } catch (const Error& e) {
    err << "slopekit: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "slopekit: Parse: " << e.what() << "\n";
    return kParseError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "slopekit: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}

}  // namespace slopekit::cli
