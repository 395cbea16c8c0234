#include "slopekit/monodromy/equation.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <tuple>

#include "slopekit/error.hpp"

namespace slopekit::monodromy {

namespace {

/// Ramified digits of p^{-x*lambda} a for a Witt vector a, up to position
/// N. Returns the digits, or throws when a digit would sit below zero.
std::vector<FiniteField::Elem> normalized_digits(const arith::WittRing& W, const arith::WittVec& a,
                                                 int s, int shift, int N) {
  std::vector<FiniteField::Elem> out(static_cast<std::size_t>(N), 0);
  const auto dg = W.digits(a);
  for (int k = 0; k < static_cast<int>(dg.size()); ++k) {
    if (dg[k] == 0) continue;
    const int pos = s * k - shift;
    require(pos >= 0, ErrorKind::Precondition,
            "coefficient has valuation below the normalizing slope");
    if (pos < N) out[static_cast<std::size_t>(pos)] = dg[k];
  }
  return out;
}

std::string power_string(std::uint32_t p, int e) {
  if (e == 0) return "1";
  if (e == 1) return std::to_string(p);
  return std::to_string(p) + "^" + std::to_string(e);
}

}  // namespace

DemazureData demazure_slope(const arith::TwistedPoly<arith::WittRing>& chi) {
  const auto& W = chi.ring();
  const int n = chi.degree();
  require(n >= 1, ErrorKind::InvalidArgument, "characteristic polynomial has degree zero");
  require(chi.coeff(n) == W.one(), ErrorKind::InvalidArgument, "polynomial is not monic in F");

  bool found = false;
  Rational lambda;
  for (int i = 1; i <= n; ++i) {
    const auto& A = chi.coeff(n - i);
    if (W.is_zero(A)) continue;
    const Rational v(W.valuation(A), i);
    if (!found || v < lambda) lambda = v;
    found = true;
  }
  require(found, ErrorKind::InvalidArgument, "all coefficients vanish; slope undefined");

  const int s = static_cast<int>(lambda.denominator());
  const int r = static_cast<int>(lambda.numerator());
  const int N = s * W.length() - n * r;
  require(N >= 1, ErrorKind::PrecisionUnderflow, "Witt length too short to normalize");
  auto ring = arith::RamifiedOrder::make(W.field(), s, 0, N);

  DemazureData out{lambda, ring, {}};
  for (int i = 1; i <= n; ++i) {
    const auto dg = normalized_digits(W, chi.coeff(n - i), s, i * r, N);
    out.a.push_back(ring->from_digits(dg));
  }
  return out;
}

Rational demazure_slope(const display::CharPoly& chi) {
  bool found = false;
  Rational lambda;
  for (int x = 1; x <= chi.h; ++x) {
    const auto v = chi.valuation(x);
    if (!v) continue;
    const Rational q(*v, x);
    if (!found || q < lambda) lambda = q;
    found = true;
  }
  require(found, ErrorKind::InvalidArgument, "all coefficients vanish; slope undefined");
  return lambda;
}

std::vector<MonodromyTerm> MonodromyEquation::layer(int j) const {
  std::vector<MonodromyTerm> out;
  for (const auto& t : terms)
    if (t.j == j) out.push_back(t);
  return out;
}

std::map<int, std::vector<MonodromyTerm>> MonodromyEquation::by_x() const {
  std::map<int, std::vector<MonodromyTerm>> out;
  for (const auto& t : terms) out[t.x].push_back(t);
  return out;
}

MonodromyEquation MonodromyEquation::reduce() const {
  MonodromyEquation out = *this;
  out.terms = layer(0);
  return out;
}

std::string MonodromyEquation::to_string() const {
  std::ostringstream os;
  os << "v^s" << h;
  for (const auto& t : terms) {
    os << " - ";
    if (t.j != 0) os << "p^(" << slopekit::to_string(Rational(t.j, s())) << ")*";
    if (t.is_symbol()) {
      os << "<" << t.symbol << ">";
      if (t.twist != 0) os << "^s" << t.twist;
    } else {
      os << "<" << t.constant << ">";
    }
    os << "*v^s" << (h - t.x);
  }
  os << " = 0";
  return os.str();
}

MonodromyEquation monodromy_equation(const display::DeformationSpec& spec) {
  const auto& W = spec.base.ring();
  const int h = spec.base.h(), d = spec.base.d();
  const Rational lambda = spec.lambda;
  const int s = static_cast<int>(lambda.denominator());
  const int r = static_cast<int>(lambda.numerator());
  const int N = 2 * s;

  MonodromyEquation eq{W.p(), h, d, lambda, {}};
  for (int x = 1; x <= h; ++x) {
    const auto& A = spec.chi0.A[static_cast<std::size_t>(x - 1)];
    require(A.is_constant(), ErrorKind::InvalidArgument, "base characteristic polynomial is symbolic");
    std::vector<FiniteField::Elem> dg;
    try {
      dg = normalized_digits(W, A.constant, s, x * r, N);
    } catch (const Error&) {
      raise(ErrorKind::Precondition, "a_{" + std::to_string(x) +
                                         ",0} is nonzero: slope is not below the base slopes");
    }
    require(dg[0] == 0, ErrorKind::Precondition,
            "a_{" + std::to_string(x) + ",0} is nonzero: slope is not below the base slopes");
    for (int j = 1; j < N; ++j)
      if (dg[static_cast<std::size_t>(j)] != 0)
        eq.terms.push_back({x, j, 0, "", {}, dg[static_cast<std::size_t>(j)]});
  }
  for (const auto& t : spec.terms)
    eq.terms.push_back({static_cast<int>(t.xy.x), t.layer, t.twist, t.symbol, t.xy, 0});
  std::sort(eq.terms.begin(), eq.terms.end(), [](const auto& a, const auto& b) {
    return std::tie(a.j, a.x, a.symbol, a.constant) < std::tie(b.j, b.x, b.symbol, b.constant);
  });
  return eq;
}

std::string FirstWittEquation::to_string() const {
  std::ostringstream os;
  os << "v0^(" << power_string(p, lead_power) << ") - " << symbol << "^(" << power_string(p, u_power)
     << ")*v0^(" << power_string(p, mid_power) << ") = 0; t^" << t_exponent << " = " << symbol
     << "^" << u_exponent;
  return os.str();
}

FirstWittEquation first_witt_equation(const MonodromyEquation& eq) {
  const auto base = eq.layer(0);
  require(base.size() == 1 && base[0].is_symbol(), ErrorKind::InvalidArgument,
          "the j = 0 layer must hold exactly the (s,r) coordinate");
  const int s = eq.s(), r = eq.r();
  require(base[0].xy == Point{s, r}, ErrorKind::InvalidArgument,
          "the j = 0 coordinate is not (s,r)");
  FirstWittEquation fw;
  fw.p = eq.p;
  fw.h = eq.h;
  fw.d = eq.d;
  fw.r = r;
  fw.s = s;
  fw.symbol = base[0].symbol;
  fw.lead_power = eq.h;
  fw.mid_power = eq.h - s;
  fw.u_power = base[0].twist;
  require(fw.mid_power >= 0 && fw.u_power >= 0 && fw.u_power == eq.h - eq.d - r,
          ErrorKind::InvalidArgument, "degenerate exponents in the first Witt equation");
  const auto ph = ipow(eq.p, static_cast<unsigned>(fw.lead_power));
  const auto phs = ipow(eq.p, static_cast<unsigned>(fw.mid_power));
  const auto ps = ipow(eq.p, static_cast<unsigned>(s));
  fw.t_exponent = ph - phs;
  fw.u_exponent = ipow(eq.p, static_cast<unsigned>(fw.u_power));
  fw.kummer_identity = fw.t_exponent == phs * (ps - 1);
  fw.separable_degree = ps - 1;
  fw.group_order = ps - 1;
  return fw;
}

FirstWittCheck validate_first_witt(const FirstWittEquation& fw, std::uint64_t seed, int samples) {
  const auto L = arith::FiniteField::make(fw.p, 3 * fw.s);
  const std::uint64_t q = ipow(fw.p, static_cast<unsigned>(fw.s));
  const std::uint64_t Q = L->order();
  FirstWittCheck out{fw, L->describe(), {}, false, true};

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, Q - 1);
  for (int k = 0; k < samples; ++k) {
    const auto u = k == 0 ? L->generator() : static_cast<FiniteField::Elem>(pick(rng));
    // v0^{p^{h-s}} = y with y^{q-1} = u^{p^{h-d-r}}; undo the p-power.
    const auto w = L->frobenius(L->frobenius(u, fw.u_power), -fw.mid_power);
    Specialization sp{u, 0, 0, false};
    sp.kummer_degree = L->multiplicative_order(L->pow(w, (Q - 1) / (q - 1)));

    arith::poly::Poly f(q, 0);
    f[0] = L->neg(w);
    f.back() = 1;
    const arith::poly::Poly X{0, 1};
    auto cur = X;
    for (std::uint64_t deg = 1; deg <= q - 1; ++deg) {
      cur = arith::poly::frobenius_mod(*L, cur, f);
      if (cur == X) {
        sp.splitting_degree = deg;
        break;
      }
    }
    sp.divides = sp.splitting_degree != 0 && (q - 1) % sp.splitting_degree == 0 &&
                 sp.splitting_degree == sp.kummer_degree;
    out.passed = out.passed && sp.divides;
    if (sp.splitting_degree == q - 1) out.attained = true;
    out.samples.push_back(sp);
  }
  out.passed = out.passed && out.attained && fw.kummer_identity;
  return out;
}

std::set<int> GradedEquation::referenced_w() const {
  std::set<int> out;
  for (const auto& t : rhs) out.insert(t.w_index);
  return out;
}

std::vector<Point> GradedEquation::referenced_points() const {
  std::set<Point> pts;
  for (const auto& t : rhs)
    if (t.is_symbol()) pts.insert(t.xy);
  return {pts.begin(), pts.end()};
}

std::string GradedEquation::to_string() const {
  std::ostringstream os;
  os << "w" << level << "^(" << power_string(p, h) << ") - w" << level << "^("
     << power_string(p, h - s) << ") = t^-(" << power_string(p, h) << ")*(";
  bool first = true;
  for (const auto& t : rhs) {
    if (!first) os << " + ";
    first = false;
    if (t.is_symbol())
      os << t.symbol << "^(" << power_string(p, t.u_power) << ")";
    else
      os << "<" << t.constant << ">";
    os << "*t^(" << power_string(p, t.t_power) << ")";
    if (t.w_index != 0) os << "*w" << t.w_index << "^(" << power_string(p, t.t_power) << ")";
  }
  if (first) os << "0";
  os << ")";
  return os.str();
}

std::vector<GradedEquation> graded_equations(const MonodromyEquation& eq) {
  const int s = eq.s();
  std::vector<GradedEquation> out;
  for (int l = 1; l <= s; ++l) {
    GradedEquation ge{eq.p, l, eq.h, s, {}};
    for (const auto& t : eq.terms) {
      if (t.j < 1 || t.j > l) continue;
      GradedTerm g;
      g.j = t.j;
      g.x = t.x;
      g.t_power = eq.h - t.x;
      g.w_index = l - t.j;
      if (t.is_symbol()) {
        g.symbol = t.symbol;
        g.xy = t.xy;
        g.u_power = t.twist;
      } else {
        g.constant = t.constant;
      }
      ge.rhs.push_back(std::move(g));
    }
    out.push_back(std::move(ge));
  }
  return out;
}

std::vector<GradedEquation> graded_equations(const display::DeformationSpec& spec) {
  return graded_equations(monodromy_equation(spec));
}

}  // namespace slopekit::monodromy
