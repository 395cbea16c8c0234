#include "slopekit/monodromy/certificate.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>

#include "slopekit/error.hpp"

namespace slopekit::monodromy {

namespace {

std::int64_t checked_pow(std::uint32_t p, int e) {
  const auto v = ipow(p, static_cast<unsigned>(e));
  require(v <= static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()),
          ErrorKind::CertificateInapplicable, "exponent too large for the slab model");
  return static_cast<std::int64_t>(v);
}

LargenessLeg piece_leg(const display::Stratification& st, const std::vector<GradedEquation>& eqs,
                       int level, const arith::FieldPtr& k, std::uint32_t base_p,
                       const LargenessOptions& opt) {
  LargenessLeg leg;
  leg.piece = level;
  PieceEvidence ev;
  ev.level = level;
  ev.stratum = st.layer(level);
  if (ev.stratum.empty()) {
    leg.failure = "P(" + std::to_string(level) + ") is empty";
    leg.evidence = ev;
    return leg;
  }
  const auto& eq = eqs[static_cast<std::size_t>(level - 1)];
  const auto pivot = ev.stratum.front();
  ev.pivot = pivot;

  // The pivot must occur once, at w_0, and nowhere in lower levels.
  int hits = 0, lower = 0;
  const GradedTerm* term = nullptr;
  for (const auto& t : eq.rhs)
    if (t.is_symbol() && t.xy == pivot) {
      ++hits;
      term = &t;
    }
  for (int l = 1; l < level; ++l)
    for (const auto& t : eqs[static_cast<std::size_t>(l - 1)].rhs)
      if (t.is_symbol() && t.xy == pivot) ++lower;
  ev.monomial_present = term != nullptr && term->w_index == 0;
  ev.isolated = hits == 1 && lower == 0;
  if (!ev.monomial_present || !ev.isolated) {
    leg.failure = "pivot monomial missing or repeated in the level-" + std::to_string(level) +
                  " equation";
    leg.evidence = ev;
    return leg;
  }
  ev.symbol = term->symbol;

  // z = w^{p^{h-s}} solves z^{q} - z = A + B with the pivot as z_1.
  const std::uint32_t p = eq.p;
  const auto ph = checked_pow(p, eq.h);
  ev.M = checked_pow(p, term->u_power);
  ev.N = ph - checked_pow(p, term->t_power);

  const int vars = static_cast<int>(ev.stratum.size());
  auto A = LaurentSlab::zero(k, vars);
  auto B = LaurentSlab::zero(k, vars);
  Monomial lead{std::vector<std::int64_t>(static_cast<std::size_t>(vars), 0), -ev.N};
  lead.z[0] = ev.M;
  A.add_term(lead, 1);
  for (const auto& t : eq.rhs) {
    if (t.w_index != 0) continue;
    Monomial m{std::vector<std::int64_t>(static_cast<std::size_t>(vars), 0),
               checked_pow(p, t.t_power) - ph};
    if (t.is_symbol()) {
      if (t.xy == pivot) continue;
      const auto it = std::find(ev.stratum.begin(), ev.stratum.end(), t.xy);
      m.z[static_cast<std::size_t>(it - ev.stratum.begin())] = checked_pow(p, t.u_power);
      B.add_term(m, 1);
    } else {
      // Residue constants of the named bases lie in the prime field.
      require(t.constant < base_p, ErrorKind::CertificateInapplicable,
              "residue constant outside the prime field");
      B.add_term(m, t.constant);
    }
  }

  std::map<std::string, int> methods;
  for (const auto& H : enumerate_subgroups(k, k->order())) {
    if (H.size() == 1) continue;
    ++ev.subgroups;
    const auto c = no_solution_certificate(subgroup_polynomial(k, H), A, B, opt.search_guard);
    if (c.certified) {
      ++ev.certified_subgroups;
      ++methods[c.method];
    }
  }
  ev.methods.assign(methods.begin(), methods.end());
  leg.certified = ev.certified_subgroups == ev.subgroups;
  if (!leg.certified) leg.failure = "no-solution certificate failed at P(" + std::to_string(level) + ")";
  leg.evidence = std::move(ev);
  return leg;
}

}  // namespace

void check_largeness_preconditions(const display::Display& D0, Rational lambda) {
  const auto s = lambda.denominator(), r = lambda.numerator();
  require(r != s - 1 || s < 2, ErrorKind::Precondition,
          "slope " + to_string(lambda) + " has the excluded form (s-1)/s");
  require(s >= 3, ErrorKind::Precondition, "largeness certificate needs s >= 3");
  display::check_deformation_preconditions(D0, lambda);
}

LargenessCertificate largeness_certificate(const display::DeformationSpec& spec,
                                           const LargenessOptions& opt) {
  check_largeness_preconditions(spec.base, spec.lambda);
  const auto eq = monodromy_equation(spec);
  const auto eqs = graded_equations(eq);
  const int s = eq.s();
  const std::uint32_t p = eq.p;

  LargenessCertificate cert;
  cert.p = p;
  cert.h = eq.h;
  cert.d = eq.d;
  cert.lambda = spec.lambda;
  cert.pieces = {0, 1, s};

  const auto k = arith::FiniteField::make(p, s);
  const auto base_p = spec.base.ring().p();
  auto leg1 = std::async(std::launch::async, [&] {
    return piece_leg(spec.strata, eqs, 1, k, base_p, opt);
  });
  auto legs = std::async(std::launch::async, [&] {
    return piece_leg(spec.strata, eqs, s, k, base_p, opt);
  });

  // Desk-scale closure: the deepest quotient within the guard, at most 2s + 2.
  const std::uint64_t q = k->order();
  int n = 0;
  for (int m = s + 1; m <= 2 * s + 2; ++m) {
    const auto size = (q - 1) * ipow(q, static_cast<unsigned>(m - 1));
    if (size > opt.closure_guard) break;
    n = m;
  }
  std::future<unitgroup::GenerationReport> closure;
  if (n > 0)
    closure = std::async(std::launch::async, [&] {
      return unitgroup::generation_check(k, spec.lambda, n, {0, 1, s}, opt.seed,
                                         opt.closure_guard);
    });

  LargenessLeg leg0;
  leg0.piece = 0;
  const auto fw = first_witt_equation(eq);
  if (ipow(p, static_cast<unsigned>(3 * s)) <= (1u << 24)) {
    leg0.first_witt = validate_first_witt(fw, opt.seed, opt.samples);
    leg0.certified = leg0.first_witt->passed;
  } else {
    leg0.first_witt = FirstWittCheck{fw, "", {}, false, fw.kummer_identity};
    leg0.certified = fw.kummer_identity;
  }
  if (!leg0.certified) leg0.failure = "first Witt component at P(0)";
  cert.legs.push_back(std::move(leg0));
  cert.legs.push_back(leg1.get());
  cert.legs.push_back(legs.get());

  bool closure_ok = false;
  if (closure.valid()) {
    cert.closure = closure.get();
    closure_ok = cert.closure->generates;
  }

  const bool legs_ok = std::all_of(cert.legs.begin(), cert.legs.end(),
                                   [](const auto& l) { return l.certified; });
  cert.verdict = legs_ok && closure_ok ? "large" : "not certified";
  return cert;
}

}  // namespace slopekit::monodromy
