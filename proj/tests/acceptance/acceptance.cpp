#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "oracles/berkowitz.hpp"
#include "oracles/berlekamp.hpp"
#include "slopekit/cli/app.hpp"
#include "slopekit/error.hpp"
#include "slopekit/io/json.hpp"
#include "slopekit/monodromy/artin_schreier.hpp"
#include "slopekit/monodromy/certificate.hpp"

using namespace slopekit;
using arith::FiniteField;
using arith::WittRing;
using polygon::NewtonPolygon;
using polygon::Point;
using Elem = FiniteField::Elem;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

std::string pt(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

// ---- 1: strata lemmas ----

Outcome strata_sweep() {
  Outcome o;
  int instances = 0, bad0 = 0, bad1 = 0;
  std::vector<std::string> bad_s;
  for (int s = 3; s <= 8; ++s)
    for (int r = 1; r <= s - 2; ++r) {
      if (gcd(r, s) != 1) continue;
      // (s, r) lies in P exactly when c >= r + 1 and d >= s - r.
      for (int c = r + 1; c <= 14; ++c)
        for (int d = s - r; d + c <= 14; ++d) {
          const Rational base(c, d + c);
          if (!(base > Rational(r, s))) continue;
          const auto st = display::strata(d, c, NewtonPolygon::make({{base, d + c}}), Rational(r, s));
          ++instances;
          if (st.layer(0) != std::vector<Point>{{s, r}}) ++bad0;
          if (st.layer(1).empty()) ++bad1;
          if (st.layer(s).empty())
            bad_s.push_back("lambda=" + std::to_string(r) + "/" + std::to_string(s) +
                            " d=" + std::to_string(d) + " c=" + std::to_string(c) +
                            " np(*)=" + st.np_star.to_compact());
        }
    }
  o.pass = bad0 == 0 && bad1 == 0 && bad_s.empty();
  std::ostringstream os;
  os << instances << " instances; P(0)={(s,r)} failures " << bad0 << ", P(1) empty " << bad1
     << ", P(s) empty " << bad_s.size();
  if (!bad_s.empty()) os << " (all with c = r+1, see details)";
  o.summary = os.str();
  o.details = std::move(bad_s);
  return o;
}

// ---- 2: Cayley-Hamilton against exact integer determinants ----

void slope_multisets(int budget, std::size_t from, const std::vector<Rational>& slopes,
                     std::vector<Rational>& cur, std::vector<std::vector<Rational>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (std::size_t i = from; i < slopes.size(); ++i) {
    const int s = static_cast<int>(slopes[i].denominator());
    if (s > budget) continue;
    cur.push_back(slopes[i]);
    slope_multisets(budget - s, i, slopes, cur, out);
    cur.pop_back();
  }
}

std::optional<std::int64_t> valuation(const oracle::BigInt& v, std::uint32_t p, int cap) {
  if (v == 0) return std::nullopt;
  oracle::BigInt x = v;
  std::int64_t k = 0;
  while (x % p == 0 && k < cap) {
    x /= p;
    ++k;
  }
  return k;
}

Outcome cayley_hamilton() {
  Outcome o;
  std::vector<Rational> slopes;
  for (int s = 2; s <= 8; ++s)
    for (int r = 1; r < s; ++r)
      if (gcd(r, s) == 1) slopes.emplace_back(r, s);
  std::vector<std::vector<Rational>> sets;
  std::vector<Rational> cur;
  slope_multisets(8, 0, slopes, cur, sets);
  int checked = 0, failures = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const auto W = WittRing::make(FiniteField::make(p, 1), 10);
    for (const auto& set : sets) {
      std::vector<polygon::Segment> segs;
      for (const auto& sl : set) segs.push_back({sl, sl.denominator()});
      std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) { return a.slope < b.slope; });
      const auto expected = NewtonPolygon::make(segs);

      // Library path: the normal-form display and its characteristic polynomial.
      const auto D = display::split_display(W, set);
      const bool lib = display::charpoly(D).newton_polygon() == expected;

      // Oracle path: det(t - Phi) over Z for the block sum of simple displays.
      std::vector<display::Display> blocks;
      for (const auto& sl : set) blocks.push_back(display::simple_display(W, sl));
      const auto S = display::direct_sum(blocks);
      const int h = S.h();
      oracle::BigMatrix M(static_cast<std::size_t>(h), std::vector<oracle::BigInt>(static_cast<std::size_t>(h)));
      for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j) {
          oracle::BigInt v = S.at(i, j).constant.c[0];
          M[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = j <= S.d() ? v : v * p;
        }
      const auto cp = oracle::berkowitz_charpoly(M);
      std::vector<std::optional<std::int64_t>> vals;
      for (int x = 1; x <= h; ++x) {
        // Entries are reduced mod p^10; the polygon only needs valuations below that.
        auto v = cp[static_cast<std::size_t>(h - x)] % oracle::BigInt(ipow(p, 10));
        vals.push_back(valuation(v, p, 10));
      }
      const bool orc = polygon::np_of_valuations(vals) == expected;
      ++checked;
      if (!lib || !orc) {
        ++failures;
        std::string name;
        for (const auto& sl : set) name += "H" + to_string(sl) + " ";
        o.details.push_back("p=" + std::to_string(p) + " " + name + (lib ? "" : "[library]") + (orc ? "" : "[oracle]"));
      }
    }
  }
  o.pass = failures == 0;
  o.summary = std::to_string(checked) + " direct sums (h <= 8, p = 2, 3), " + std::to_string(failures) + " mismatches";
  return o;
}

// ---- 3: deformation polygon ----

Outcome deformation_polygon() {
  Outcome o;
  std::mt19937_64 rng(3);
  int generic_ok = 0, special_ok = 0, total = 0;
  auto check = [&](const display::Display& D0, Rational lambda, std::mt19937_64& g) {
    const auto spec = display::deformation(D0, lambda);
    ++total;
    const bool gen = spec.chi.newton_polygon() == spec.strata.np_star;
    generic_ok += gen;
    // Specialize every u to random units of the residue field. Over a small
    // field a unit can cancel a base coefficient, so each draw must lie on or
    // above np(*) and some draw must attain it.
    const auto q = D0.ring().residue().order();
    std::uniform_int_distribution<Elem> unit(1, q - 1);
    bool above = true, attained = false;
    for (int draw = 0; draw < 8; ++draw) {
      std::map<std::string, Elem> values;
      for (const auto& t : spec.terms) values[t.symbol] = unit(g);
      std::vector<std::optional<std::int64_t>> vals;
      for (int x = 1; x <= spec.chi.h; ++x) {
        const auto a = spec.chi.ops.specialize(spec.chi.A[x - 1], values);
        vals.push_back(D0.ring().is_zero(a) ? std::nullopt : std::optional<std::int64_t>(D0.ring().valuation(a)));
      }
      const auto np = polygon::np_of_valuations(vals);
      above = above && polygon::lies_on_or_below(spec.strata.np_star, np);
      attained = attained || np == spec.strata.np_star;
    }
    const bool sp = above && attained;
    special_ok += sp;
    if (!gen || !sp)
      o.details.push_back("p=" + std::to_string(D0.ring().p()) + " lambda=" + to_string(lambda) +
                          " h=" + std::to_string(D0.h()) + (gen ? "" : " [generic]") + (sp ? "" : " [specialized]"));
  };

  const auto W3 = WittRing::make(FiniteField::make(3, 1), display::default_witt_length("ss6"));
  check(display::display_from_name(W3, "ss6"), Rational(1, 3), rng);

  std::vector<Rational> slopes;
  for (int s = 1; s <= 5; ++s)
    for (int r = 1; r < s; ++r)
      if (gcd(r, s) == 1) slopes.emplace_back(r, s);
  int random_done = 0;
  for (int attempt = 0; attempt < 4000 && random_done < 40; ++attempt) {
    std::vector<Rational> set;
    int h = 0;
    const int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      const auto sl = slopes[rng() % slopes.size()];
      if (h + sl.denominator() > 10) break;
      set.push_back(sl);
      h += static_cast<int>(sl.denominator());
    }
    if (set.empty()) continue;
    const int s = 2 + static_cast<int>(rng() % 5);
    const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(s - 1));
    if (gcd(r, s) != 1) continue;
    const Rational lambda(r, s);
    std::int64_t c = 0;
    for (const auto& sl : set) c += sl.numerator();
    // p^m must stay below 2^62.
    const int m = static_cast<int>(c) + 3;
    const std::uint32_t p = attempt % 3 == 0 ? 3 : attempt % 3 == 1 || m > 9 ? 7 : 101;
    const auto W = WittRing::make(FiniteField::make(p, 1), m);
    const auto D0 = display::split_display(W, set);
    try {
      display::check_deformation_preconditions(D0, lambda);
    } catch (const Error&) {
      continue;
    }
    check(D0, lambda, rng);
    ++random_done;
  }
  o.pass = random_done >= 20 && generic_ok == total && special_ok == total;
  o.summary = "running instance + " + std::to_string(random_done) + " random instances; generic " +
              std::to_string(generic_ok) + "/" + std::to_string(total) + ", specialized " +
              std::to_string(special_ok) + "/" + std::to_string(total);
  return o;
}

// ---- 4: Artin-Schreier criterion against factoring ----

Outcome artin_schreier() {
  Outcome o;
  struct Case {
    std::uint64_t q;
    std::uint32_t p;
    int s;
  };
  std::size_t agree = 0, total = 0;
  std::ostringstream os;
  for (const auto& c : {Case{2, 2, 1}, Case{2, 2, 2}, Case{4, 2, 2}, Case{4, 2, 4}, Case{8, 2, 3}, Case{9, 3, 2}}) {
    const auto K = FiniteField::make(c.p, c.s);
    const monodromy::AsCriterion crit(K, c.q);
    std::size_t local = 0;
    for (Elem A = 0; A < K->order(); ++A) {
      const bool criterion = crit.test(A).reducible;
      oracle::Vec f(c.q + 1, 0);
      f[0] = K->neg(A);
      f[1] = K->neg(1);
      f[c.q] = 1;
      const bool berlekamp = oracle::berlekamp_factor_count(*K, f) > 1;
      const bool trial = monodromy::as_reducible_oracle(A, K, c.q);
      const bool ok = criterion == berlekamp && criterion == trial;
      local += ok;
      if (!ok) o.details.push_back("q=" + std::to_string(c.q) + " K=F" + std::to_string(K->order()) + " A=" + std::to_string(A));
    }
    agree += local;
    total += K->order();
    os << " (" << c.q << ",F" << K->order() << ") " << local << "/" << K->order();
  }
  o.pass = agree == total;
  o.summary = std::to_string(agree) + "/" + std::to_string(total) + " agree:" + os.str();
  return o;
}

// ---- 5: no-solution certificates and projector laws ----

monodromy::LaurentSlab random_slab(std::mt19937_64& rng, const arith::FieldPtr& k, std::int64_t M, std::int64_t N) {
  std::uniform_int_distribution<int> ex(-4, 4), tx(-6, 6), pick(0, 2);
  std::uniform_int_distribution<Elem> coef(1, k->order() - 1);
  auto out = monodromy::LaurentSlab::zero(k, 2);
  for (int i = 0; i < 6; ++i) {
    monodromy::Monomial m{{0, 0}, tx(rng)};
    const int kind = pick(rng);
    if (kind == 0) {
      const int c = ex(rng);
      m.z[0] = M * c;
      m.t = -N * c;
    } else {
      m.z[0] = ex(rng);
      if (kind == 2) m.z[1] = ex(rng);
    }
    out.add_term(m, coef(rng));
  }
  return out;
}

Outcome no_solution() {
  Outcome o;
  std::mt19937_64 rng(55);
  int total = 0, certified = 0, complete = 0;
  std::map<std::string, int> methods;
  for (auto [p, s] : {std::pair{2u, 2}, std::pair{3u, 1}, std::pair{2u, 3}, std::pair{3u, 2}, std::pair{5u, 1}}) {
    const auto k = FiniteField::make(p, s);
    const auto groups = monodromy::enumerate_subgroups(k, k->order());
    std::uniform_int_distribution<int> mn(1, 12), gi(1, static_cast<int>(groups.size()) - 1);
    std::uniform_int_distribution<Elem> coef(0, k->order() - 1), unit(1, k->order() - 1);
    for (int i = 0; i < 16; ++i) {
      const auto F = monodromy::subgroup_polynomial(k, groups[static_cast<std::size_t>(gi(rng))]);
      const int M = mn(rng), N = mn(rng);
      auto A = monodromy::LaurentSlab::zero(k, 2);
      A.add_term({{M, 0}, -N}, unit(rng));
      for (int j = -N + 1; j < 4; ++j) A.add_term({{M, 0}, j}, coef(rng));
      auto B = monodromy::LaurentSlab::zero(k, 2);
      for (int j = -6; j < 6; ++j) B.add_term({{0, 0}, j}, coef(rng));
      B.add_term({{0, 2}, -1}, unit(rng));
      const auto c = monodromy::no_solution_certificate(F, A, B);
      ++total;
      certified += c.certified;
      ++methods[c.method];
      // Completeness: either the degree e is not a multiple of deg F, or every
      // x of the forced degree e/deg F was tried, or c_0 != 0 rules out a monomial.
      bool comp = false;
      if (c.method == "degree") comp = static_cast<std::uint64_t>(c.e) % F.degree() != 0;
      if (c.method == "search") {
        std::uint64_t expect = k->order() - 1;
        for (int t = 0; t < c.search_degree; ++t) expect *= k->order();
        comp = c.candidates == expect;
      }
      if (c.method == "constant-term") comp = F.c[0] != 0;
      complete += comp;
    }
  }
  // Projector laws.
  int laws = 0, law_ok = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto K = FiniteField::make(p, 2);
    for (int i = 0; i < 334; ++i) {
      const auto x = random_slab(rng, K, 2, 3);
      const auto px = monodromy::laurent_projector(x, 2, 3);
      ++laws;
      law_ok += monodromy::laurent_projector(px, 2, 3) == px &&
                monodromy::laurent_projector(monodromy::pow(x, p), 2, 3) == monodromy::pow(px, p);
    }
  }
  // Control: X^p has the solution z t^{-1}, which the search must find.
  const auto k3 = FiniteField::make(3, 1);
  auto Ap = monodromy::LaurentSlab::zero(k3, 1);
  Ap.add_term({{3}, -3}, 1);
  const auto control = monodromy::no_solution_certificate(monodromy::AdditivePolynomial{k3, {0, 1}}, Ap,
                                                          monodromy::LaurentSlab::zero(k3, 1));
  const bool control_ok = !control.certified && control.solution.has_value();

  o.pass = total >= 50 && certified == total && complete == total && law_ok == laws && laws >= 1000 && control_ok;
  std::ostringstream os;
  os << certified << "/" << total << " certified, " << complete << "/" << total << " complete (";
  bool first = true;
  for (const auto& [m, n] : methods) {
    os << (first ? "" : ", ") << m << " " << n;
    first = false;
  }
  os << "); projector laws " << law_ok << "/" << laws << "; X^p control "
     << (control_ok ? "solution found" : "MISSED");
  o.summary = os.str();
  return o;
}

// ---- 6: unit-group congruences ----

arith::RamifiedElem random_elem(const arith::RamifiedOrder& O, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, O.field()->order() - 1);
  std::vector<Elem> dg(static_cast<std::size_t>(O.precision()));
  for (auto& v : dg) v = d(rng);
  return O.from_digits(dg);
}

Outcome unit_congruences() {
  Outcome o;
  std::uint64_t comm = 0, comm_ok = 0, pth = 0, pth_ok = 0;
  // Exhaustive at q = 9, n <= 2 (beta modulo pi^3 for the p-th power).
  const auto k9 = FiniteField::make(3, 2);
  for (int n = 1; n <= 2; ++n) {
    const auto O = arith::RamifiedOrder::division_order(k9, Rational(1, 2), n + 2);
    for (Elem x = 0; x < 9; ++x)
      for (Elem y = 0; y < 9; ++y) {
        ++comm;
        comm_ok += unitgroup::commutator_class(*O, x, y, n).ok;
      }
    const auto P = arith::RamifiedOrder::division_order(k9, Rational(1, 2), (n + 1) * 2 + 2);
    for (Elem a = 0; a < 9; ++a)
      for (std::uint64_t c = 0; c < 729; ++c) {
        std::vector<Elem> dg(static_cast<std::size_t>(P->precision()), 0);
        dg[0] = static_cast<Elem>(c % 9);
        dg[1] = static_cast<Elem>(c / 9 % 9);
        dg[2] = static_cast<Elem>(c / 81);
        ++pth;
        pth_ok += unitgroup::pth_power_check(*P, a, P->from_digits(dg), n);
      }
  }
  // 10^4 random cases each at q = 25 and q = 27.
  std::mt19937_64 rng(6);
  for (auto [p, s, r] : {std::tuple{5u, 2, 1}, std::tuple{3u, 3, 1}}) {
    const auto k = FiniteField::make(p, s);
    std::uniform_int_distribution<Elem> d(0, k->order() - 1);
    std::uniform_int_distribution<int> level(1, 2);
    std::vector<arith::OrderPtr> C, P;
    for (int n = 1; n <= 2; ++n) {
      C.push_back(arith::RamifiedOrder::division_order(k, Rational(r, s), n + 2));
      P.push_back(arith::RamifiedOrder::division_order(k, Rational(r, s), (n + 1) * s + 2));
    }
    for (int i = 0; i < 10'000; ++i) {
      const int n = level(rng);
      ++comm;
      comm_ok += unitgroup::commutator_class(*C[static_cast<std::size_t>(n - 1)], d(rng), d(rng), n).ok;
      const auto& O = *P[static_cast<std::size_t>(n - 1)];
      ++pth;
      pth_ok += unitgroup::pth_power_check(O, d(rng), random_elem(O, rng), n);
    }
  }
  // p = 2, n = 1: the class is alpha + alpha^2.
  const auto k8 = FiniteField::make(2, 3);
  const auto O8 = arith::RamifiedOrder::division_order(k8, Rational(1, 3), 2 * 3 + 2);
  int p2_fail = 0;
  std::string example;
  for (Elem a = 1; a < 8; ++a) {
    std::mt19937_64 g(a);
    const auto beta = random_elem(*O8, g);
    const auto cls = unitgroup::pth_power_class(*O8, a, beta, 1);
    if (cls != a && cls == k8->add(a, k8->mul(a, a))) ++p2_fail;
    if (example.empty())
      example = "p=2 s=3 n=1 alpha=" + std::to_string(a) + " beta=" + io::to_json(*O8, beta).dump() +
                " class=" + std::to_string(cls) + " (alpha+alpha^2) expected " + std::to_string(a);
  }
  o.details.push_back("counterexample: " + example);
  o.pass = comm == comm_ok && pth == pth_ok && p2_fail == 7;
  o.summary = "commutator " + std::to_string(comm_ok) + "/" + std::to_string(comm) + ", p-th power " +
              std::to_string(pth_ok) + "/" + std::to_string(pth) +
              "; p = 2, n = 1 discrepancy reproduced for " + std::to_string(p2_fail) + "/7 nonzero alpha in F_8";
  return o;
}

// ---- 7: generation ----

Outcome generation() {
  Outcome o;
  const auto k9 = FiniteField::make(3, 2);
  bool ok = true;
  std::ostringstream os;
  for (int n = 1; n <= 6; ++n) {
    const auto rep = unitgroup::generation_check(k9, Rational(1, 2), n, {0, 1, 2});
    const auto counted = unitgroup::UnitQuotient(k9, Rational(1, 2), n).count_units(1'000'000);
    const bool good = rep.generates && rep.reached == counted && counted == 8 * ipow(9, static_cast<unsigned>(n - 1));
    ok = ok && good;
    os << " n=" << n << ":" << rep.reached << (good ? "" : "!");
    if (n >= 2) {
      const auto only0 = unitgroup::generation_check(k9, Rational(1, 2), n, {0});
      if (only0.generates) {
        ok = false;
        o.details.push_back("{0} generates at n=" + std::to_string(n));
      }
    }
  }
  o.pass = ok;
  o.summary = "{0,1,2} closure = |G/G_n| by count;" + os.str() + "; {0} alone fails for n = 2..6";
  return o;
}

// ---- 8: first graded piece ----

Outcome first_graded() {
  Outcome o;
  const auto W = WittRing::make(FiniteField::make(3, 1), display::default_witt_length("ss6"));
  const auto spec = display::deformation(display::display_from_name(W, "ss6"), Rational(1, 3));
  const auto fw = monodromy::first_witt_equation(monodromy::monodromy_equation(spec));
  const auto check = monodromy::validate_first_witt(fw, 0, 16);
  const auto ph = ipow(3, 6), phs = ipow(3, 3), q = ipow(3, 3);
  const bool identity = fw.kummer_identity && fw.t_exponent == ph - phs && ph - phs == phs * (q - 1);
  int divides = 0;
  for (const auto& s : check.samples) divides += s.divides && s.kummer_degree == s.splitting_degree;
  o.pass = identity && check.passed && check.samples.size() == 16 && divides == 16 && check.attained &&
           fw.group_order == q - 1 && fw.separable_degree == q - 1;
  o.summary = fw.to_string() + "; 3^6 - 3^3 = 3^3(3^3 - 1) " + (identity ? "holds" : "FAILS") + "; " +
              std::to_string(divides) + "/16 specializations divide q-1" + (check.attained ? ", attained" : "") +
              "; group order " + std::to_string(fw.group_order);
  return o;
}

// ---- 9: end to end ----

int run_cli(std::vector<std::string> args, std::string& out) {
  args.insert(args.begin(), "slopekit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream os, es;
  const int rc = cli::run(static_cast<int>(argv.size()), argv.data(), os, es);
  out = os.str() + es.str();
  return rc;
}

Outcome end_to_end() {
  Outcome o;
  std::string out;
  const int rc = run_cli({"certify", "--base", "ss6", "--lambda", "1/3", "--format", "json"}, out);
  bool ok = rc == cli::kOk;
  std::string verdict = "?";
  std::set<int> certified;
  try {
    const auto j = io::parse(out);
    verdict = j.at("verdict").get<std::string>();
    for (const auto& leg : j.at("legs"))
      if (leg.at("status") == "certified") certified.insert(leg.at("piece").get<int>());
  } catch (const std::exception&) {
    ok = false;
  }
  ok = ok && verdict == "large" && certified == std::set<int>{0, 1, 3};
  const int rc_excluded = run_cli({"certify", "--base", "ss6", "--lambda", "2/3"}, out);
  const int rc_excluded4 = run_cli({"certify", "--base", "ss8", "--lambda", "3/4"}, out);
  const int rc_steep = run_cli({"certify", "--base", "ss6", "--lambda", "3/5"}, out);
  const int rc_equal = run_cli({"certify", "--base", "H1/3+H2/3", "--lambda", "1/3"}, out);
  ok = ok && rc_excluded == 2 && rc_excluded4 == 2 && rc_steep == 2 && rc_equal == 2;
  o.pass = ok;
  o.summary = "certify ss6 1/3 -> exit " + std::to_string(rc) + ", pieces {0,1,3} " +
              (certified == std::set<int>{0, 1, 3} ? "certified" : "NOT certified") + ", verdict \"" + verdict +
              "\"; exits for 2/3, 3/4 (r = s-1), 3/5 (> min slope), 1/3 (= min slope): " +
              std::to_string(rc_excluded) + " " + std::to_string(rc_excluded4) + " " + std::to_string(rc_steep) +
              " " + std::to_string(rc_equal);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only, expect_fail;
  bool verbose = false;
  app.add_option("--only", only, "Run only these criteria");
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail; they do not affect the exit status");
  app.add_flag("-v,--verbose", verbose, "Print every detail line");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"strata lemmas sweep", strata_sweep},
      {"Cayley-Hamilton oracle", cayley_hamilton},
      {"deformation polygon", deformation_polygon},
      {"Artin-Schreier criterion vs factoring", artin_schreier},
      {"no-solution certificates and projector laws", no_solution},
      {"unit-group congruences", unit_congruences},
      {"generation from pieces {0,1,s}", generation},
      {"first graded certificate", first_graded},
      {"end-to-end certify", end_to_end},
  };
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool xfail = expected.count(id) > 0;
    const char* tag = o.pass ? (xfail ? "XPASS" : "PASS") : (xfail ? "XFAIL" : "FAIL");
    if (o.pass == xfail) ++unexpected;
    std::cout << "[" << tag << "] " << id << " " << criteria[i].first << ": " << o.summary << " ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
    const std::size_t limit = verbose ? o.details.size() : std::min<std::size_t>(o.details.size(), 50);
    for (std::size_t k = 0; k < limit; ++k) std::cout << "    " << o.details[k] << "\n";
    if (limit < o.details.size()) std::cout << "    ... " << o.details.size() - limit << " more\n";
    std::cout.flush();
  }
  return unexpected == 0 ? 0 : 1;
}
