#include <random>

#include "doctest.h"
#include "slopekit/error.hpp"
#include "slopekit/io/json.hpp"
#include "slopekit/monodromy/artin_schreier.hpp"

using namespace slopekit;
using namespace slopekit::io;
using arith::FiniteField;
using arith::WittRing;
using polygon::NewtonPolygon;

namespace {

display::DeformationSpec instance(const std::string& base, Rational lambda, std::uint32_t p = 3) {
  auto W = WittRing::make(FiniteField::make(p, 1), display::default_witt_length(base));
  return display::deformation(display::display_from_name(W, base), lambda);
}

// Serialize, print, re-parse and serialize again.
Json reprint(const Json& j) { return parse(dump(j)); }

}  // namespace

TEST_CASE("polygon JSON has the documented shape and round-trips") {
  const auto np = NewtonPolygon::parse("(1/3 x3)(2/3 x3)");
  const auto j = to_json(np);
  CHECK(j == Json::parse(R"({"segments":[{"slope":"1/3","width":3},{"slope":"2/3","width":3}]})"));
  CHECK(polygon_from_json(reprint(j)) == np);
  const auto w = polygon::attainable(NewtonPolygon::parse("1/2x6"), Rational(1, 3));
  REQUIRE(w);
  const auto back = attainability_from_json(reprint(to_json(*w)));
  CHECK(back.witness == w->witness);
  CHECK(back.base == w->base);
  CHECK(back.inserted == w->inserted);
  CHECK(back.lambda == w->lambda);
  const auto steep = NewtonPolygon::lower_hull({{0, 0}, {1, 3}, {2, 4}});
  CHECK(polygon_from_json(reprint(to_json(steep))) == steep);
}

TEST_CASE("contexts and elements round-trip") {
  for (const auto& [p, s] : std::vector<std::pair<std::uint32_t, int>>{{2, 3}, {3, 2}, {5, 2}, {7, 2}}) {
    const auto k = FiniteField::make(p, s, 3);
    const auto k2 = field_from_json(reprint(to_json(*k)));
    CHECK(*k2 == *k);
    const auto W = WittRing::make(k, 4);
    const auto W2 = witt_from_json(reprint(to_json(*W)));
    CHECK(W2->length() == 4);
    std::mt19937_64 rng(p * 10 + s);
    std::uniform_int_distribution<FiniteField::Elem> d(0, k->order() - 1);
    for (int i = 0; i < 20; ++i) {
      const auto a = W->from_digits({d(rng), d(rng), d(rng), d(rng)});
      CHECK(witt_vec_from_json(*W2, reprint(to_json(*W, a))) == a);
    }
    const auto O = arith::RamifiedOrder::division_order(k, Rational(1, s), 3 * s);
    const auto O2 = order_from_json(reprint(to_json(*O)));
    CHECK(O2->twist() == O->twist());
    CHECK(O2->precision() == O->precision());
    std::vector<FiniteField::Elem> dg(static_cast<std::size_t>(O->precision()));
    for (auto& v : dg) v = d(rng);
    const auto x = O->from_digits(dg);
    CHECK(ramified_from_json(*O2, reprint(to_json(*O, x))) == x);
  }
  CHECK_THROWS_AS(parse("{\"p\": 3,"), Error);
  try {
    parse("[1, 2");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("displays, strata and characteristic polynomials round-trip") {
  for (const auto& [base, lambda] : std::vector<std::pair<std::string, Rational>>{
           {"ss6", Rational(1, 3)}, {"ss8", Rational(1, 4)}, {"H1/2+H2/3", Rational(1, 3)}}) {
    const auto spec = instance(base, lambda);
    CHECK(display_from_json(reprint(to_json(spec.base))) == spec.base);
    CHECK(display_from_json(reprint(to_json(spec.deformed))) == spec.deformed);
    CHECK(strata_from_json(reprint(to_json(spec.strata))) == spec.strata);
    const auto chi = charpoly_from_json(reprint(to_json(spec.chi)));
    CHECK(chi.h == spec.chi.h);
    CHECK(chi.A == spec.chi.A);
    CHECK(chi.to_string() == spec.chi.to_string());
    const auto rep = deform_report(spec);
    CHECK(deform_report_from_json(reprint(to_json(rep))) == rep);
  }
}

TEST_CASE("equations serialize exact exponents and round-trip") {
  const auto spec = instance("ss6", Rational(1, 3));
  const auto eq = monodromy::monodromy_equation(spec);
  const auto j = to_json(eq);
  for (const auto& t : j.at("terms"))
    CHECK(t.at("p_exponent") == to_json(Rational(t.at("j").get<int>(), 3)));
  CHECK(monodromy_from_json(reprint(j)) == eq);
  for (const auto& g : monodromy::graded_equations(eq)) CHECK(graded_from_json(reprint(to_json(g))) == g);
  const auto fw = monodromy::first_witt_equation(eq);
  CHECK(first_witt_from_json(reprint(to_json(fw))) == fw);
  const auto check = monodromy::validate_first_witt(fw, 0);
  CHECK(first_witt_check_from_json(reprint(to_json(check))) == check);
}

TEST_CASE("appendix and unit-group reports round-trip") {
  const auto K = FiniteField::make(2, 4);
  monodromy::AsCriterion crit(K, 4);
  for (FiniteField::Elem A = 0; A < 16; ++A) {
    const auto v = crit.test(A);
    CHECK(as_verdict_from_json(reprint(to_json(v))) == v);
  }
  const auto k = FiniteField::make(3, 1);
  auto A = monodromy::LaurentSlab::zero(k, 1);
  A.add_term({{3}, -3}, 1);
  const auto B = monodromy::LaurentSlab::zero(k, 1);
  for (const auto& F : {monodromy::AdditivePolynomial{k, {0, 1}}, monodromy::AdditivePolynomial{k, {2, 1}}}) {
    const auto c = monodromy::no_solution_certificate(F, A, B);
    CHECK(no_solution_from_json(reprint(to_json(c))) == c);
  }
  const auto rep = unitgroup::generation_check(FiniteField::make(3, 2), Rational(1, 2), 3, {0, 1, 2});
  const auto jr = to_json(rep);
  for (const char* key : {"q", "lambda", "n", "covered", "generates", "order"}) CHECK(jr.contains(key));
  CHECK(generation_from_json(reprint(jr)) == rep);
  const auto O = arith::RamifiedOrder::division_order(FiniteField::make(3, 2), Rational(1, 2), 4);
  const auto cc = unitgroup::commutator_class(*O, 2, 5, 1);
  const auto cc2 = commutator_from_json(reprint(to_json(cc)));
  CHECK(cc2.expected == cc.expected);
  CHECK(cc2.computed == cc.computed);
  CHECK(cc2.ok == cc.ok);
}

TEST_CASE("largeness certificate JSON shape, round-trip and determinism") {
  const auto spec = instance("ss6", Rational(1, 3));
  const auto cert = monodromy::largeness_certificate(spec);
  const auto j = to_json(cert);
  CHECK(j.at("pieces") == Json::array({0, 1, 3}));
  for (const auto& leg : j.at("legs")) {
    CHECK(leg.at("status") == "certified");
    CHECK(leg.contains("evidence"));
  }
  CHECK(largeness_from_json(reprint(j)) == cert);
  CHECK(dump(to_json(monodromy::largeness_certificate(spec))) == dump(j));
  const auto t = tagged("certificate", j);
  CHECK(t.at("schema") == "slopekit/v1/certificate");

  const auto failing = instance("ss4", Rational(1, 3));
  const auto fc = monodromy::largeness_certificate(failing);
  const auto fj = to_json(fc);
  CHECK(fj.at("verdict") == "not certified");
  CHECK(largeness_from_json(reprint(fj)) == fc);
}
