#include "slopekit/io/json.hpp"

#include "slopekit/error.hpp"

namespace slopekit::io {

namespace {

using arith::FiniteField;
using Elem = FiniteField::Elem;

template <class T, class F>
Json array_of(const std::vector<T>& xs, F&& f) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

Json points(const std::vector<polygon::Point>& pts) {
  return array_of(pts, [](const auto& pt) { return to_json(pt); });
}

std::vector<polygon::Point> points_from(const Json& j) {
  std::vector<polygon::Point> out;
  for (const auto& v : j) out.push_back(point_from_json(v));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    raise(ErrorKind::Parse, "JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json tagged(const std::string& kind, Json body) {
  body["schema"] = std::string("slopekit/") + kSchemaVersion + "/" + kind;
  return body;
}

Json to_json(const Rational& q) { return slopekit::to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_rational(j.get<std::string>());
}

Json to_json(const FiniteField& k) {
  return {{"p", k.characteristic()}, {"s", k.degree()}, {"modulus", k.modulus()}};
}

arith::FieldPtr field_from_json(const Json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto s = j.at("s").get<int>();
  if (!j.contains("modulus")) return FiniteField::make(p, s);
  auto k = FiniteField::with_modulus(p, j.at("modulus").get<std::vector<std::uint32_t>>());
  require(k->degree() == s, ErrorKind::Parse, "modulus degree does not match s");
  return k;
}

Json to_json(const arith::WittRing& W) {
  return {{"field", to_json(W.residue())}, {"length", W.length()}};
}

arith::WittPtr witt_from_json(const Json& j) {
  return arith::WittRing::make(field_from_json(j.at("field")), j.at("length").get<int>());
}

Json to_json(const arith::RamifiedOrder& O) {
  return {{"field", to_json(*O.field())},
          {"e", O.ramification()},
          {"r", O.twist()},
          {"precision", O.precision()}};
}

arith::OrderPtr order_from_json(const Json& j) {
  return arith::RamifiedOrder::make(field_from_json(j.at("field")), j.at("e").get<int>(),
                                    j.at("r").get<int>(), j.at("precision").get<int>());
}

Json to_json(const arith::WittRing& W, const arith::WittVec& a) { return W.digits(a); }

arith::WittVec witt_vec_from_json(const arith::WittRing& W, const Json& j) {
  return W.from_digits(j.get<std::vector<Elem>>());
}

Json to_json(const arith::RamifiedOrder& O, const arith::RamifiedElem& a) { return O.digits(a); }

arith::RamifiedElem ramified_from_json(const arith::RamifiedOrder& O, const Json& j) {
  return O.from_digits(j.get<std::vector<Elem>>());
}

Json to_json(const polygon::Point& pt) { return Json::array({pt.x, pt.y}); }

polygon::Point point_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2, ErrorKind::Parse, "a point is a pair [x, y]");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

Json to_json(const polygon::NewtonPolygon& np) {
  Json segs = Json::array();
  for (const auto& sg : np.segments())
    segs.push_back({{"slope", to_json(sg.slope)}, {"width", sg.width}});
  return {{"segments", segs}};
}

polygon::NewtonPolygon polygon_from_json(const Json& j) {
  std::vector<polygon::Segment> segs;
  for (const auto& s : j.at("segments"))
    segs.push_back({rational_from_json(s.at("slope")), s.at("width").get<std::int64_t>()});
  // Steep slopes occur for hulls of arbitrary point sets.
  return polygon::NewtonPolygon::make(std::move(segs), true);
}

Json to_json(const polygon::AttainabilityWitness& w) {
  return {{"lambda", to_json(w.lambda)},
          {"witness", to_json(w.witness)},
          {"witness_compact", w.witness.to_compact()},
          {"base", to_json(w.base)},
          {"inserted", to_json(w.inserted)}};
}

polygon::AttainabilityWitness attainability_from_json(const Json& j) {
  return {rational_from_json(j.at("lambda")), polygon_from_json(j.at("witness")),
          point_from_json(j.at("base")), point_from_json(j.at("inserted"))};
}

Json to_json(const display::Stratification& st) {
  Json layers = Json::array();
  for (const auto& [jj, pts] : st.layers) layers.push_back({{"j", jj}, {"points", points(pts)}});
  return {{"d", st.d},
          {"c", st.c},
          {"lambda", to_json(st.lambda)},
          {"np_star", to_json(st.np_star)},
          {"P", points(st.P)},
          {"P_star", points(st.P_star)},
          {"layers", layers}};
}

display::Stratification strata_from_json(const Json& j) {
  display::Stratification st;
  st.d = j.at("d").get<int>();
  st.c = j.at("c").get<int>();
  st.lambda = rational_from_json(j.at("lambda"));
  st.np_star = polygon_from_json(j.at("np_star"));
  st.P = points_from(j.at("P"));
  st.P_star = points_from(j.at("P_star"));
  for (const auto& l : j.at("layers")) st.layers[l.at("j").get<int>()] = points_from(l.at("points"));
  return st;
}

Json to_json(const display::FormalOps& ops, const display::Formal& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms)
    terms.push_back({{"coeff", to_json(ops.ring(), t.coeff)}, {"symbol", t.symbol}, {"twist", t.twist}});
  return {{"constant", to_json(ops.ring(), f.constant)}, {"terms", terms}};
}

display::Formal formal_from_json(const display::FormalOps& ops, const Json& j) {
  auto out = ops.constant(witt_vec_from_json(ops.ring(), j.at("constant")));
  for (const auto& t : j.at("terms")) {
    const auto sym = ops.scale(ops.symbol(t.at("symbol").get<std::string>(), t.at("twist").get<int>()),
                               witt_vec_from_json(ops.ring(), t.at("coeff")));
    out = ops.add(out, sym);
  }
  return out;
}

Json to_json(const display::Display& D) {
  Json rows = Json::array();
  for (int i = 1; i <= D.h(); ++i) {
    Json row = Json::array();
    for (int k = 1; k <= D.h(); ++k) row.push_back(to_json(D.ops(), D.at(i, k)));
    rows.push_back(row);
  }
  return {{"ring", to_json(D.ring())}, {"d", D.d()}, {"c", D.c()}, {"matrix", rows}};
}

display::Display display_from_json(const Json& j) {
  display::Display D(witt_from_json(j.at("ring")), j.at("d").get<int>(), j.at("c").get<int>());
  const auto& rows = j.at("matrix");
  require(rows.size() == static_cast<std::size_t>(D.h()), ErrorKind::Parse, "display matrix has the wrong size");
  for (int i = 1; i <= D.h(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    require(row.size() == static_cast<std::size_t>(D.h()), ErrorKind::Parse, "display row has the wrong size");
    for (int k = 1; k <= D.h(); ++k) D.at(i, k) = formal_from_json(D.ops(), row[static_cast<std::size_t>(k - 1)]);
  }
  return D;
}

Json to_json(const display::CharPoly& chi) {
  return {{"ring", to_json(chi.ops.ring())},
          {"h", chi.h},
          {"A", array_of(chi.A, [&](const auto& a) { return to_json(chi.ops, a); })},
          {"text", chi.to_string()}};
}

display::CharPoly charpoly_from_json(const Json& j) {
  display::CharPoly chi{display::FormalOps(witt_from_json(j.at("ring"))), j.at("h").get<int>(), {}};
  for (const auto& a : j.at("A")) chi.A.push_back(formal_from_json(chi.ops, a));
  require(chi.A.size() == static_cast<std::size_t>(chi.h), ErrorKind::Parse, "charpoly needs h coefficients");
  return chi;
}

Json to_json(const display::DeformationTerm& t) {
  return {{"xy", to_json(t.xy)}, {"layer", t.layer}, {"twist", t.twist}, {"symbol", t.symbol}};
}

display::DeformationTerm deformation_term_from_json(const Json& j) {
  return {point_from_json(j.at("xy")), j.at("layer").get<int>(), j.at("twist").get<int>(),
          j.at("symbol").get<std::string>()};
}

Json to_json(const monodromy::MonodromyEquation& eq) {
  Json terms = Json::array();
  for (const auto& t : eq.terms)
    terms.push_back({{"x", t.x},
                     {"j", t.j},
                     {"p_exponent", to_json(Rational(t.j, eq.s()))},
                     {"twist", t.twist},
                     {"symbol", t.symbol},
                     {"xy", to_json(t.xy)},
                     {"constant", t.constant}});
  return {{"p", eq.p},
          {"h", eq.h},
          {"d", eq.d},
          {"lambda", to_json(eq.lambda)},
          {"terms", terms},
          {"text", eq.to_string()}};
}

monodromy::MonodromyEquation monodromy_from_json(const Json& j) {
  monodromy::MonodromyEquation eq;
  eq.p = j.at("p").get<std::uint32_t>();
  eq.h = j.at("h").get<int>();
  eq.d = j.at("d").get<int>();
  eq.lambda = rational_from_json(j.at("lambda"));
  for (const auto& t : j.at("terms"))
    eq.terms.push_back({t.at("x").get<int>(), t.at("j").get<int>(), t.at("twist").get<int>(),
                        t.at("symbol").get<std::string>(), point_from_json(t.at("xy")),
                        t.at("constant").get<Elem>()});
  return eq;
}

Json to_json(const monodromy::FirstWittEquation& fw) {
  return {{"p", fw.p},
          {"h", fw.h},
          {"d", fw.d},
          {"r", fw.r},
          {"s", fw.s},
          {"symbol", fw.symbol},
          {"lead_power", fw.lead_power},
          {"mid_power", fw.mid_power},
          {"u_power", fw.u_power},
          {"t_exponent", fw.t_exponent},
          {"u_exponent", fw.u_exponent},
          {"kummer_identity", fw.kummer_identity},
          {"separable_degree", fw.separable_degree},
          {"group_order", fw.group_order},
          {"text", fw.to_string()}};
}

monodromy::FirstWittEquation first_witt_from_json(const Json& j) {
  monodromy::FirstWittEquation fw;
  fw.p = j.at("p").get<std::uint32_t>();
  fw.h = j.at("h").get<int>();
  fw.d = j.at("d").get<int>();
  fw.r = j.at("r").get<int>();
  fw.s = j.at("s").get<int>();
  fw.symbol = j.at("symbol").get<std::string>();
  fw.lead_power = j.at("lead_power").get<int>();
  fw.mid_power = j.at("mid_power").get<int>();
  fw.u_power = j.at("u_power").get<int>();
  fw.t_exponent = j.at("t_exponent").get<std::uint64_t>();
  fw.u_exponent = j.at("u_exponent").get<std::uint64_t>();
  fw.kummer_identity = j.at("kummer_identity").get<bool>();
  fw.separable_degree = j.at("separable_degree").get<std::uint64_t>();
  fw.group_order = j.at("group_order").get<std::uint64_t>();
  return fw;
}

Json to_json(const monodromy::FirstWittCheck& c) {
  Json samples = Json::array();
  for (const auto& s : c.samples)
    samples.push_back({{"u", s.u},
                       {"kummer_degree", s.kummer_degree},
                       {"splitting_degree", s.splitting_degree},
                       {"divides", s.divides}});
  return {{"equation", to_json(c.equation)},
          {"field", c.field},
          {"samples", samples},
          {"attained", c.attained},
          {"passed", c.passed}};
}

monodromy::FirstWittCheck first_witt_check_from_json(const Json& j) {
  monodromy::FirstWittCheck c;
  c.equation = first_witt_from_json(j.at("equation"));
  c.field = j.at("field").get<std::string>();
  for (const auto& s : j.at("samples"))
    c.samples.push_back({s.at("u").get<Elem>(), s.at("kummer_degree").get<std::uint64_t>(),
                         s.at("splitting_degree").get<std::uint64_t>(), s.at("divides").get<bool>()});
  c.attained = j.at("attained").get<bool>();
  c.passed = j.at("passed").get<bool>();
  return c;
}

Json to_json(const monodromy::GradedEquation& eq) {
  Json rhs = Json::array();
  for (const auto& t : eq.rhs)
    rhs.push_back({{"j", t.j},
                   {"x", t.x},
                   {"symbol", t.symbol},
                   {"xy", to_json(t.xy)},
                   {"u_power", t.u_power},
                   {"constant", t.constant},
                   {"t_power", t.t_power},
                   {"w_index", t.w_index}});
  return {{"p", eq.p},
          {"level", eq.level},
          {"h", eq.h},
          {"s", eq.s},
          {"rhs", rhs},
          {"text", eq.to_string()}};
}

monodromy::GradedEquation graded_from_json(const Json& j) {
  monodromy::GradedEquation eq;
  eq.p = j.at("p").get<std::uint32_t>();
  eq.level = j.at("level").get<int>();
  eq.h = j.at("h").get<int>();
  eq.s = j.at("s").get<int>();
  for (const auto& t : j.at("rhs"))
    eq.rhs.push_back({t.at("j").get<int>(), t.at("x").get<int>(), t.at("symbol").get<std::string>(),
                      point_from_json(t.at("xy")), t.at("u_power").get<int>(),
                      t.at("constant").get<Elem>(), t.at("t_power").get<int>(),
                      t.at("w_index").get<int>()});
  return eq;
}

Json to_json(const monodromy::AsVerdict& v) {
  return {{"reducible", v.reducible}, {"subgroup", v.subgroup}, {"witness", optional_json(v.witness)}};
}

monodromy::AsVerdict as_verdict_from_json(const Json& j) {
  return {j.at("reducible").get<bool>(), j.at("subgroup").get<std::vector<Elem>>(),
          optional_from<Elem>(j.at("witness"))};
}

Json to_json(const monodromy::NoSolutionCertificate& c) {
  return {{"M", c.M},
          {"N", c.N},
          {"e", c.e},
          {"m", c.m},
          {"n", c.n},
          {"leading", c.leading},
          {"degree", c.degree},
          {"projection_is_monomial", c.projection_is_monomial},
          {"projector_idempotent", c.projector_idempotent},
          {"projector_commutes_with_p", c.projector_commutes_with_p},
          {"degree_forced", c.degree_forced},
          {"search_degree", c.search_degree},
          {"candidates", c.candidates},
          {"constant_term_argument", c.constant_term_argument},
          {"method", c.method},
          {"solution", optional_json(c.solution)},
          {"certified", c.certified}};
}

monodromy::NoSolutionCertificate no_solution_from_json(const Json& j) {
  monodromy::NoSolutionCertificate c;
  c.M = j.at("M").get<std::int64_t>();
  c.N = j.at("N").get<std::int64_t>();
  c.e = j.at("e").get<std::int64_t>();
  c.m = j.at("m").get<std::int64_t>();
  c.n = j.at("n").get<std::int64_t>();
  c.leading = j.at("leading").get<Elem>();
  c.degree = j.at("degree").get<std::uint64_t>();
  c.projection_is_monomial = j.at("projection_is_monomial").get<bool>();
  c.projector_idempotent = j.at("projector_idempotent").get<bool>();
  c.projector_commutes_with_p = j.at("projector_commutes_with_p").get<bool>();
  c.degree_forced = j.at("degree_forced").get<bool>();
  c.search_degree = j.at("search_degree").get<std::int64_t>();
  c.candidates = j.at("candidates").get<std::uint64_t>();
  c.constant_term_argument = j.at("constant_term_argument").get<bool>();
  c.method = j.at("method").get<std::string>();
  c.solution = optional_from<std::vector<Elem>>(j.at("solution"));
  c.certified = j.at("certified").get<bool>();
  return c;
}

namespace {

Json evidence_json(const monodromy::PieceEvidence& ev) {
  Json methods = Json::array();
  for (const auto& [name, count] : ev.methods) methods.push_back({{"method", name}, {"count", count}});
  return {{"level", ev.level},
          {"stratum", points(ev.stratum)},
          {"pivot", ev.pivot ? to_json(*ev.pivot) : Json(nullptr)},
          {"symbol", ev.symbol},
          {"M", ev.M},
          {"N", ev.N},
          {"monomial_present", ev.monomial_present},
          {"isolated", ev.isolated},
          {"subgroups", ev.subgroups},
          {"certified_subgroups", ev.certified_subgroups},
          {"methods", methods}};
}

monodromy::PieceEvidence evidence_from(const Json& j) {
  monodromy::PieceEvidence ev;
  ev.level = j.at("level").get<int>();
  ev.stratum = points_from(j.at("stratum"));
  if (!j.at("pivot").is_null()) ev.pivot = point_from_json(j.at("pivot"));
  ev.symbol = j.at("symbol").get<std::string>();
  ev.M = j.at("M").get<std::int64_t>();
  ev.N = j.at("N").get<std::int64_t>();
  ev.monomial_present = j.at("monomial_present").get<bool>();
  ev.isolated = j.at("isolated").get<bool>();
  ev.subgroups = j.at("subgroups").get<int>();
  ev.certified_subgroups = j.at("certified_subgroups").get<int>();
  for (const auto& m : j.at("methods"))
    ev.methods.emplace_back(m.at("method").get<std::string>(), m.at("count").get<int>());
  return ev;
}

}  // namespace

Json to_json(const monodromy::LargenessCertificate& c) {
  Json legs = Json::array();
  for (const auto& l : c.legs) {
    Json evidence = Json::object();
    if (l.first_witt) evidence["first_witt"] = to_json(*l.first_witt);
    if (l.evidence) evidence["piece"] = evidence_json(*l.evidence);
    legs.push_back({{"piece", l.piece},
                    {"status", l.certified ? "certified" : "failed"},
                    {"failure", l.failure},
                    {"evidence", evidence}});
  }
  return {{"p", c.p},
          {"h", c.h},
          {"d", c.d},
          {"lambda", to_json(c.lambda)},
          {"pieces", c.pieces},
          {"legs", legs},
          {"closure", c.closure ? to_json(*c.closure) : Json(nullptr)},
          {"verdict", c.verdict}};
}

monodromy::LargenessCertificate largeness_from_json(const Json& j) {
  monodromy::LargenessCertificate c;
  c.p = j.at("p").get<std::uint32_t>();
  c.h = j.at("h").get<int>();
  c.d = j.at("d").get<int>();
  c.lambda = rational_from_json(j.at("lambda"));
  c.pieces = j.at("pieces").get<std::vector<int>>();
  for (const auto& l : j.at("legs")) {
    monodromy::LargenessLeg leg;
    leg.piece = l.at("piece").get<int>();
    const auto status = l.at("status").get<std::string>();
    require(status == "certified" || status == "failed", ErrorKind::Parse, "unknown leg status " + status);
    leg.certified = status == "certified";
    leg.failure = l.at("failure").get<std::string>();
    const auto& ev = l.at("evidence");
    if (ev.contains("first_witt")) leg.first_witt = first_witt_check_from_json(ev.at("first_witt"));
    if (ev.contains("piece")) leg.evidence = evidence_from(ev.at("piece"));
    c.legs.push_back(std::move(leg));
  }
  if (!j.at("closure").is_null()) c.closure = generation_from_json(j.at("closure"));
  c.verdict = j.at("verdict").get<std::string>();
  return c;
}

Json to_json(const unitgroup::GenerationReport& r) {
  return {{"q", r.q},
          {"lambda", to_json(r.lambda)},
          {"n", r.n},
          {"covered", r.covered},
          {"generates", r.generates},
          {"order", r.order},
          {"reached", r.reached}};
}

unitgroup::GenerationReport generation_from_json(const Json& j) {
  return {j.at("q").get<std::uint64_t>(), rational_from_json(j.at("lambda")),
          j.at("n").get<int>(),           j.at("covered").get<std::vector<int>>(),
          j.at("generates").get<bool>(),  j.at("order").get<std::uint64_t>(),
          j.at("reached").get<std::uint64_t>()};
}

Json to_json(const unitgroup::CommutatorCheck& c) {
  return {{"x", c.x}, {"y", c.y}, {"n", c.n}, {"expected", c.expected}, {"computed", c.computed}, {"ok", c.ok}};
}

unitgroup::CommutatorCheck commutator_from_json(const Json& j) {
  return {j.at("x").get<Elem>(),        j.at("y").get<Elem>(),        j.at("n").get<int>(),
          j.at("expected").get<Elem>(), j.at("computed").get<Elem>(), j.at("ok").get<bool>()};
}

bool DeformReport::operator==(const DeformReport& o) const {
  return base == o.base && lambda == o.lambda && strata == o.strata && chi.h == o.chi.h &&
         chi.A == o.chi.A && terms == o.terms && equation == o.equation && graded == o.graded;
}

DeformReport deform_report(const display::DeformationSpec& spec) {
  return {spec.base, spec.lambda, spec.strata, spec.chi, spec.terms,
          monodromy::monodromy_equation(spec), monodromy::graded_equations(spec)};
}

Json to_json(const DeformReport& r) {
  return {{"base", to_json(r.base)},
          {"lambda", to_json(r.lambda)},
          {"strata", to_json(r.strata)},
          {"chi", to_json(r.chi)},
          {"terms", array_of(r.terms, [](const auto& t) { return to_json(t); })},
          {"monodromy", to_json(r.equation)},
          {"graded", array_of(r.graded, [](const auto& g) { return to_json(g); })}};
}

DeformReport deform_report_from_json(const Json& j) {
  DeformReport r{display_from_json(j.at("base")),
                 rational_from_json(j.at("lambda")),
                 strata_from_json(j.at("strata")),
                 charpoly_from_json(j.at("chi")),
                 {},
                 monodromy_from_json(j.at("monodromy")),
                 {}};
  for (const auto& t : j.at("terms")) r.terms.push_back(deformation_term_from_json(t));
  for (const auto& g : j.at("graded")) r.graded.push_back(graded_from_json(g));
  return r;
}

}  // namespace slopekit::io
