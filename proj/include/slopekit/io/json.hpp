#pragma once

#include <string>

#include <json.hpp>

#include "slopekit/display/deformation.hpp"
#include "slopekit/monodromy/certificate.hpp"
#include "slopekit/unitgroup/units.hpp"

namespace slopekit::io {

using Json = nlohmann::json;

/// Version tag written into every top-level document.
inline constexpr const char* kSchemaVersion = "v1";

/// Pretty-printed with sorted keys and a trailing newline, so equal values
/// give byte-identical text.
std::string dump(const Json& j);
/// Throws Error(Parse) with the byte offset on malformed input.
Json parse(const std::string& text);
/// Adds {"schema": "slopekit/v1/<kind>"}.
Json tagged(const std::string& kind, Json body);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Contexts: {"p", "s", "modulus"}, {"field", "length"}, {"field", "e", "r", "precision"}.
Json to_json(const arith::FiniteField& k);
arith::FieldPtr field_from_json(const Json& j);
Json to_json(const arith::WittRing& W);
arith::WittPtr witt_from_json(const Json& j);
Json to_json(const arith::RamifiedOrder& O);
arith::OrderPtr order_from_json(const Json& j);

// Elements are Teichmuller digit lists.
Json to_json(const arith::WittRing& W, const arith::WittVec& a);
arith::WittVec witt_vec_from_json(const arith::WittRing& W, const Json& j);
Json to_json(const arith::RamifiedOrder& O, const arith::RamifiedElem& a);
arith::RamifiedElem ramified_from_json(const arith::RamifiedOrder& O, const Json& j);

Json to_json(const polygon::Point& pt);
polygon::Point point_from_json(const Json& j);
/// {"segments": [{"slope": "r/s", "width": n}]}.
Json to_json(const polygon::NewtonPolygon& np);
polygon::NewtonPolygon polygon_from_json(const Json& j);
Json to_json(const polygon::AttainabilityWitness& w);
polygon::AttainabilityWitness attainability_from_json(const Json& j);

Json to_json(const display::Stratification& st);
display::Stratification strata_from_json(const Json& j);
/// Entries are {"constant": digits, "terms": [{"coeff", "symbol", "twist"}]}.
Json to_json(const display::FormalOps& ops, const display::Formal& f);
display::Formal formal_from_json(const display::FormalOps& ops, const Json& j);
Json to_json(const display::Display& D);
display::Display display_from_json(const Json& j);
Json to_json(const display::CharPoly& chi);
display::CharPoly charpoly_from_json(const Json& j);
Json to_json(const display::DeformationTerm& t);
display::DeformationTerm deformation_term_from_json(const Json& j);

Json to_json(const monodromy::MonodromyEquation& eq);
monodromy::MonodromyEquation monodromy_from_json(const Json& j);
Json to_json(const monodromy::FirstWittEquation& fw);
monodromy::FirstWittEquation first_witt_from_json(const Json& j);
Json to_json(const monodromy::FirstWittCheck& c);
monodromy::FirstWittCheck first_witt_check_from_json(const Json& j);
Json to_json(const monodromy::GradedEquation& eq);
monodromy::GradedEquation graded_from_json(const Json& j);
Json to_json(const monodromy::AsVerdict& v);
monodromy::AsVerdict as_verdict_from_json(const Json& j);
Json to_json(const monodromy::NoSolutionCertificate& c);
monodromy::NoSolutionCertificate no_solution_from_json(const Json& j);
/// {"pieces": [0, 1, s], "legs": [{"piece", "status", "evidence", ...}], ...}.
Json to_json(const monodromy::LargenessCertificate& c);
monodromy::LargenessCertificate largeness_from_json(const Json& j);

/// {"q", "lambda", "n", "covered", "generates", "order", "reached"}.
Json to_json(const unitgroup::GenerationReport& r);
unitgroup::GenerationReport generation_from_json(const Json& j);
Json to_json(const unitgroup::CommutatorCheck& c);
unitgroup::CommutatorCheck commutator_from_json(const Json& j);

/// Everything the deform command reports about one deformation.
struct DeformReport {
  display::Display base;
  Rational lambda;
  display::Stratification strata;
  display::CharPoly chi;
  std::vector<display::DeformationTerm> terms;
  monodromy::MonodromyEquation equation;
  std::vector<monodromy::GradedEquation> graded;
  bool operator==(const DeformReport& o) const;
};
DeformReport deform_report(const display::DeformationSpec& spec);
Json to_json(const DeformReport& r);
DeformReport deform_report_from_json(const Json& j);

}  // namespace slopekit::io
