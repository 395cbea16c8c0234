#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slopekit/cli/app.hpp"
#include "slopekit/error.hpp"
#include "slopekit/io/json.hpp"
#include "slopekit/monodromy/artin_schreier.hpp"

namespace py = pybind11;
using namespace slopekit;
using arith::FiniteField;

namespace {

// Every entry point returns canonical JSON text; the Python layer decodes it.
std::string dump(const io::Json& j) { return io::dump(j); }

display::DeformationSpec named_deformation(const std::string& base, const std::string& lambda,
                                           std::uint32_t p, int precision) {
  const int m = precision > 0 ? precision : display::default_witt_length(base);
  auto W = arith::WittRing::make(FiniteField::make(p, 1), m);
  return display::deformation(display::display_from_name(W, base), parse_rational(lambda));
}

}  // namespace

PYBIND11_MODULE(_slopekit, m) {
  m.doc() = "Newton-polygon strata, deformations and monodromy certificates";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&] { return py::exception<Error>(m, "SlopekitError"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(error.get_stored(), (std::string("Parse: ") + e.what()).c_str());
    }
  });

  m.def("polygon", [](const std::string& text) { return dump(io::to_json(polygon::NewtonPolygon::parse(text))); },
        py::arg("text"));
  m.def("np_compare",
        [](const std::string& a, const std::string& b) {
          return std::string(polygon::to_string(
              polygon::compare(polygon::NewtonPolygon::parse(a), polygon::NewtonPolygon::parse(b))));
        },
        py::arg("a"), py::arg("b"));
  m.def("np_attain",
        [](const std::string& poly, const std::string& lambda) {
          const auto w = polygon::attainable(polygon::NewtonPolygon::parse(poly), parse_rational(lambda));
          return w ? dump(io::to_json(*w)) : std::string("null");
        },
        py::arg("poly"), py::arg("lambda_"));
  m.def("strata",
        [](int d, int c, const std::string& lambda, const std::string& base) {
          const auto np0 = base.empty() ? polygon::NewtonPolygon::make({{Rational(c, d + c), d + c}})
                                        : polygon::NewtonPolygon::parse(base);
          return dump(io::to_json(display::strata(d, c, np0, parse_rational(lambda))));
        },
        py::arg("d"), py::arg("c"), py::arg("lambda_"), py::arg("base") = "");
  m.def("deform",
        [](const std::string& base, const std::string& lambda, std::uint32_t p, int precision) {
          return dump(io::to_json(io::deform_report(named_deformation(base, lambda, p, precision))));
        },
        py::arg("base"), py::arg("lambda_"), py::arg("p") = 3, py::arg("precision") = 0);
  m.def("certify",
        [](const std::string& base, const std::string& lambda, std::uint32_t p, std::uint64_t seed) {
          const auto spec = named_deformation(base, lambda, p, 0);
          monodromy::check_largeness_preconditions(spec.base, spec.lambda);
          monodromy::LargenessOptions opt;
          opt.seed = seed;
          py::gil_scoped_release release;
          return dump(io::to_json(monodromy::largeness_certificate(spec, opt)));
        },
        py::arg("base"), py::arg("lambda_"), py::arg("p") = 3, py::arg("seed") = 0);
  m.def("as_reducible",
        [](std::uint32_t A, std::uint32_t p, int s, std::uint64_t q) {
          const auto K = FiniteField::make(p, s);
          auto j = io::to_json(monodromy::as_reducible(A, K, q));
          j["oracle"] = monodromy::as_reducible_oracle(A, K, q);
          return dump(j);
        },
        py::arg("A"), py::arg("p"), py::arg("s"), py::arg("q"));
  m.def("generation_check",
        [](std::uint32_t p, int s, int n, std::vector<int> covered, const std::string& lambda,
           std::uint64_t seed) {
          const auto l = lambda.empty() ? Rational(1, s) : parse_rational(lambda);
          py::gil_scoped_release release;
          return dump(io::to_json(unitgroup::generation_check(FiniteField::make(p, s), l, n, covered, seed)));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("covered"), py::arg("lambda_") = "",
        py::arg("seed") = 0);
  m.def("commutator_check",
        [](std::uint32_t p, int s, int r, std::uint32_t x, std::uint32_t y, int n) {
          const auto O = arith::RamifiedOrder::division_order(FiniteField::make(p, s), Rational(r, s), n + 2);
          return dump(io::to_json(unitgroup::commutator_class(*O, x, y, n)));
        },
        py::arg("p"), py::arg("s"), py::arg("r"), py::arg("x"), py::arg("y"), py::arg("n"));
  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "slopekit");
          std::vector<const char*> argv;
          for (const auto& a : args) argv.push_back(a.c_str());
          std::ostringstream out, err;
          int rc;
          {
            py::gil_scoped_release release;
            rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
          }
          return py::make_tuple(rc, py::bytes(out.str()), err.str());
        },
        py::arg("args"));
}
