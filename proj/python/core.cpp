#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcgerm/errors.hpp"
#include "lcgerm/invariants.hpp"
#include "lcgerm/linfeas.hpp"
#include "lcgerm/parse.hpp"
#include "lcgerm/reports.hpp"
#include "lcgerm/scenarios.hpp"

namespace py = pybind11;
using namespace lcgerm;

namespace {

// Divisors cross the boundary as [(polynomial text, "p/q"), ...] and come
// back as "p/q" strings; the Python layer turns them into Fractions.
using DivisorSpec = std::vector<std::pair<std::string, std::string>>;

CurveGerm germ(const std::string& text) { return CurveGerm(parse_poly(text), text); }

WeightedGerm divisor(const DivisorSpec& spec) {
  std::vector<WeightedGerm::Component> comps;
  for (const auto& [poly, coeff] : spec) comps.push_back({germ(poly), parse_rational(coeff)});
  return WeightedGerm(std::move(comps));
}

TreeOptions options(int depth_cap) {
  TreeOptions o;
  if (depth_cap > 0) o.depth_cap = depth_cap;
  return o;
}

py::tuple as_tuple(const Report& r) { return py::make_tuple(r.ok, r.json); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lc and lct computations for plane curve germs";

  auto base = py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<HypothesisNotMet>(m, "HypothesisNotMet", PyExc_ValueError);
  py::register_exception<DepthCapExceeded>(m, "DepthCapExceeded", base.ptr());

  m.def("lct", [](const DivisorSpec& d, int depth_cap) { return lct_at_origin(divisor(d), options(depth_cap)).lct.to_string(); },
        py::arg("divisor"), py::arg("depth_cap") = 0);
  m.def("is_log_canonical",
        [](const DivisorSpec& d, int depth_cap) { return is_log_canonical_at_origin(divisor(d), options(depth_cap)).is_lc; },
        py::arg("divisor"), py::arg("depth_cap") = 0);
  m.def("family_threshold",
        [](const DivisorSpec& d, const std::string& curve, int depth_cap) {
          return to_pq(lct_threshold_in_family(divisor(d), germ(curve), options(depth_cap)).value);
        },
        py::arg("divisor"), py::arg("curve"), py::arg("depth_cap") = 0);
  m.def("intersection_multiplicity",
        [](const std::string& f, const std::string& g) { return intersection_multiplicity(germ(f), germ(g)); });
  m.def("intersection_multiplicity_noether",
        [](const std::string& f, const std::string& g) { return intersection_multiplicity_noether(germ(f), germ(g)); });
  m.def("intersection_multiplicity_resultant",
        [](const std::string& f, const std::string& g) { return intersection_multiplicity_resultant(germ(f), germ(g)); });
  m.def("pair_mult", [](const DivisorSpec& d, const std::string& delta) { return to_pq(pair_mult(divisor(d), germ(delta))); });

  m.def("is_feasible",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& constraints) {
          LinSystem sys(variables);
          for (const auto& c : constraints) sys.add(c);
          const auto r = is_feasible(sys);
          std::vector<std::string> evidence;
          for (const auto& q : r.feasible ? r.witness : r.certificate) evidence.push_back(to_pq(q));
          return py::make_tuple(r.feasible, evidence);
        });

  m.def("scenario_names", &scenario_names);
  m.def("config_report",
        [](const std::string& command, const std::string& config_json, const std::string& theorem) {
          const auto cfg = parse_config(config_json);
          if (command == "lct") return as_tuple(lct_report(cfg));
          if (command == "loglc") return as_tuple(loglc_report(cfg));
          if (command == "imult") return as_tuple(imult_report(cfg));
          if (command == "theorem") return as_tuple(theorem_report(cfg, parse_theorem_selector(theorem)));
          throw InvariantError("unknown command '" + command + "'");
        },
        py::arg("command"), py::arg("config_json"), py::arg("theorem") = "all");
  m.def("audit_report", [] { return as_tuple(audit_report(builtin_catalog())); });
  m.def("scenario_report", [](const std::string& name) { return as_tuple(scenario_report(name)); });
  m.def("fuzz_report",
        [](std::uint64_t seed, long count, int threads) {
          GenSpec spec;
          spec.seed = seed;
          spec.count = count;
          spec.threads = threads;
          Report r;
          {
            py::gil_scoped_release release;
            r = fuzz_report(spec);
          }
          return as_tuple(r);
        },
        py::arg("seed") = 42, py::arg("count") = 500, py::arg("threads") = 0);
  m.def("verify_report", [](const std::string& text) { return as_tuple(verify_report(text)); });
}
