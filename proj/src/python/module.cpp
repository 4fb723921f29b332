// Python bindings: a functional facade over the core pipelines. Curves and
// fields travel as strings (the same grammar the command-line tool uses),
// results come back as plain Python dicts/lists decoded from the canonical
// JSON, so no C++ object lifetimes leak into Python.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "addlaw/addlaws.hpp"
#include "addlaw/complete.hpp"
#include "addlaw/construct.hpp"
#include "addlaw/genus2.hpp"
#include "addlaw/hyperplane.hpp"
#include "addlaw/lawspace.hpp"
#include "addlaw/models.hpp"

namespace py = pybind11;
using namespace addlaw;

namespace {

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict field_info(const std::string& field) {
  FieldRef f = Field::parse(field);
  py::dict d;
  d["order"] = f->order();
  d["characteristic"] = f->characteristic();
  d["string"] = f->to_string();
  d["short_string"] = f->short_string();
  return d;
}

py::object law_space(const std::string& curve, unsigned dx, unsigned dy,
                     uint64_t seed) {
  Rng rng(seed);
  return to_py(discover_laws(parse_curve(curve), dx, dy, rng).to_json());
}

py::dict certify(const std::string& curve, const std::string& law_name,
                 uint64_t seed) {
  CurvePtr c = parse_curve(curve);
  AdditionLaw law = stored_law(law_name, c);
  ExceptionalReport rep = certify_k_complete(law);
  Rng rng(seed);
  LawValidation val = validate_law(law, ValidateMode::automatic, &rng);
  py::dict d;
  d["complete"] = rep.complete();
  d["oracle_exact"] = val.ok();
  d["report"] = to_py(rep.to_json());
  d["validation"] = to_py(val.to_json());
  return d;
}

py::dict validate(const std::string& curve, const std::string& law_name,
                  bool exhaustive, uint64_t seed) {
  CurvePtr c = parse_curve(curve);
  AdditionLaw law = stored_law(law_name, c);
  Rng rng(seed);
  LawValidation val = validate_law(
      law, exhaustive ? ValidateMode::exhaustive : ValidateMode::automatic,
      &rng);
  py::dict d = py::cast<py::dict>(to_py(val.to_json()));
  d["ok"] = val.ok();
  return d;
}

py::dict construct_complete(const std::string& curve, uint64_t seed) {
  CurvePtr c = parse_curve(curve);
  Rng rng(seed);
  py::dict d;
  try {
    CompleteConstruction con = build_k_complete_law(c, rng);
    d["constructed"] = true;
    d["construction"] = to_py(con.to_json());
  } catch (const error& e) {
    if (std::string(e.what()) != kNoKernelOrbitMessage) throw;
    d["constructed"] = false;
    d["reason"] = e.what();
  }
  return d;
}

py::dict witness(const std::string& curve, const std::string& law_name,
                 unsigned max_degree) {
  CurvePtr c = parse_curve(curve);
  AdditionLaw law = stored_law(law_name, c);
  auto w = incompleteness_witness(law, max_degree);
  py::dict d;
  d["found"] = w.has_value();
  if (w) d["witness"] = to_py(w->to_json());
  return d;
}

py::list scan_ec(const std::string& field, unsigned jobs) {
  py::list out;
  for (const SmallQCurve& h : scan_small_q(Field::parse(field), jobs))
    out.append(to_py(h.to_json()));
  return out;
}

py::list scan_g2(const std::string& field, unsigned jobs) {
  py::list out;
  for (const HyperPtr& h :
       scan_genus2_counterexamples(Field::parse(field), jobs))
    out.append(h->to_string());
  return out;
}

py::object hyperplane_family(const std::string& field, unsigned d,
                             unsigned r0) {
  return to_py(build_family(Field::parse(field), d, r0).to_json());
}

py::dict g2_counts(const std::string& curve, unsigned max_extension) {
  HyperPtr c = parse_hyperelliptic(curve);
  py::list counts, orders;
  for (unsigned e = 1; e <= max_extension; ++e) {
    counts.append(c->count_points(e));
    orders.append(jacobian_order(*c, e));
  }
  py::dict d;
  d["curve"] = c->to_string();
  d["point_counts"] = counts;
  d["jacobian_orders"] = orders;
  return d;
}

py::dict theta_pipeline(const std::string& curve) {
  HyperPtr c = parse_hyperelliptic(curve);
  py::dict d;
  try {
    ThetaIntersectionReport rep = build_theta_classes(c);
    d["constructed"] = true;
    d["ok"] = rep.ok();
    d["report"] = to_py(rep.to_json());
  } catch (const error& e) {
    if (std::string(e.what()) != kNoOrbit4Message) throw;
    d["constructed"] = false;
    d["reason"] = e.what();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Discovery, construction and certification of complete addition laws "
      "on curve models over small finite fields";
  m.attr("__version__") = kToolVersion;

  py::register_exception<error>(m, "AddlawError");

  m.def("field_info", &field_info, py::arg("field"),
        "Order, characteristic and canonical strings of a field description");
  m.def("law_space", &law_space, py::arg("curve"), py::arg("dx") = 2,
        py::arg("dy") = 2, py::arg("seed") = 0,
        "Interpolate the space of addition-law tuples on a curve string");
  m.def("certify", &certify, py::arg("curve"), py::arg("law"),
        py::arg("seed") = 0,
        "Exceptional-pair report plus oracle validation for a stored law");
  m.def("validate", &validate, py::arg("curve"), py::arg("law"),
        py::arg("exhaustive") = true, py::arg("seed") = 0,
        "Compare a stored law against the group-law oracle");
  m.def("construct_complete", &construct_complete, py::arg("curve"),
        py::arg("seed") = 0,
        "Build a defined-everywhere law from a norm-kernel orbit");
  m.def("witness", &witness, py::arg("curve"), py::arg("law"),
        py::arg("max_degree") = 6,
        "Search field extensions for a pair where the law vanishes");
  m.def("scan_ec", &scan_ec, py::arg("field"), py::arg("jobs") = 1,
        "Curves over a tiny field whose norm kernel is entirely rational");
  m.def("scan_g2", &scan_g2, py::arg("field"), py::arg("jobs") = 1,
        "Genus-2 curves over a tiny field without an orbit-4 point");
  m.def("hyperplane_family", &hyperplane_family, py::arg("field"),
        py::arg("degree"), py::arg("sections"),
        "Galois-conjugate hyperplane family with a rational product form");
  m.def("embedding_dimension", &embedding_dimension, py::arg("g"),
        py::arg("degree"), py::arg("sections"),
        "Ambient projective dimension of the product embedding");
  m.def("g2_counts", &g2_counts, py::arg("curve"),
        py::arg("max_extension") = 4,
        "Point counts and Jacobian orders over extension fields");
  m.def("theta_pipeline", &theta_pipeline, py::arg("curve"),
        "Build and check the four theta translate classes");
  m.def("stored_law_names", &stored_law_names,
        "Names accepted wherever a stored law is expected");
}
