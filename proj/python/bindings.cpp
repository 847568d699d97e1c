#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sublorentz/cli.hpp"
#include "sublorentz/invariants.hpp"
#include "sublorentz/lie_algebra.hpp"
#include "sublorentz/ode_bridge.hpp"
#include "sublorentz/parser.hpp"

namespace py = pybind11;
using namespace sublorentz;

namespace {

using StringMatrix = std::vector<std::vector<std::string>>;

StringMatrix to_strings(const Matrix2& m) {
  return {{m[0][0].str(), m[0][1].str()}, {m[1][0].str(), m[1][1].str()}};
}

StringMatrix to_strings(const ExprMatrix& m) {
  StringMatrix out;
  for (const auto& row : m) {
    auto& r = out.emplace_back();
    for (const Expr& e : row) r.push_back(e.str());
  }
  return out;
}

std::string status(Truth t) { return t == Truth::True ? "pass" : t == Truth::False ? "fail" : "indeterminate"; }

Chart make_chart(const std::vector<std::string>& params) { return Chart({"x", "y", "z"}, params); }

py::dict invariants_dict(const Invariants& inv) {
  py::dict d;
  d["h_tilde"] = to_strings(inv.h_tilde);
  d["h_bar"] = to_strings(inv.h_bar);
  d["chi"] = inv.chi.str();
  d["kappa"] = inv.kappa.str();
  return d;
}

py::dict frame_invariants(const std::string& x1, const std::string& x2, const std::vector<std::string>& params) {
  const Chart chart = make_chart(params);
  const Frame frame{parse_vector_field(x1, chart), parse_vector_field(x2, chart)};
  const ContactApparatus app = build_apparatus(frame, chart);
  const StructureFunctions sf = structure_functions(frame, app, chart);
  py::dict d = invariants_dict(compute_invariants(sf, frame, chart));
  d["omega"] = render_form(app.omega, chart);
  d["X0"] = render_field(app.X0, chart);
  return d;
}

py::dict algebra(const std::string& name, const std::optional<std::string>& kappa) {
  std::optional<Expr> k;
  if (kappa) k = parse_expr(*kappa, Chart({"x", "y", "z"}, {}));
  const LieAlgebra L = catalog_algebra(name, k);
  const KillingData kd = killing_form(L);
  py::dict d;
  d["dimension"] = L.dimension();
  d["jacobi"] = status(jacobi_check(L).status);
  d["killing"] = to_strings(kd.K);
  d["killing_det"] = kd.determinant.str();
  if (kd.signature)
    d["inertia"] = py::make_tuple(kd.signature->positive, kd.signature->negative, kd.signature->zero);
  else
    d["inertia"] = py::none();
  return d;
}

py::dict ode(const std::string& q) {
  const OdeStructure s = build_from_ode(std::string_view(q));
  const ContactApparatus app = build_apparatus(s.frame, s.chart);
  const StructureFunctions sf = structure_functions(s.frame, app, s.chart);
  py::dict d = invariants_dict(compute_invariants(sf, s.frame, s.chart));
  d["X1"] = render_field(s.frame.X1, s.chart);
  d["X2"] = render_field(s.frame.X2, s.chart);
  return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Contact sub-Lorentzian structures: invariants, symmetries and Lie algebras";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("simplify", [](const std::string& text, const std::vector<std::string>& params) {
    return parse_expr(text, make_chart(params)).str();
  }, py::arg("text"), py::arg("parameters") = std::vector<std::string>{});
  m.def("frame_invariants", &frame_invariants, py::arg("x1"), py::arg("x2"),
        py::arg("parameters") = std::vector<std::string>{},
        "Reeb field, contact form and invariants of the frame (X1, X2) in x, y, z.");
  m.def("algebra", &algebra, py::arg("name"), py::arg("kappa") = std::nullopt,
        "Jacobi status and Killing form of a catalog algebra.");
  m.def("algebra_names", &catalog_algebra_names);
  m.def("ode", &ode, py::arg("Q"), "Invariants of the structure attached to u'' = Q(x, u, u').");
  m.def("run", &run_cli, py::arg("args"), "Runs one CLI command; returns (exit_code, stdout, stderr).");
}
