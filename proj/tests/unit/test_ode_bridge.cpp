#include "doctest.h"
#include "sublorentz/ode_bridge.hpp"
#include "sublorentz/parser.hpp"
#include "test_support.hpp"

using namespace sublorentz;
using sublorentz::testing::oracle_expr;
using sublorentz::testing::oracle_values;

namespace {

void check_against_oracle(const std::string& key, const std::string& q) {
  const OdeStructure s = build_from_ode(std::string_view(q));
  CAPTURE(q);
  CHECK(sublorentz::testing::all_pass(verify_null_bundles(s)));
  const ContactApparatus app = build_apparatus(s.frame, s.chart);
  CHECK(sublorentz::testing::all_pass(apparatus_checks(app, s.frame, s.chart)));
  const StructureFunctions sf = structure_functions(s.frame, app, s.chart);
  const Invariants inv = compute_invariants(sf, s.frame, s.chart);
  const auto& o = oracle_values()["ode"][key];
  for (int i = 0; i < 3; ++i) {
    CHECK(app.omega.component(i) == oracle_expr(o["omega"][i], s.chart));
    CHECK(app.X0[i] == oracle_expr(o["X0"][i], s.chart));
  }
  const auto v = sf.values();
  for (std::size_t i = 0; i < 6; ++i) CHECK(v[i] == oracle_expr(o["sf"][i], s.chart));
  CHECK(inv.chi == oracle_expr(o["chi"], s.chart));
  CHECK(inv.kappa == oracle_expr(o["kappa"], s.chart));
}

}  // namespace

TEST_CASE("linear equation") { check_against_oracle("zero", "0"); }

TEST_CASE("Q = x p") { check_against_oracle("xp", "x*p"); }

TEST_CASE("total derivative example") { check_against_oracle("rigid", "(1 + 2*x)*exp(u) + (x + x^2)*exp(u)*p"); }

TEST_CASE("frame layout") {
  const OdeStructure s = build_from_ode(std::string_view("0"));
  CHECK(render_field(s.N1, s.chart) == "d/dx + p*d/du");
  CHECK(render_field(s.N2, s.chart) == "d/dp");
  CHECK(render_field(s.frame.X1, s.chart) == "1/2*d/dx + p/2*d/du + 1/2*d/dp");
  CHECK(render_field(s.frame.X2, s.chart) == "1/2*d/dx + p/2*d/du - 1/2*d/dp");
  CHECK(render_form(s.forms[0], s.chart) == "-p*dx + du");
}

TEST_CASE("unknown symbols in Q") { CHECK_THROWS_AS(build_from_ode(std::string_view("y*p")), Error); }

TEST_CASE("random polynomial right-hand sides") {
  sublorentz::testing::RandomSource gen(0x0de5eedULL);
  for (int i = 0; i < 25; ++i) {
    const Expr q = gen.polynomial({"x", "u", "p"}, 2, 3);
    const OdeStructure s = build_from_ode(q);
    CAPTURE(q.str());
    CHECK(sublorentz::testing::all_pass(verify_null_bundles(s)));
    CHECK(pairing(s.forms[0], s.frame.X1) == Expr());
    CHECK(pairing(s.forms[0], s.frame.X2) == Expr());
  }
}
