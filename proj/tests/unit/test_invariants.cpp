#include "doctest.h"
#include "sublorentz/fixtures.hpp"
#include "sublorentz/invariants.hpp"
#include "test_support.hpp"

using namespace sublorentz;
using sublorentz::testing::oracle_expr;
using sublorentz::testing::oracle_values;

namespace {

struct Pipeline {
  Chart chart;
  Frame frame;
  ContactApparatus app;
  StructureFunctions sf;
  Invariants inv;
};

Pipeline run(const std::string& name) {
  const StructureDefinition d = builtin_structure(name);
  Pipeline p{d.chart, d.frame(), {}, {}, {}};
  p.app = build_apparatus(p.frame, p.chart);
  p.sf = structure_functions(p.frame, p.app, p.chart);
  p.inv = compute_invariants(p.sf, p.frame, p.chart);
  return p;
}

Expr k() { return Expr::symbol("k"); }

}  // namespace

TEST_CASE("martinet invariants") {
  const Pipeline p = run("martinet");
  const auto& o = oracle_values()["martinet"];
  const auto v = p.sf.values();
  for (std::size_t i = 0; i < 6; ++i) CHECK(v[i] == oracle_expr(o["sf"][i], p.chart));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(p.inv.h_tilde[i][j] == oracle_expr(o["h_tilde"][i][j], p.chart));
  CHECK(p.inv.chi == oracle_expr(o["chi"], p.chart));
  CHECK(p.inv.kappa == oracle_expr(o["kappa"], p.chart));
  CHECK(render_expr(p.inv.chi) == "1/(4*y^4)");
  CHECK(render_expr(p.inv.kappa) == "-5/(2*y^2)");
  const Classification c = classify(p.inv, p.sf, Mode::Coordinate);
  CHECK(c.label == Label::Generic);
}

TEST_CASE("heisenberg frame") {
  const Pipeline p = run("heisenberg");
  for (const auto& v : p.sf.values()) CHECK(v == Expr());
  CHECK(matrix_is_zero(p.inv.h_tilde) == Truth::True);
  CHECK(p.inv.kappa == Expr());
  const EtaReport e = eta_check(p.sf, p.inv.kappa, p.app, p.frame, p.chart);
  CHECK(e.holds);
  CHECK(e.oro7.status == Truth::True);
  CHECK(e.stwrdz.status == Truth::True);
  // coordinate mode never emits group-level labels
  CHECK(classify(p.inv, p.sf, Mode::Coordinate).label == Label::Generic);
}

TEST_CASE("abstract classification") {
  const StructureFunctions heis{};
  CHECK(classify(compute_invariants(heis), heis, Mode::Abstract).label == Label::Heisenberg);

  const StructureFunctions sl2{Expr(), -k(), -k(), Expr(), Expr(), Expr()};
  const Invariants si = compute_invariants(sl2);
  CHECK(matrix_is_zero(si.h_tilde) == Truth::True);
  CHECK(si.kappa == k());
  CHECK(classify(si, sl2, Mode::Abstract).label == Label::SL2Cover);
  CHECK(eta_check(sl2).holds);

  const StructureFunctions null{k(), Expr(), Expr(), -k(), Expr(), Expr()};
  const Invariants ni = compute_invariants(null);
  CHECK(ni.h_tilde[0][0] == k());
  CHECK(ni.h_tilde[1][1] == -k());
  CHECK(ni.chi == -k() * k());
  CHECK(classify(ni, null, Mode::Abstract).label == Label::Generic);

  // chi = 0 with h~ != 0
  const StructureFunctions nk{Expr(1), Expr(), Expr(2), Expr(-1), Expr(), Expr()};
  const Invariants nki = compute_invariants(nk);
  CHECK(nki.chi == Expr());
  CHECK(classify(nki, nk, Mode::Abstract).label == Label::NullKernelCase);
  const NullKernel kern = null_kernel_bundle(nk);
  CHECK(kern.direction != NullDirection::None);
}

TEST_CASE("trace violation") {
  const StructureFunctions bad{Expr(1), Expr(), Expr(), Expr(1), Expr(), Expr()};
  CHECK_THROWS_AS(validate_structure_functions(bad), Error);
}

TEST_CASE("eta requires vanishing h~") {
  const Pipeline p = run("martinet");
  try {
    eta_check(p.sf, p.inv.kappa, p.app, p.frame, p.chart);
    FAIL("expected HTildeNonzero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HTildeNonzero);
  }
}

TEST_CASE("rotations") {
  const Pipeline p = run("martinet");
  const Expr theta = parse_expr("x*y + z", p.chart);
  CHECK(rotation_formula_check(p.frame, theta, p.chart).status == Truth::True);
  CHECK(h_tilde_covariance_check(p.frame, theta, p.chart).status == Truth::True);
  CHECK(kappa_rotation_check(p.frame, theta, p.chart).status == Truth::True);
  const Frame r = hyperbolic_rotate(p.frame, Expr());
  CHECK(r == p.frame);

  const StructureFunctions sl2{Expr(), -k(), -k(), Expr(), Expr(), Expr()};
  CHECK(sublorentz::testing::all_pass(constant_rotation_checks(sl2, Expr(2))));
  CHECK(rotate_constant(sl2, Expr(3)) == sl2);
}

TEST_CASE("normalizing theta") {
  const Pipeline h = run("heisenberg");
  CHECK(verify_normalizing_theta(h.frame, Expr(), h.chart).normal_form.status == Truth::True);
  try {
    verify_normalizing_theta(h.frame, parse_expr("x", h.chart), h.chart);
    FAIL("expected ThetaInvalid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ThetaInvalid);
    CHECK(std::string(e.what()).find("residuals [1, 0, 0]") != std::string::npos);
  }
  const StructureFunctions sl2{Expr(), -k(), -k(), Expr(), Expr(), Expr()};
  CHECK(verify_normalizing_theta(sl2, Expr()).normal_form.status == Truth::True);
}

TEST_CASE("dilation") {
  Pipeline p = run("martinet");
  const Chart chart = p.chart.with_parameters({"s"});
  const DilationReport r = dilation_checks(p.frame, Expr::symbol("s"), chart);
  CHECK(sublorentz::testing::all_pass(r.derived));
  // chi' = s^4 chi here, so the quadratic law is false whenever chi != 0
  const Expr s = Expr::symbol("s");
  CHECK(r.dilated.chi == s.pow(4) * r.original.chi);
  CHECK(r.dilated.kappa == s.pow(2) * r.original.kappa);
  bool stated_chi_fails = false;
  for (const auto& c : r.stated)
    if (c.name.find("chi") != std::string::npos) stated_chi_fails = c.status == Truth::False;
  CHECK(stated_chi_fails);
}
