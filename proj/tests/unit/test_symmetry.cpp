#include "doctest.h"
#include "sublorentz/fixtures.hpp"
#include "sublorentz/symmetry.hpp"
#include "test_support.hpp"

using namespace sublorentz;
using sublorentz::testing::oracle_expr;
using sublorentz::testing::oracle_values;

namespace {

Chart chart;
const Frame heisenberg{parse_vector_field("d/dx - (1/2)*y*d/dz", chart), parse_vector_field("d/dy + (1/2)*x*d/dz", chart)};
const Frame martinet{parse_vector_field("d/dx + (1/2)*y^2*d/dz", chart),
                     parse_vector_field("d/dy - (1/2)*x*y*d/dz", chart)};

void check_matrix(const Matrix2& m, const nlohmann::json& expected) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(m[i][j] == oracle_expr(expected[i][j], chart));
}

}  // namespace

TEST_CASE("heisenberg boost is an isometry") {
  const VectorField Z = parse_vector_field("y*d/dx + x*d/dy", chart);
  CHECK(preserves_distribution(Z, heisenberg, chart) == Truth::True);
  const ConformalReport r = conformal_factor(Z, heisenberg, chart);
  CHECK(r.verdict == Verdict::Isometry);
  check_matrix(r.lie_derivative, oracle_values()["heisenberg"]["boost_lie_derivative"]);
  for (int n : {2, 3}) {
    const BinomialReport b = binomial_identity_check(Z, heisenberg, chart, n);
    CHECK(b.vanishing.status == Truth::True);
    CHECK(b.corrected.status == Truth::True);
  }
}

TEST_CASE("heisenberg dilation is conformal") {
  const VectorField Z = parse_vector_field("x*d/dx + y*d/dy + 2*z*d/dz", chart);
  const ConformalReport r = conformal_factor(Z, heisenberg, chart);
  CHECK(r.verdict == Verdict::Conformal);
  CHECK(r.mu == Expr(2));
  check_matrix(r.lie_derivative, oracle_values()["heisenberg"]["dilation_lie_derivative"]);
  // the sums equal (Z - mu)^n g, which is (-2)^n g here
  const BinomialReport b2 = binomial_identity_check(Z, heisenberg, chart, 2);
  CHECK(b2.sums == std::vector<Expr>{Expr(-4), Expr(), Expr(4)});
  CHECK(b2.vanishing.status == Truth::False);
  CHECK(b2.corrected.status == Truth::True);
  const BinomialReport b3 = binomial_identity_check(Z, heisenberg, chart, 3);
  CHECK(b3.sums == std::vector<Expr>{Expr(8), Expr(), Expr(-8)});
  CHECK(b3.corrected.status == Truth::True);
}

TEST_CASE("non-horizontal fields") {
  const VectorField Z = parse_vector_field("z*d/dx", chart);
  CHECK(preserves_distribution(Z, heisenberg, chart) == Truth::False);
  try {
    restricted_lie_derivative(Z, heisenberg, chart);
    FAIL("expected DistributionNotPreserved");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DistributionNotPreserved);
  }
}

TEST_CASE("neither verdict rejects the binomial check") {
  const ContactApparatus app = build_apparatus(martinet, chart);
  const ConformalReport r = conformal_factor(app.X0, martinet, chart);
  CHECK(r.verdict == Verdict::Neither);
  const Expr y = Expr::symbol("y");
  CHECK(r.lie_derivative[0][1] == -Expr(1) / (y * y));
  CHECK_THROWS_AS(binomial_identity_check(app.X0, martinet, chart, 2), Error);
}

TEST_CASE("reeb field is an isometry exactly when h~ vanishes") {
  for (const auto& name : builtin_structure_names()) {
    const StructureDefinition d = builtin_structure(name);
    Truth h_zero;
    Verdict v;
    Matrix2 L, h_bar;
    if (d.is_coordinate()) {
      const ContactApparatus app = build_apparatus(d.frame(), d.chart);
      const StructureFunctions sf = structure_functions(d.frame(), app, d.chart);
      const Invariants inv = compute_invariants(sf, d.frame(), d.chart);
      const ConformalReport r = conformal_factor(AdjointData::coordinate(app.X0, d.frame(), app, d.chart));
      h_zero = matrix_is_zero(inv.h_tilde);
      v = r.verdict;
      L = r.lie_derivative;
      h_bar = inv.h_bar;
    } else {
      const Invariants inv = compute_invariants(d.constants());
      const ConformalReport r = conformal_factor(AdjointData::constant({Expr(1), Expr(), Expr()}, d.constants()));
      h_zero = matrix_is_zero(inv.h_tilde);
      v = r.verdict;
      L = r.lie_derivative;
      h_bar = inv.h_bar;
    }
    CAPTURE(name);
    CHECK((v == Verdict::Isometry) == (h_zero == Truth::True));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(L[i][j] == Expr(2) * h_bar[i][j]);
  }
}

TEST_CASE("poisson bracket convention") {
  const VectorField X = parse_vector_field("x*y*d/dz + d/dx", chart);
  const VectorField Y = parse_vector_field("z^2*d/dy", chart);
  const FiberPolynomial lhs = poisson_bracket(FiberPolynomial::linear(X), FiberPolynomial::linear(Y), chart);
  CHECK(lhs == FiberPolynomial::linear(lie_bracket(X, Y, chart)));
  CHECK(poisson_bracket(FiberPolynomial::variable(0), FiberPolynomial::constant(Expr::symbol("x")), chart) ==
        FiberPolynomial::constant(Expr(1)));
}

TEST_CASE("quadratic bracket with the reeb hamiltonian") {
  const Ala1Report m = lemma_ala1_check(martinet, chart);
  CHECK(m.check.status == Truth::True);
  CHECK(m.bracket.str({"h0", "h1", "h2"}) == "1/y^2*h1*h2");
  const Ala1Report h = lemma_ala1_check(heisenberg, chart);
  CHECK(h.check.status == Truth::True);
  CHECK(h.bracket.is_zero() == Truth::True);
}

TEST_CASE("higher restricted derivatives of an isometry vanish") {
  const VectorField Z = parse_vector_field("y*d/dx + x*d/dy", chart);
  const Matrix2 L3 = restricted_lie_derivative(Z, heisenberg, chart, 3);
  for (const auto& row : L3)
    for (const auto& e : row) CHECK(e == Expr());
}
