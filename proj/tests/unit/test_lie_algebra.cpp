#include "doctest.h"
#include "sublorentz/lie_algebra.hpp"
#include "test_support.hpp"

using namespace sublorentz;
using sublorentz::testing::oracle_values;

namespace {

Expr k() { return Expr::symbol("k"); }

ExprMatrix parse_matrix(const nlohmann::json& j, const Chart& chart) {
  ExprMatrix m;
  for (const auto& row : j) {
    std::vector<Expr> r;
    for (const auto& e : row) r.push_back(parse_expr(e.get<std::string>(), chart));
    m.push_back(r);
  }
  return m;
}

}  // namespace

TEST_CASE("jacobi on the catalog") {
  for (const auto& name : catalog_algebra_names()) {
    CAPTURE(name);
    CHECK(jacobi_check(catalog_algebra(name)).status == Truth::True);
  }
  CHECK_THROWS_AS(catalog_algebra("so3"), Error);
}

TEST_CASE("jacobi detects a broken bracket") {
  LieAlgebra L({"a", "b", "c"});
  L.set_bracket(0, 1, {Expr(), Expr(), Expr(1)});
  L.set_bracket(1, 2, {Expr(1), Expr(), Expr()});
  L.set_bracket(0, 2, {Expr(), Expr(), Expr(1)});
  CHECK(jacobi_check(L).status == Truth::False);
}

TEST_CASE("sl2 killing values") {
  const Chart chart({"x", "y", "z"}, {"k"});
  const KillingData e = killing_form(catalog_algebra("sl2_e"));
  CHECK(e.K == parse_matrix(oracle_values()["sl2_e_killing"], chart));
  CHECK(e.K[0][0] == Expr(2) * k() * k());
  CHECK(e.K[1][1] == Expr(2) * k());
  CHECK(e.K[2][2] == Expr(-2) * k());
  CHECK_FALSE(e.signature.has_value());

  const KillingData e3 = killing_form(catalog_algebra("sl2_e", Expr(3)));
  REQUIRE(e3.signature.has_value());
  CHECK(*e3.signature == Inertia{2, 1, 0});

  const KillingData f = killing_form(catalog_algebra("sl2_f"));
  CHECK(f.K == ExprMatrix{{Expr(2), Expr(), Expr()}, {Expr(), Expr(-2), Expr()}, {Expr(), Expr(), Expr(2)}});
  CHECK(*f.signature == Inertia{2, 1, 0});
  CHECK(killing_ad_invariance(catalog_algebra("sl2_f"), f.K).status == Truth::True);
}

TEST_CASE("heisenberg is nilpotent") {
  const KillingData h = killing_form(catalog_algebra("heisenberg"));
  for (const auto& row : h.K)
    for (const auto& e : row) CHECK(e == Expr());
  CHECK(*h.signature == Inertia{0, 0, 3});
}

TEST_CASE("marked invariants") {
  const Invariants e = constant_mode_invariants(catalog_algebra("sl2_e"), 1, 2, 0);
  CHECK(matrix_is_zero(e.h_tilde) == Truth::True);
  CHECK(e.kappa == k());
  const Invariants n = constant_mode_invariants(catalog_algebra("sl2_n"), 1, 2, 0);
  CHECK(n.h_tilde[0][0] == k());
  CHECK(n.h_tilde[1][1] == -k());
  CHECK(n.chi == -k() * k());
  CHECK_THROWS_AS(constant_mode_invariants(catalog_algebra("sl2_e"), 0, 1, 2), Error);
  CHECK_THROWS_AS(constant_mode_invariants(catalog_algebra("conformal8"), 0, 1, 2), Error);
}

TEST_CASE("swap automorphism of sl2") {
  const AutomorphismReport r = automorphism_check(catalog_algebra("sl2_f"), sl2_f_swap());
  CHECK(r.homomorphism.status == Truth::True);
  CHECK(r.killing_preserved.status == Truth::True);
}

TEST_CASE("dualizing structure equations") {
  const LieAlgebra L = dualize_structure_equations({"A", "B", "C"}, {"dA = 0", "dB = 0", "dC = -A^B"});
  CHECK(L.table() == std::vector<std::string>{"[A, B] = C"});
  CHECK_THROWS_AS(dualize_structure_equations({"A", "B", "C"}, {"dA = x*B^C", "dB = 0", "dC = 0"}), Error);
  const LieAlgebra P = dualize_structure_equations({"A", "B", "C"}, {"dA = q*B^C", "dB = 0", "dC = 0"}, {"q"});
  CHECK(P.c(1, 2, 0) == -Expr::symbol("q"));
}

TEST_CASE("conformal algebra") {
  const LieAlgebra L = catalog_algebra("conformal8");
  const KillingData kd = killing_form(L);
  const auto& o = oracle_values()["conformal8"];
  CHECK(kd.K == parse_matrix(o["killing"], Chart()));
  CHECK(kd.determinant == parse_expr(o["det"].get<std::string>(), Chart()));
  REQUIRE(kd.signature.has_value());
  CHECK(*kd.signature == Inertia{o["inertia"][0], o["inertia"][1], o["inertia"][2]});
  CHECK(is_sl3(L).holds);
  // the printed matrix differs in one entry and has a different determinant
  const ExprMatrix printed = printed_conformal_killing_matrix();
  CHECK(matrix_determinant(printed) == Expr(-3048192L));
  CHECK(*inertia(printed) == Inertia{5, 3, 0});
  CHECK(printed != kd.K);
}

TEST_CASE("isometry algebra") {
  const LieAlgebra dual = dualize_structure_equations(isometry_labels(), isometry_structure_equations(), {"k"});
  const auto& expected = oracle_values()["isometry4_k0"];
  int brackets = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int m = 0; m < 4; ++m)
        if (!dual.c(i, j, m).subs({{"k", Expr()}}).is_literal_zero()) ++brackets;
  CHECK(brackets == 3);
  for (const auto& entry : expected) {
    const int i = entry[0], j = entry[1];
    for (const auto& term : entry[2])
      CHECK(dual.c(i, j, term[1].get<int>()).subs({{"k", Expr()}}) == parse_expr(term[0].get<std::string>(), Chart()));
  }
  CHECK(jacobi_check(dual).status == Truth::True);
}

TEST_CASE("inertia by congruence") {
  CHECK(*inertia({{Expr(), Expr(1)}, {Expr(1), Expr()}}) == Inertia{1, 1, 0});
  CHECK(*inertia({{Expr(1), Expr(2)}, {Expr(2), Expr(4)}}) == Inertia{1, 0, 1});
  CHECK_FALSE(inertia({{Expr::symbol("x")}}).has_value());
}
