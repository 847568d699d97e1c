#include "sublorentz/ode_bridge.hpp"

#include "sublorentz/parser.hpp"

namespace sublorentz {

Chart ode_chart() { return Chart({"x", "u", "p"}, {}); }

OdeStructure build_from_ode(const Expr& Q) {
  OdeStructure s;
  s.chart = ode_chart();
  for (const auto& name : Q.free_symbols())
    if (!s.chart.declares(name)) throw Error(ErrorKind::UnknownSymbol, "Q may only use x, u, p; found " + name);
  s.Q = Q;
  const Expr p = s.chart.symbol("p");
  s.forms[0] = DifferentialForm::one_form({-p, Expr(1), Expr()});
  s.forms[1] = DifferentialForm::one_form({-Q, Expr(), Expr(1)});
  s.forms[2] = DifferentialForm::basis(0);
  s.N1 = VectorField{{Expr(1), p, Q}};
  s.N2 = VectorField::coordinate(2);
  const Expr half = Expr::rational(1, 2);
  s.frame = {half * (s.N1 + s.N2), half * (s.N1 - s.N2)};
  return s;
}

OdeStructure build_from_ode(std::string_view Q) { return build_from_ode(parse_expr(Q, ode_chart())); }

std::vector<Check> verify_null_bundles(const OdeStructure& s) {
  const VectorField plus = s.frame.X1 + s.frame.X2;
  const VectorField minus = s.frame.X1 - s.frame.X2;
  auto w = [&](int i, const VectorField& v) { return pairing(s.forms[static_cast<std::size_t>(i)], v); };
  auto difference = [](const VectorField& a, const VectorField& b) {
    const VectorField d = a - b;
    return std::vector<Expr>{d[0], d[1], d[2]};
  };
  // g(a X1 + b X2, a X1 + b X2) = -a^2 + b^2
  auto norm = [](const Expr& a, const Expr& b) { return -(a * a) + b * b; };
  return {
      make_check("H = ker w1 contains X1, X2", {w(0, s.frame.X1), w(0, s.frame.X2)}),
      make_check("X1 + X2 = N1", difference(plus, s.N1)),
      make_check("X1 - X2 = N2", difference(minus, s.N2)),
      make_check("N1 spans ker w1 ^ ker w2", {w(0, s.N1), w(1, s.N1)}),
      make_check("N2 spans ker w1 ^ ker w3", {w(0, s.N2), w(2, s.N2)}),
      make_check("X1 + X2 and X1 - X2 are null", {norm(Expr(1), Expr(1)), norm(Expr(1), Expr(-1))}),
  };
}

}  // namespace sublorentz
