#include "sublorentz/contact.hpp"

#include <algorithm>

namespace sublorentz {

Truth all_zero(const std::vector<Expr>& residuals) {
  Truth t = Truth::True;
  for (const auto& r : residuals) t = truth_and(t, r.is_zero());
  return t;
}

Check make_check(std::string name, std::vector<Expr> residuals) {
  Check c{std::move(name), Truth::True, std::move(residuals)};
  c.status = all_zero(c.residuals);
  return c;
}

Truth combined(const std::vector<Check>& checks) {
  Truth t = Truth::True;
  for (const auto& c : checks) t = truth_and(t, c.status);
  return t;
}

namespace {

Expr sign_normalized(const Expr& e) {
  if (!e.is_literal_zero() && e.numerator_poly().leading_coeff() < 0) return -e;
  return e;
}

// Normalized polynomial factor: positive leading coefficient scaled to 1.
Expr monic_locus(const Expr& e) {
  if (e.is_literal_zero()) return e;
  return Expr::fraction(e.numerator_poly().monic(), Poly(1));
}

void add_locus(std::vector<Expr>& loci, const Expr& denominator) {
  if (denominator.as_rational()) return;
  const Expr l = monic_locus(denominator);
  if (std::find(loci.begin(), loci.end(), l) == loci.end()) loci.push_back(l);
}

void add_denominators(std::vector<Expr>& loci, const Expr& e) { add_locus(loci, e.denominator()); }

}  // namespace

Expr contact_locus(const Frame& frame, const Chart& chart) {
  const VectorField b = lie_bracket(frame.X1, frame.X2, chart);
  Matrix3 m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = frame.X1[i];
    m[i][1] = frame.X2[i];
    m[i][2] = b[i];
  }
  return sign_normalized(determinant(m));
}

DifferentialForm normalized_contact_form(const Frame& frame, const Chart& chart) {
  const VectorField& a = frame.X1;
  const VectorField& b = frame.X2;
  // The cross product, read as a covector, annihilates X1 and X2.
  const std::array<Expr, 3> cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  const DifferentialForm alpha = DifferentialForm::one_form(cross);
  const Expr scale = pairing(alpha, lie_bracket(frame.X2, frame.X1, chart));
  switch (scale.is_zero()) {
    case Truth::True:
      throw Error(ErrorKind::DegenerateFrame, "X1, X2 and [X1,X2] are linearly dependent");
    case Truth::Unknown:
      throw Error(ErrorKind::IndeterminateDomain, "cannot decide whether X1, X2, [X1,X2] are independent: " + scale.str());
    case Truth::False:
      break;
  }
  return (Expr(1) / scale) * alpha;
}

VectorField reeb_field(const DifferentialForm& omega, const Frame& frame, const Chart& chart) {
  const DifferentialForm domega = exterior_derivative(omega, chart);
  // Row i of the system is the covector v -> d omega(v, X_i).
  Matrix3 m;
  for (int j = 0; j < 3; ++j) m[0][j] = omega.component(j);
  for (int row = 1; row < 3; ++row) {
    const VectorField& X = row == 1 ? frame.X1 : frame.X2;
    for (int j = 0; j < 3; ++j) {
      Expr s;
      for (int k = 0; k < 3; ++k)
        if (j != k) s += domega.component(j, k) * X[k];
      m[row][j] = s;
    }
  }
  const Matrix3 inv = inverse(m);
  VectorField X0;
  for (int i = 0; i < 3; ++i) X0[i] = inv[i][0];
  return X0;
}

std::array<DifferentialForm, 3> dual_coframe(const VectorField& X0, const VectorField& X1, const VectorField& X2) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = X0[i];
    m[i][1] = X1[i];
    m[i][2] = X2[i];
  }
  const Matrix3 inv = inverse(m);
  std::array<DifferentialForm, 3> nu{DifferentialForm(1), DifferentialForm(1), DifferentialForm(1)};
  for (int i = 0; i < 3; ++i)
    nu[static_cast<std::size_t>(i)] = DifferentialForm::one_form(inv[static_cast<std::size_t>(i)]);
  return nu;
}

ContactApparatus build_apparatus(const Frame& frame, const Chart& chart) {
  ContactApparatus app;
  const Expr locus = contact_locus(frame, chart);
  app.omega = normalized_contact_form(frame, chart);
  app.X0 = reeb_field(app.omega, frame, chart);
  app.coframe = dual_coframe(app.X0, frame.X1, frame.X2);
  for (int i = 0; i < 3; ++i) add_denominators(app.excluded, app.omega.component(i));
  for (int i = 0; i < 3; ++i) add_denominators(app.excluded, app.X0[i]);
  for (const auto& nu : app.coframe)
    for (int i = 0; i < 3; ++i) add_denominators(app.excluded, nu.component(i));
  add_locus(app.excluded, locus.numerator());
  std::sort(app.excluded.begin(), app.excluded.end(), [](const Expr& a, const Expr& b) { return a.str() < b.str(); });
  return app;
}

std::vector<Check> apparatus_checks(const ContactApparatus& app, const Frame& frame, const Chart& chart) {
  const DifferentialForm domega = exterior_derivative(app.omega, chart);
  const std::array<const VectorField*, 3> X{&app.X0, &frame.X1, &frame.X2};
  std::vector<Expr> duality;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      duality.push_back(pairing(app.coframe[static_cast<std::size_t>(i)], *X[static_cast<std::size_t>(j)]) -
                        Expr(i == j ? 1 : 0));
  return {
      make_check("omega(X1) = 0", {pairing(app.omega, frame.X1)}),
      make_check("omega(X2) = 0", {pairing(app.omega, frame.X2)}),
      make_check("d omega(X1,X2) = 1", {wedge_eval(domega, {frame.X1, frame.X2}) - Expr(1)}),
      make_check("omega(X0) = 1", {pairing(app.omega, app.X0) - Expr(1)}),
      make_check("d omega(X0,X1) = 0", {wedge_eval(domega, {app.X0, frame.X1})}),
      make_check("d omega(X0,X2) = 0", {wedge_eval(domega, {app.X0, frame.X2})}),
      make_check("<nu_i, X_j> = delta_ij", duality),
  };
}

DifferentialForm coframe_structure_residual(const ContactApparatus& app, const Chart& chart) {
  return exterior_derivative(app.coframe[0], chart) - wedge(app.coframe[1], app.coframe[2]);
}

std::array<Expr, 3> frame_components(const ContactApparatus& app, const VectorField& v) {
  return {pairing(app.coframe[0], v), pairing(app.coframe[1], v), pairing(app.coframe[2], v)};
}

}  // namespace sublorentz
