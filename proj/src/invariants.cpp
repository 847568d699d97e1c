#include "sublorentz/invariants.hpp"

namespace sublorentz {

namespace {

const Expr kHalf = Expr::rational(1, 2);
const Expr kQuarter = Expr::rational(1, 4);

// Throws `kind` when e is certainly nonzero, Indeterminate when undecidable.
void require_zero(const Expr& e, ErrorKind kind, const std::string& what) {
  switch (e.is_zero()) {
    case Truth::True: return;
    case Truth::False: throw Error(kind, what + " (residual " + e.str() + ")");
    case Truth::Unknown: throw Error(ErrorKind::Indeterminate, "cannot decide whether " + what + ": " + e.str());
  }
}

void require_h_tilde_zero(const StructureFunctions& sf) {
  const Invariants inv = compute_invariants(sf);
  switch (matrix_is_zero(inv.h_tilde)) {
    case Truth::True: return;
    case Truth::False: throw Error(ErrorKind::HTildeNonzero, "h~ is not zero");
    case Truth::Unknown: throw Error(ErrorKind::Indeterminate, "cannot decide whether h~ vanishes");
  }
}

Check checked(std::string name, std::vector<Expr> residuals) {
  Check c = make_check(std::move(name), std::move(residuals));
  if (c.status == Truth::Unknown)
    throw Error(ErrorKind::Indeterminate, "undecidable zero test in '" + c.name + "'");
  return c;
}

struct Rotated {
  Frame frame;
  ContactApparatus app;
  StructureFunctions sf;
};

Rotated rotated_pipeline(const Frame& frame, const Expr& theta, const Chart& chart) {
  Rotated r;
  r.frame = hyperbolic_rotate(frame, theta);
  r.app = build_apparatus(r.frame, chart);
  r.sf = structure_functions(r.frame, r.app, chart);
  return r;
}

Matrix2 scaled(const Expr& s, const Matrix2& m) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = s * m[i][j];
  return r;
}

std::vector<Expr> matrix_difference(const Matrix2& a, const Matrix2& b) {
  std::vector<Expr> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.push_back(a[i][j] - b[i][j]);
  return out;
}

}  // namespace

StructureFunctions structure_functions(const Frame& frame, const ContactApparatus& app, const Chart& chart) {
  const auto b10 = frame_components(app, lie_bracket(frame.X1, app.X0, chart));
  const auto b20 = frame_components(app, lie_bracket(frame.X2, app.X0, chart));
  const auto b21 = frame_components(app, lie_bracket(frame.X2, frame.X1, chart));
  require_zero(b10[0], ErrorKind::NonHorizontalBracket, "[X1,X0] must be horizontal");
  require_zero(b20[0], ErrorKind::NonHorizontalBracket, "[X2,X0] must be horizontal");
  require_zero(b21[0] - Expr(1), ErrorKind::BracketPatternViolation, "[X2,X1] must have X0-coefficient 1");
  StructureFunctions sf{b10[1], b10[2], b20[1], b20[2], b21[1], b21[2]};
  validate_structure_functions(sf);
  return sf;
}

BracketTable bracket_table(const StructureFunctions& sf) {
  BracketTable t;
  auto set = [&](int i, int j, std::array<Expr, 3> v) {
    t[i][j] = v;
    t[j][i] = {-v[0], -v[1], -v[2]};
  };
  set(1, 0, {Expr(), sf.c011, sf.c012});
  set(2, 0, {Expr(), sf.c021, sf.c022});
  set(2, 1, {Expr(1), sf.c121, sf.c122});
  return t;
}

void validate_structure_functions(const StructureFunctions& sf) {
  require_zero(sf.c011 + sf.c022, ErrorKind::TraceViolation, "c011 + c022 must vanish");
}

Invariants compute_invariants(const StructureFunctions& sf) {
  Invariants inv;
  const Expr delta = sf.c021 - sf.c012;
  inv.h_tilde = {{{sf.c011, kHalf * delta}, {-(kHalf * delta), sf.c022}}};
  inv.h_bar = {{{-sf.c011, -(kHalf * delta)}, {-(kHalf * delta), sf.c022}}};
  inv.chi = -(sf.c011 * sf.c011) + kQuarter * delta * delta;
  inv.kappa = -(sf.c121 * sf.c121) + sf.c122 * sf.c122 - kHalf * (sf.c012 + sf.c021);
  return inv;
}

Invariants compute_invariants(const StructureFunctions& sf, const Frame& frame, const Chart& chart) {
  Invariants inv = compute_invariants(sf);
  inv.kappa = apply_field(frame.X2, sf.c121, chart) + apply_field(frame.X1, sf.c122, chart) + inv.kappa;
  return inv;
}

Truth matrix_is_zero(const Matrix2& m) {
  Truth t = Truth::True;
  for (const auto& row : m)
    for (const auto& e : row) t = truth_and(t, e.is_zero());
  return t;
}

// ------------------------------------------------------------------- eta

namespace {

EtaReport finish_eta(DifferentialForm eta, DifferentialForm residual, std::vector<Expr> oro7) {
  EtaReport r;
  r.eta = std::move(eta);
  r.residual = std::move(residual);
  std::vector<Expr> coefficients;
  for (unsigned m : {3u, 5u, 6u}) coefficients.push_back(r.residual.at_mask(m));
  r.stwrdz = checked("d eta = d kappa ^ nu0", coefficients);
  r.oro7 = checked("first-order identities for c and c12", std::move(oro7));
  r.holds = r.stwrdz.status == Truth::True && r.oro7.status == Truth::True;
  return r;
}

}  // namespace

EtaReport eta_check(const StructureFunctions& sf, const Expr& kappa, const ContactApparatus& app, const Frame& frame,
                    const Chart& chart) {
  require_h_tilde_zero(sf);
  const Expr& c = sf.c021;
  const DifferentialForm eta =
      (kappa + c) * app.coframe[0] + sf.c121 * app.coframe[1] + (-sf.c122) * app.coframe[2];
  const DifferentialForm dkappa = exterior_derivative(DifferentialForm::scalar(kappa), chart);
  const DifferentialForm residual = exterior_derivative(eta, chart) - wedge(dkappa, app.coframe[0]);
  auto X = [&](const VectorField& v, const Expr& f) { return apply_field(v, f, chart); };
  return finish_eta(eta, residual,
                    {-X(frame.X1, c) - c * sf.c122 + X(app.X0, sf.c121),
                     X(frame.X2, c) - c * sf.c121 + X(app.X0, sf.c122)});
}

EtaReport eta_check(const StructureFunctions& sf) {
  require_h_tilde_zero(sf);
  const Expr kappa = compute_invariants(sf).kappa;
  const Expr& c = sf.c021;
  const FrameCalculus calc = FrameCalculus::constant(bracket_table(sf));
  const DifferentialForm eta = DifferentialForm::one_form({kappa + c, sf.c121, -sf.c122});
  const DifferentialForm dkappa = calc.d(DifferentialForm::scalar(kappa));
  const DifferentialForm residual = calc.d(eta) - wedge(dkappa, DifferentialForm::basis(0));
  return finish_eta(eta, residual, {-c * sf.c122, -c * sf.c121});
}

// ------------------------------------------------------------ null kernel

std::string to_string(NullDirection d) {
  switch (d) {
    case NullDirection::XMinus: return "X1-X2";
    case NullDirection::XPlus: return "X1+X2";
    case NullDirection::None: break;
  }
  return "none";
}

NullKernel null_kernel_bundle(const StructureFunctions& sf) {
  const Invariants inv = compute_invariants(sf);
  NullKernel k;
  const Truth chi_zero = inv.chi.is_zero();
  const Truth h_zero = matrix_is_zero(inv.h_tilde);
  if (chi_zero == Truth::Unknown || h_zero == Truth::Unknown)
    throw Error(ErrorKind::Indeterminate, "cannot decide chi = 0 and h~ != 0");
  if (chi_zero == Truth::False) {
    k.reason = "chi is not zero";
    return k;
  }
  if (h_zero == Truth::True) {
    k.reason = "h~ is zero";
    return k;
  }
  const Expr half_delta = kHalf * (sf.c021 - sf.c012);
  const Truth first = (sf.c011 - half_delta).is_zero();
  if (first == Truth::Unknown) throw Error(ErrorKind::Indeterminate, "cannot decide the kernel branch");
  if (first == Truth::True) {
    k.direction = NullDirection::XMinus;
    k.vector = {Expr(1), Expr(-1)};
    return k;
  }
  const Truth second = (sf.c011 + half_delta).is_zero();
  if (second == Truth::Unknown) throw Error(ErrorKind::Indeterminate, "cannot decide the kernel branch");
  if (second == Truth::True) {
    k.direction = NullDirection::XPlus;
    k.vector = {Expr(1), Expr(1)};
    return k;
  }
  k.reason = "neither kernel branch applies";
  return k;
}

// --------------------------------------------------------- frame changes

Frame hyperbolic_rotate(const Frame& frame, const Expr& theta) {
  const Expr ch = Expr::cosh(theta);
  const Expr sh = Expr::sinh(theta);
  return {ch * frame.X1 + sh * frame.X2, sh * frame.X1 + ch * frame.X2};
}

Frame dilate(const Frame& frame, const Expr& s) { return {s * frame.X1, s * frame.X2}; }

// -------------------------------------------------------- classification

std::string to_string(Label label) {
  switch (label) {
    case Label::Heisenberg: return "Heisenberg";
    case Label::SL2Cover: return "SL2Cover";
    case Label::NullKernelCase: return "NullKernelCase";
    case Label::Generic: return "Generic";
    case Label::Undecided: return "Undecided";
  }
  return "Undecided";
}

Classification classify(const Invariants& inv, const StructureFunctions& sf, Mode mode) {
  Classification c;
  c.witness["chi"] = inv.chi.str();
  c.witness["kappa"] = inv.kappa.str();
  const Truth h_zero = matrix_is_zero(inv.h_tilde);
  if (h_zero == Truth::Unknown) {
    c.reason = "cannot decide whether h~ vanishes";
    return c;
  }
  if (h_zero == Truth::True) {
    c.witness["h_tilde"] = "0";
    if (mode == Mode::Coordinate) {
      c.label = Label::Generic;
      c.reason = "h~ = 0 pointwise; group-level labels need a left-invariant (abstract) structure";
      return c;
    }
    switch (inv.kappa.is_zero()) {
      case Truth::True:
        c.label = Label::Heisenberg;
        c.reason = "h~ = 0 and kappa = 0";
        return c;
      case Truth::False:
        c.label = Label::SL2Cover;
        c.reason = "h~ = 0 and kappa != 0";
        return c;
      case Truth::Unknown:
        c.reason = "cannot decide whether kappa vanishes";
        return c;
    }
  }
  switch (inv.chi.is_zero()) {
    case Truth::True: {
      NullKernel k;
      try {
        k = null_kernel_bundle(sf);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Indeterminate) throw;
        c.reason = e.what();
        return c;
      }
      c.label = k.direction == NullDirection::None ? Label::Undecided : Label::NullKernelCase;
      c.witness["direction"] = to_string(k.direction);
      c.reason = k.direction == NullDirection::None ? k.reason : "chi = 0 and h~ != 0";
      return c;
    }
    case Truth::False:
      c.label = Label::Generic;
      c.reason = "h~ != 0 and chi != 0";
      return c;
    case Truth::Unknown:
      c.reason = "cannot decide whether chi vanishes";
      return c;
  }
  return c;
}

// ------------------------------------------------------ normalizing theta

namespace {

Check normal_form_check(const StructureFunctions& d, const Expr& kappa) {
  return checked("rotated brackets in normal form",
                 {d.c011, d.c022, d.c012 + kappa, d.c021 + kappa, d.c121, d.c122});
}

void require_theta_residuals(const std::vector<Expr>& residuals) {
  std::string listing;
  bool bad = false;
  for (const auto& r : residuals) {
    const Truth t = r.is_zero();
    if (t == Truth::Unknown) throw Error(ErrorKind::Indeterminate, "cannot decide theta residual " + r.str());
    if (t == Truth::False) bad = true;
    listing += (listing.empty() ? "" : ", ") + r.str();
  }
  if (bad) throw Error(ErrorKind::ThetaInvalid, "residuals [" + listing + "]");
}

}  // namespace

ThetaReport verify_normalizing_theta(const Frame& frame, const Expr& theta, const Chart& chart) {
  const ContactApparatus app = build_apparatus(frame, chart);
  const StructureFunctions sf = structure_functions(frame, app, chart);
  require_h_tilde_zero(sf);
  const Expr kappa = compute_invariants(sf, frame, chart).kappa;
  auto X = [&](const VectorField& v) { return apply_field(v, theta, chart); };
  ThetaReport r;
  r.residuals = {X(frame.X1) - sf.c121, X(frame.X2) + sf.c122, X(app.X0) - (kappa + sf.c021)};
  require_theta_residuals(r.residuals);
  r.rotated = rotated_pipeline(frame, theta, chart).sf;
  r.normal_form = normal_form_check(r.rotated, kappa);
  return r;
}

ThetaReport verify_normalizing_theta(const StructureFunctions& sf, const Expr& theta) {
  validate_structure_functions(sf);
  require_h_tilde_zero(sf);
  if (theta.has_atoms() || !theta.free_symbols().empty()) {
    if (!theta.free_symbols().empty())
      throw Error(ErrorKind::InvalidInput, "theta must be a constant for a left-invariant structure");
  }
  const Expr kappa = compute_invariants(sf).kappa;
  ThetaReport r;
  // Derivatives of a constant vanish.
  r.residuals = {-sf.c121, sf.c122, -(kappa + sf.c021)};
  require_theta_residuals(r.residuals);
  r.rotated = rotate_constant(sf, theta);
  r.normal_form = normal_form_check(r.rotated, kappa);
  return r;
}

StructureFunctions rotate_constant(const StructureFunctions& sf, const Expr& theta) {
  using V = std::array<Expr, 3>;  // coefficients on X0, X1, X2
  const BracketTable t = bracket_table(sf);
  auto bracket = [&](const V& a, const V& b) {
    V r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r[k] += a[i] * b[j] * t[i][j][k];
    return r;
  };
  const Expr ch = Expr::cosh(theta);
  const Expr sh = Expr::sinh(theta);
  const V y0{Expr(1), Expr(), Expr()};
  const V y1{Expr(), ch, sh};
  const V y2{Expr(), sh, ch};
  // X1 = ch Y1 - sh Y2, X2 = -sh Y1 + ch Y2.
  auto in_y = [&](const V& v) { return V{v[0], ch * v[1] - sh * v[2], -sh * v[1] + ch * v[2]}; };
  const V b10 = in_y(bracket(y1, y0));
  const V b20 = in_y(bracket(y2, y0));
  const V b21 = in_y(bracket(y2, y1));
  return {b10[1], b10[2], b20[1], b20[2], b21[1], b21[2]};
}

// ---------------------------------------------------- rotation identities

Check rotation_formula_check(const Frame& frame, const Expr& theta, const Chart& chart) {
  const ContactApparatus app = build_apparatus(frame, chart);
  const StructureFunctions c = structure_functions(frame, app, chart);
  const StructureFunctions d = rotated_pipeline(frame, theta, chart).sf;
  const Expr ch = Expr::cosh(theta);
  const Expr sh = Expr::sinh(theta);
  const Expr ch2 = ch * ch;
  const Expr sh2 = sh * sh;
  const Expr shch = sh * ch;
  const Expr x0 = apply_field(app.X0, theta, chart);
  const Expr x1 = apply_field(frame.X1, theta, chart);
  const Expr x2 = apply_field(frame.X2, theta, chart);
  return make_check(
      "rotated structure functions",
      {d.c021 - (-x0 + c.c021 * ch2 - c.c012 * sh2 + (c.c011 - c.c022) * shch),
       d.c022 - ((c.c012 - c.c021) * shch + c.c022 * ch2 - c.c011 * sh2),
       d.c011 - (c.c011 * ch2 - c.c022 * sh2 + (c.c021 - c.c012) * shch),
       d.c012 - (-x0 + c.c012 * ch2 - c.c021 * sh2 + (c.c022 - c.c011) * shch),
       d.c121 - ((c.c121 - x1) * ch - (x2 + c.c122) * sh),
       d.c122 - ((x1 - c.c121) * sh + (x2 + c.c122) * ch)});
}

namespace {

// M^-1 h M with M = [[cosh t, sinh t], [sinh t, cosh t]] (det M = 1).
Matrix2 conjugate_by_rotation(const Matrix2& h, const Expr& theta) {
  const Expr ch = Expr::cosh(theta);
  const Expr sh = Expr::sinh(theta);
  const Matrix2 m{{{ch, sh}, {sh, ch}}};
  const Matrix2 m_inv{{{ch, -sh}, {-sh, ch}}};
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Expr s;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) s += m_inv[i][k] * h[k][l] * m[l][j];
      r[i][j] = s;
    }
  return r;
}

Check covariance(const Invariants& before, const Invariants& after, const Expr& theta) {
  std::vector<Expr> residuals = matrix_difference(after.h_tilde, conjugate_by_rotation(before.h_tilde, theta));
  residuals.push_back(after.chi - before.chi);
  return make_check("h~ rotates by conjugation", residuals);
}

}  // namespace

Check h_tilde_covariance_check(const Frame& frame, const Expr& theta, const Chart& chart) {
  const ContactApparatus app = build_apparatus(frame, chart);
  const Invariants before = compute_invariants(structure_functions(frame, app, chart), frame, chart);
  const Rotated r = rotated_pipeline(frame, theta, chart);
  return covariance(before, compute_invariants(r.sf, r.frame, chart), theta);
}

Check kappa_rotation_check(const Frame& frame, const Expr& theta, const Chart& chart) {
  const ContactApparatus app = build_apparatus(frame, chart);
  const Expr before = compute_invariants(structure_functions(frame, app, chart), frame, chart).kappa;
  const Rotated r = rotated_pipeline(frame, theta, chart);
  const Expr after = compute_invariants(r.sf, r.frame, chart).kappa;
  return make_check("kappa is rotation invariant", {after - before});
}

std::vector<Check> constant_rotation_checks(const StructureFunctions& sf, const Expr& theta) {
  const Invariants before = compute_invariants(sf);
  const Invariants after = compute_invariants(rotate_constant(sf, theta));
  return {covariance(before, after, theta), make_check("kappa is rotation invariant", {after.kappa - before.kappa})};
}

// --------------------------------------------------------------- dilation

DilationReport dilation_checks(const Frame& frame, const Expr& s, const Chart& chart) {
  DilationReport r;
  const ContactApparatus app = build_apparatus(frame, chart);
  const StructureFunctions c = structure_functions(frame, app, chart);
  r.original = compute_invariants(c, frame, chart);
  r.scaled = dilate(frame, s);
  const ContactApparatus app2 = build_apparatus(r.scaled, chart);
  const StructureFunctions d = structure_functions(r.scaled, app2, chart);
  r.dilated = compute_invariants(d, r.scaled, chart);
  const Expr s2 = s * s;
  const Expr s4 = s2 * s2;

  const Check reeb = make_check("X0' = s^2 X0", {app2.X0[0] - s2 * app.X0[0], app2.X0[1] - s2 * app.X0[1],
                                                  app2.X0[2] - s2 * app.X0[2]});
  const Check omega = make_check("omega' = omega / s^2", {app2.omega.component(0) - app.omega.component(0) / s2,
                                                          app2.omega.component(1) - app.omega.component(1) / s2,
                                                          app2.omega.component(2) - app.omega.component(2) / s2});
  std::vector<Expr> all_linear;
  const auto cv = c.values();
  const auto dv = d.values();
  for (std::size_t i = 0; i < 6; ++i) all_linear.push_back(dv[i] - s * cv[i]);
  const Check kappa = make_check("kappa' = s^2 kappa", {r.dilated.kappa - s2 * r.original.kappa});

  r.stated = {reeb,
              omega,
              make_check("c' = s c", all_linear),
              make_check("chi' = s^2 chi", {r.dilated.chi - s2 * r.original.chi}),
              kappa,
              make_check("h' = s h", matrix_difference(r.dilated.h_tilde, scaled(s, r.original.h_tilde)))};
  r.derived = {reeb,
               omega,
               make_check("c0' = s^2 c0", {dv[0] - s2 * cv[0], dv[1] - s2 * cv[1], dv[2] - s2 * cv[2], dv[3] - s2 * cv[3]}),
               make_check("c12' = s c12", {dv[4] - s * cv[4], dv[5] - s * cv[5]}),
               make_check("chi' = s^4 chi", {r.dilated.chi - s4 * r.original.chi}),
               kappa,
               make_check("h' = s^2 h", matrix_difference(r.dilated.h_tilde, scaled(s2, r.original.h_tilde)))};
  return r;
}

}  // namespace sublorentz
