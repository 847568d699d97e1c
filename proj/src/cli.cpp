#include "sublorentz/cli.hpp"

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sublorentz/fixtures.hpp"
#include "sublorentz/lie_algebra.hpp"
#include "sublorentz/ode_bridge.hpp"
#include "sublorentz/parser.hpp"
#include "sublorentz/symmetry.hpp"

namespace sublorentz {

using json = nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Indeterminate:
    case ErrorKind::IndeterminateDomain: return kIndeterminate;
    case ErrorKind::ThetaInvalid:
    case ErrorKind::HTildeNonzero:
    case ErrorKind::DistributionNotPreserved: return kCheckFailed;
    default: return kInputError;
  }
}

namespace {

const std::array<std::string, 3> kFrameLabels{"X0", "X1", "X2"};
const std::array<std::string, 3> kMomenta{"h0", "h1", "h2"};

std::string status_name(Truth t) {
  switch (t) {
    case Truth::True: return "pass";
    case Truth::False: return "fail";
    case Truth::Unknown: break;
  }
  return "indeterminate";
}

std::string show(const Expr& e) { return render_expr(e); }

json show(const Matrix2& m) { return json::array({{show(m[0][0]), show(m[0][1])}, {show(m[1][0]), show(m[1][1])}}); }

json show(const ExprMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(show(e));
    rows.push_back(r);
  }
  return rows;
}

std::string in_frame(const std::array<Expr, 3>& components) {
  return render_form(DifferentialForm::one_form(components), kFrameLabels);
}

// Collects checks and derives the exit code.
class Ledger {
 public:
  void add(const Check& c) {
    json residuals = json::array();
    for (const auto& r : c.residuals)
      if (!r.is_literal_zero()) residuals.push_back(show(r));
    entries_.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"residuals", residuals}});
    if (c.status == Truth::False) failed_ = true;
    if (c.status == Truth::Unknown) unknown_ = true;
  }
  void add(const std::vector<Check>& cs) {
    for (const auto& c : cs) add(c);
  }
  void add(const std::string& name, Truth status) { add(Check{name, status, {}}); }
  /// Runs `f`; an Indeterminate error becomes an indeterminate entry.
  template <typename F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      if (exit_code_for(e.kind()) != kIndeterminate) throw;
      entries_.push_back({{"name", name}, {"status", "indeterminate"}, {"residuals", json::array({e.what()})}});
      unknown_ = true;
    }
  }
  const json& entries() const noexcept { return entries_; }
  int exit_code() const noexcept { return failed_ ? kCheckFailed : unknown_ ? kIndeterminate : kPass; }

 private:
  json entries_ = json::array();
  bool failed_ = false;
  bool unknown_ = false;
};

struct Loaded {
  std::string source;
  StructureDefinition def;
};

Loaded resolve(const std::string& arg) {
  if (std::filesystem::exists(arg)) return {arg, load_structure_file(arg)};
  const auto& names = builtin_structure_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return {"builtin:" + arg, builtin_structure(arg)};
  throw Error(ErrorKind::InvalidInput, "'" + arg + "' is neither a file nor a built-in structure");
}

json describe_input(const Loaded& in) {
  const StructureDefinition& d = in.def;
  json j{{"source", in.source},
         {"mode", d.is_coordinate() ? "coordinate" : "abstract"},
         {"chart", {{"coordinates", d.chart.coordinates()}, {"parameters", d.chart.parameters()}}}};
  if (d.is_coordinate())
    j["frame"] = {{"X1", render_field(d.frame().X1, d.chart)}, {"X2", render_field(d.frame().X2, d.chart)}};
  return j;
}

json describe(const StructureFunctions& sf) {
  json j = json::object();
  const auto v = sf.values();
  for (std::size_t i = 0; i < 6; ++i) j[StructureFunctions::names[i]] = show(v[i]);
  return j;
}

json describe(const Invariants& inv) {
  return {{"h_tilde", show(inv.h_tilde)}, {"h_bar", show(inv.h_bar)}, {"chi", show(inv.chi)}, {"kappa", show(inv.kappa)}};
}

json describe(const Classification& c) {
  return {{"label", to_string(c.label)}, {"reason", c.reason}, {"witness", c.witness}};
}

json describe(const ContactApparatus& app, const Chart& chart) {
  json coframe = json::array();
  for (const auto& nu : app.coframe) coframe.push_back(render_form(nu, chart));
  json excluded = json::array();
  for (const auto& e : app.excluded) excluded.push_back(show(e));
  return {{"omega", render_form(app.omega, chart)},
          {"X0", render_field(app.X0, chart)},
          {"coframe", coframe},
          {"excluded", excluded}};
}

json describe(const ConformalReport& r) {
  json j{{"verdict", to_string(r.verdict)}, {"lie_derivative", show(r.lie_derivative)}};
  if (r.verdict == Verdict::Isometry || r.verdict == Verdict::Conformal) j["mu"] = show(r.mu);
  return j;
}

// Prop. "X0 is an isometry iff h~ = 0" and the 2 h-bar cross-check.
void reeb_symmetry_checks(const AdjointData& x0, const Invariants& inv, Ledger& ledger, json& report) {
  ledger.guarded("X0 is an isometry iff h~ = 0", [&] {
    const ConformalReport r = conformal_factor(x0);
    report["reeb_field_symmetry"] = describe(r);
    const Truth h_zero = matrix_is_zero(inv.h_tilde);
    Truth agree = Truth::Unknown;
    if (r.verdict != Verdict::Unknown && h_zero != Truth::Unknown)
      agree = ((r.verdict == Verdict::Isometry) == (h_zero == Truth::True)) ? Truth::True : Truth::False;
    ledger.add("X0 is an isometry iff h~ = 0", agree);
    std::vector<Expr> diff;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) diff.push_back(r.lie_derivative[i][j] - Expr(2) * inv.h_bar[i][j]);
    ledger.add(make_check("L_X0 g = 2 h-bar", diff));
  });
}

void eta_checks(const EtaReport& e, const std::array<std::string, 3>& basis, Ledger& ledger, json& report) {
  report["eta"] = render_form(e.eta, basis);
  ledger.add(e.oro7);
  ledger.add(e.stwrdz);
}

void theta_checks(const std::function<ThetaReport()>& verify, Ledger& ledger, json& report) {
  try {
    const ThetaReport t = verify();
    json residuals = json::array();
    for (const auto& r : t.residuals) residuals.push_back(show(r));
    report["normalizing_theta"] = {{"residuals", residuals}, {"rotated", describe(t.rotated)}};
    ledger.add(Check{"theta normalizes the frame", Truth::True, {}});
    ledger.add(t.normal_form);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ThetaInvalid && e.kind() != ErrorKind::HTildeNonzero) throw;
    ledger.add(Check{"theta normalizes the frame", Truth::False, {}});
    report["normalizing_theta"] = {{"error", e.what()}};
  }
}

LieAlgebra algebra_of(const StructureFunctions& sf) {
  const BracketTable t = bracket_table(sf);
  LieAlgebra L({"X0", "X1", "X2"});
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      L.set_bracket(i, j, {t[i][j][0], t[i][j][1], t[i][j][2]});
  return L;
}

AdjointData reeb_adjoint(const StructureFunctions& sf) { return AdjointData::constant({Expr(1), Expr(), Expr()}, sf); }

// ----------------------------------------------------------------- commands

struct Result {
  json report;
  int code = kPass;
};

Result analyze(const Loaded& in, bool full) {
  const StructureDefinition& d = in.def;
  json report{{"command", full ? "analyze" : "classify"}, {"input", describe_input(in)}};
  Ledger ledger;
  if (d.is_coordinate()) {
    const Frame& frame = d.frame();
    const Chart& chart = d.chart;
    const ContactApparatus app = build_apparatus(frame, chart);
    const StructureFunctions sf = structure_functions(frame, app, chart);
    const Invariants inv = compute_invariants(sf, frame, chart);
    report["structure_functions"] = describe(sf);
    report["invariants"] = describe(inv);
    report["classification"] = describe(classify(inv, sf, Mode::Coordinate));
    ledger.add(make_check("c011 + c022 = 0", {sf.c011 + sf.c022}));
    if (full) {
      report["apparatus"] = describe(app, chart);
      report["contact_locus"] = show(contact_locus(frame, chart));
      report["brackets"] = {
          {"[X1,X0]", in_frame(frame_components(app, lie_bracket(frame.X1, app.X0, chart)))},
          {"[X2,X0]", in_frame(frame_components(app, lie_bracket(frame.X2, app.X0, chart)))},
          {"[X2,X1]", in_frame(frame_components(app, lie_bracket(frame.X2, frame.X1, chart)))}};
      ledger.add(apparatus_checks(app, frame, chart));
      const DifferentialForm r = coframe_structure_residual(app, chart);
      ledger.add(make_check("d nu0 = nu1 ^ nu2", {r.at_mask(3), r.at_mask(5), r.at_mask(6)}));
      const Ala1Report ala1 = lemma_ala1_check(frame, chart);
      report["poisson_h_h0"] = ala1.bracket.str(kMomenta);
      ledger.add(ala1.check);
      reeb_symmetry_checks(AdjointData::coordinate(app.X0, frame, app, chart), inv, ledger, report);
      if (matrix_is_zero(inv.h_tilde) == Truth::True)
        ledger.guarded("eta identities", [&] {
          eta_checks(eta_check(sf, inv.kappa, app, frame, chart), {"nu0", "nu1", "nu2"}, ledger, report);
        });
      if (d.theta) theta_checks([&] { return verify_normalizing_theta(frame, *d.theta, chart); }, ledger, report);
      json symmetries = json::array();
      for (std::size_t i = 0; i < d.symmetries.size(); ++i) {
        json s{{"Z", d.symmetry_sources[i]}};
        const AdjointData z = AdjointData::coordinate(d.symmetries[i], frame, app, chart);
        const Truth preserves = preserves_distribution(z);
        s["preserves_distribution"] = std::string(to_string(preserves));
        if (preserves == Truth::True) {
          const ConformalReport c = conformal_factor(z);
          s.update(describe(c));
        }
        symmetries.push_back(s);
      }
      if (!symmetries.empty()) report["symmetries"] = symmetries;
    }
  } else {
    const StructureFunctions& sf = d.constants();
    validate_structure_functions(sf);
    const Invariants inv = compute_invariants(sf);
    report["structure_functions"] = describe(sf);
    report["invariants"] = describe(inv);
    report["classification"] = describe(classify(inv, sf, Mode::Abstract));
    ledger.add(make_check("c011 + c022 = 0", {sf.c011 + sf.c022}));
    if (full) {
      const LieAlgebra L = algebra_of(sf);
      report["brackets"] = L.table();
      ledger.add(jacobi_check(L));
      reeb_symmetry_checks(reeb_adjoint(sf), inv, ledger, report);
      if (matrix_is_zero(inv.h_tilde) == Truth::True)
        ledger.guarded("eta identities", [&] { eta_checks(eta_check(sf), {"nu0", "nu1", "nu2"}, ledger, report); });
      if (d.theta) theta_checks([&] { return verify_normalizing_theta(sf, *d.theta); }, ledger, report);
    }
  }
  report["checks"] = ledger.entries();
  return {report, ledger.exit_code()};
}

Result symmetry(const Loaded& in) {
  const StructureDefinition& d = in.def;
  if (!d.is_coordinate()) throw Error(ErrorKind::InvalidInput, "candidate fields need a coordinate frame");
  if (d.symmetries.empty()) throw Error(ErrorKind::MissingSection, "the input has no [symmetry] section");
  const Frame& frame = d.frame();
  const Chart& chart = d.chart;
  const ContactApparatus app = build_apparatus(frame, chart);
  const StructureFunctions sf = structure_functions(frame, app, chart);
  const Invariants inv = compute_invariants(sf, frame, chart);
  json report{{"command", "symmetry"}, {"input", describe_input(in)}};
  Ledger ledger;
  reeb_symmetry_checks(AdjointData::coordinate(app.X0, frame, app, chart), inv, ledger, report);
  json fields = json::array();
  for (std::size_t i = 0; i < d.symmetries.size(); ++i) {
    const std::string& src = d.symmetry_sources[i];
    json s{{"Z", src}};
    const AdjointData z = AdjointData::coordinate(d.symmetries[i], frame, app, chart);
    const Truth preserves = preserves_distribution(z);
    s["preserves_distribution"] = std::string(to_string(preserves));
    if (preserves == Truth::True) {
      ledger.guarded("Z = " + src, [&] {
        const ConformalReport c = conformal_factor(z);
        s.update(describe(c));
        if (c.verdict != Verdict::Isometry && c.verdict != Verdict::Conformal) return;
        for (int n : {2, 3}) {
          const BinomialReport b = binomial_identity_check(z, n);
          json sums = json::array();
          for (const auto& e : b.sums) sums.push_back(show(e));
          s["binomial_sums"][std::to_string(n)] = sums;
          const std::string suffix = " (Z = " + src + ", n = " + std::to_string(n) + ")";
          ledger.add(Check{b.vanishing.name + suffix, b.vanishing.status, b.vanishing.residuals});
          ledger.add(Check{b.corrected.name + suffix, b.corrected.status, b.corrected.residuals});
        }
      });
    }
    fields.push_back(s);
  }
  report["symmetries"] = fields;
  report["checks"] = ledger.entries();
  return {report, ledger.exit_code()};
}

Result rotate(const Loaded& in, const std::string& theta_text) {
  const StructureDefinition& d = in.def;
  const Expr theta = parse_expr(theta_text, d.chart);
  json report{{"command", "rotate"}, {"input", describe_input(in)}, {"theta", show(theta)}};
  Ledger ledger;
  if (d.is_coordinate()) {
    const Frame& frame = d.frame();
    const Chart& chart = d.chart;
    const ContactApparatus app = build_apparatus(frame, chart);
    const Invariants before = compute_invariants(structure_functions(frame, app, chart), frame, chart);
    const Frame rotated = hyperbolic_rotate(frame, theta);
    const ContactApparatus app2 = build_apparatus(rotated, chart);
    const StructureFunctions sf2 = structure_functions(rotated, app2, chart);
    report["rotated_frame"] = {{"Y1", render_field(rotated.X1, chart)}, {"Y2", render_field(rotated.X2, chart)}};
    report["structure_functions"] = describe(sf2);
    report["invariants"] = {{"original", describe(before)},
                            {"rotated", describe(compute_invariants(sf2, rotated, chart))}};
    ledger.add(make_check("Reeb field unchanged", {app2.X0[0] - app.X0[0], app2.X0[1] - app.X0[1],
                                                   app2.X0[2] - app.X0[2]}));
    ledger.add(rotation_formula_check(frame, theta, chart));
    ledger.add(h_tilde_covariance_check(frame, theta, chart));
    ledger.add(kappa_rotation_check(frame, theta, chart));
  } else {
    for (const auto& name : theta.free_symbols())
      if (!d.chart.is_parameter(name)) throw Error(ErrorKind::InvalidInput, "theta must be constant here");
    const StructureFunctions sf2 = rotate_constant(d.constants(), theta);
    report["structure_functions"] = describe(sf2);
    report["invariants"] = {{"original", describe(compute_invariants(d.constants()))},
                            {"rotated", describe(compute_invariants(sf2))}};
    ledger.add(constant_rotation_checks(d.constants(), theta));
  }
  report["checks"] = ledger.entries();
  return {report, ledger.exit_code()};
}

Result dilate(const Loaded& in, const std::string& scale) {
  const StructureDefinition& d = in.def;
  if (!d.is_coordinate()) throw Error(ErrorKind::InvalidInput, "dilate needs a coordinate frame");
  if (d.chart.is_coordinate(scale)) throw Error(ErrorKind::InvalidInput, "'" + scale + "' is a coordinate");
  const Chart chart = d.chart.is_parameter(scale) ? d.chart : d.chart.with_parameters({scale});
  const Expr s = chart.symbol(scale);
  const DilationReport r = dilation_checks(d.frame(), s, chart);
  json stated = json::array();
  for (const auto& c : r.stated) stated.push_back({{"name", c.name}, {"status", status_name(c.status)}});
  json report{{"command", "dilate"},
              {"input", describe_input(in)},
              {"scale", scale},
              {"dilated_frame", {{"X1", render_field(r.scaled.X1, chart)}, {"X2", render_field(r.scaled.X2, chart)}}},
              {"invariants", {{"original", describe(r.original)}, {"dilated", describe(r.dilated)}}},
              {"stated_laws", stated}};
  Ledger ledger;
  ledger.add(r.derived);
  report["checks"] = ledger.entries();
  return {report, ledger.exit_code()};
}

struct Marking {
  int x1, x2, x0;
};

std::optional<Marking> marking_for(const std::string& name) {
  if (name == "heisenberg" || name == "sl2_e" || name == "sl2_n" || name == "sl2_f") return Marking{1, 2, 0};
  return std::nullopt;
}

Result algebra(const std::string& name, const std::optional<std::string>& kappa_text) {
  std::optional<Expr> kappa;
  if (kappa_text) {
    const Expr k = parse_expr(*kappa_text, Chart({"#0", "#1", "#2"}, {}));
    if (!k.as_rational()) throw Error(ErrorKind::InvalidInput, "--kappa must be a rational number");
    kappa = k;
  }
  const LieAlgebra L = catalog_algebra(name, kappa);
  const KillingData kd = killing_form(L);
  const Check jacobi = jacobi_check(L);
  json report{{"command", "algebra"},
              {"name", name},
              {"dimension", L.dimension()},
              {"basis", L.labels()},
              {"brackets", L.table()},
              {"jacobi", status_name(jacobi.status)},
              {"killing", show(kd.K)},
              {"killing_det", show(kd.determinant)}};
  if (kd.signature)
    report["inertia"] = {kd.signature->positive, kd.signature->negative, kd.signature->zero};
  else
    report["inertia"] = nullptr;
  Ledger ledger;
  ledger.add(jacobi);
  ledger.add(killing_ad_invariance(L, kd.K));
  if (const auto m = marking_for(name)) {
    const Invariants inv = constant_mode_invariants(L, m->x1, m->x2, m->x0);
    report["marked"] = {{"X1", L.labels()[static_cast<std::size_t>(m->x1)]},
                        {"X2", L.labels()[static_cast<std::size_t>(m->x2)]},
                        {"X0", L.labels()[static_cast<std::size_t>(m->x0)]},
                        {"invariants", describe(inv)}};
  }
  if (name == "sl2_f") {
    ExprMatrix B = kd.K;
    for (auto& row : B)
      for (auto& e : row) e = Expr::rational(1, 2) * e;
    report["half_killing"] = show(B);
    const AutomorphismReport t = automorphism_check(L, sl2_f_swap());
    ledger.add(Check{"T is an automorphism", t.homomorphism.status, t.homomorphism.residuals});
    ledger.add(Check{"T preserves K", t.killing_preserved.status, t.killing_preserved.residuals});
  }
  if (name == "conformal8") {
    const Sl3Report s = is_sl3(L);
    ledger.add("dim 8, Jacobi, det K != 0, inertia (5,3,0)", s.holds ? Truth::True : Truth::False);
    const ExprMatrix printed = printed_conformal_killing_matrix();
    std::vector<Expr> diff;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) diff.push_back(kd.K[i][j] - printed[i][j]);
    report["printed_killing"] = show(printed);
    ledger.add(make_check("Killing matrix equals the printed matrix", diff));
    ledger.add(make_check("det K = -3048192", {kd.determinant - Expr(-3048192L)}));
  }
  if (name == "isometry4") {
    const LieAlgebra dual = dualize_structure_equations(isometry_labels(), isometry_structure_equations(), {"k"});
    std::vector<Expr> diff;
    const Expr zero_k = Expr();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          diff.push_back(dual.c(i, j, k).subs({{"k", zero_k}}) - L.c(i, j, k));
    report["dualized_isometry_equations"] = dual.table();
    ledger.add(make_check("dualized isometry equations at k = 0 match the table", diff));
  }
  report["checks"] = ledger.entries();
  return {report, ledger.exit_code()};
}

Result ode(const std::string& q) {
  const OdeStructure s = build_from_ode(std::string_view(q));
  const Chart& chart = s.chart;
  json forms = json::array();
  for (const auto& w : s.forms) forms.push_back(render_form(w, chart));
  json report{{"command", "ode"},
              {"Q", show(s.Q)},
              {"chart", chart.coordinates()},
              {"forms", forms},
              {"N1", render_field(s.N1, chart)},
              {"N2", render_field(s.N2, chart)},
              {"frame", {{"X1", render_field(s.frame.X1, chart)}, {"X2", render_field(s.frame.X2, chart)}}}};
  Ledger ledger;
  ledger.add(verify_null_bundles(s));
  const ContactApparatus app = build_apparatus(s.frame, chart);
  ledger.add(apparatus_checks(app, s.frame, chart));
  const StructureFunctions sf = structure_functions(s.frame, app, chart);
  const Invariants inv = compute_invariants(sf, s.frame, chart);
  report["apparatus"] = describe(app, chart);
  report["structure_functions"] = describe(sf);
  report["invariants"] = describe(inv);
  report["classification"] = describe(classify(inv, sf, Mode::Coordinate));
  report["checks"] = ledger.entries();
  return {report, ledger.exit_code()};
}

Result catalog() {
  return {{{"command", "catalog"}, {"structures", builtin_structure_names()}, {"algebras", catalog_algebra_names()}},
          kPass};
}

// --------------------------------------------------------------- text output

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool is_flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (!is_flat(e)) return false;
  return true;
}

std::string flat_text(const json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat_text(j[i]);
  return s + "]";
}

void write_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (key == "checks") {
      out << pad << "checks:\n";
      for (const auto& c : value) {
        out << pad << "  [" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>() << "\n";
        for (const auto& r : c["residuals"]) out << pad << "      residual: " << scalar_text(r) << "\n";
      }
    } else if (is_flat(value)) {
      out << pad << key << ": " << flat_text(value) << "\n";
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      write_text(value, out, indent + 2);
    } else {
      out << pad << key << ":\n";
      for (const auto& e : value) {
        if (e.is_object()) {
          out << pad << "  -\n";
          write_text(e, out, indent + 4);
        } else {
          out << pad << "  - " << flat_text(e) << "\n";
        }
      }
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of contact sub-Lorentzian structures", "sublorentz"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string input, theta, scale, name, q;
  std::optional<std::string> kappa;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "Full pipeline on a structure file or built-in");
  analyze_cmd->add_option("input", input, "Structure file or built-in name")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Invariants and classification");
  classify_cmd->add_option("input", input, "Structure file or built-in name")->required();
  auto* symmetry_cmd = app.add_subcommand("symmetry", "Test the [symmetry] fields");
  symmetry_cmd->add_option("input", input, "Structure file or built-in name")->required();
  auto* rotate_cmd = app.add_subcommand("rotate", "Hyperbolic rotation of the frame");
  rotate_cmd->add_option("input", input, "Structure file or built-in name")->required();
  rotate_cmd->add_option("--theta", theta, "Rotation angle")->required();
  auto* dilate_cmd = app.add_subcommand("dilate", "Dilation of the frame by a parameter");
  dilate_cmd->add_option("input", input, "Structure file or built-in name")->required();
  dilate_cmd->add_option("--scale", scale, "Parameter name")->required();
  auto* algebra_cmd = app.add_subcommand("algebra", "Catalog Lie algebra");
  algebra_cmd->add_option("name", name, "Algebra name")->required();
  algebra_cmd->add_option("--kappa", kappa, "Rational value of k");
  auto* ode_cmd = app.add_subcommand("ode", "Structure of u'' = Q(x, u, p)");
  ode_cmd->add_option("--Q", q, "Right-hand side")->required();
  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in structures and algebras");
  for (auto* sub : {analyze_cmd, classify_cmd, symmetry_cmd, rotate_cmd, dilate_cmd, algebra_cmd, ode_cmd, catalog_cmd})
    add_format(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  Result result;
  try {
    if (*analyze_cmd) result = analyze(resolve(input), true);
    else if (*classify_cmd) result = analyze(resolve(input), false);
    else if (*symmetry_cmd) result = symmetry(resolve(input));
    else if (*rotate_cmd) result = rotate(resolve(input), theta);
    else if (*dilate_cmd) result = dilate(resolve(input), scale);
    else if (*algebra_cmd) result = algebra(name, kappa);
    else if (*ode_cmd) result = ode(q);
    else result = catalog();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }

  result.report["report_version"] = 1;
  if (format == "json")
    out << result.report.dump(2) << "\n";
  else
    write_text(result.report, out, 0);
  return result.code;
}

}  // namespace sublorentz
