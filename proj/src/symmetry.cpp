#include "sublorentz/symmetry.hpp"

#include <algorithm>

namespace sublorentz {

namespace {

using Components = std::array<Expr, 3>;

Components unit(int i) {
  Components c;
  c[static_cast<std::size_t>(i)] = Expr(1);
  return c;
}

// g on horizontal components; index 0 (the X0 part) is ignored.
Expr metric(const Components& u, const Components& v) { return -(u[1] * v[1]) + u[2] * v[2]; }

void require_horizontal(const Components& v, const std::string& what) {
  switch (v[0].is_zero()) {
    case Truth::True: return;
    case Truth::False: throw Error(ErrorKind::DistributionNotPreserved, what + " has X0-component " + v[0].str());
    case Truth::Unknown:
      throw Error(ErrorKind::Indeterminate, "cannot decide whether " + what + " is horizontal: " + v[0].str());
  }
}

Expr binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Expr(r);
}

}  // namespace

AdjointData AdjointData::coordinate(const VectorField& Z, const Frame& frame, const ContactApparatus& app,
                                    const Chart& chart) {
  AdjointData a;
  a.act = [Z, chart](const Expr& f) { return apply_field(Z, f, chart); };
  a.ad = [Z, frame, app, chart](const Components& v) {
    const VectorField V = v[0] * app.X0 + v[1] * frame.X1 + v[2] * frame.X2;
    return frame_components(app, lie_bracket(Z, V, chart));
  };
  return a;
}

AdjointData AdjointData::constant(const std::array<Expr, 3>& z, const StructureFunctions& sf) {
  AdjointData a;
  a.act = [](const Expr&) { return Expr(); };
  a.ad = [z, t = bracket_table(sf)](const Components& v) {
    Components r;
    for (std::size_t i = 0; i < 3; ++i) {
      if (z[i].is_literal_zero()) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        if (v[j].is_literal_zero()) continue;
        for (std::size_t k = 0; k < 3; ++k) r[k] += z[i] * v[j] * t[i][j][k];
      }
    }
    return r;
  };
  return a;
}

Truth preserves_distribution(const AdjointData& z) {
  return truth_and(z.ad(unit(1))[0].is_zero(), z.ad(unit(2))[0].is_zero());
}

Truth preserves_distribution(const VectorField& Z, const Frame& frame, const Chart& chart) {
  const ContactApparatus app = build_apparatus(frame, chart);
  return preserves_distribution(AdjointData::coordinate(Z, frame, app, chart));
}

Matrix2 restricted_lie_derivative(const AdjointData& z, int order) {
  if (order < 1) throw Error(ErrorKind::InvalidInput, "order must be at least 1");
  const Components a1 = z.ad(unit(1));
  const Components a2 = z.ad(unit(2));
  require_horizontal(a1, "[Z,X1]");
  require_horizontal(a2, "[Z,X2]");
  // a[i][m]: coefficient of X_(m+1) in ad_Z X_(i+1).
  const std::array<std::array<Expr, 2>, 2> a{{{a1[1], a1[2]}, {a2[1], a2[2]}}};
  Matrix2 t{{{Expr(-1), Expr()}, {Expr(), Expr(1)}}};
  for (int step = 0; step < order; ++step) {
    Matrix2 next;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Expr v = z.act(t[i][j]);
        for (int m = 0; m < 2; ++m) v -= a[i][m] * t[m][j] + a[j][m] * t[i][m];
        next[i][j] = v;
      }
    t = next;
  }
  return t;
}

Matrix2 restricted_lie_derivative(const VectorField& Z, const Frame& frame, const Chart& chart, int order) {
  const ContactApparatus app = build_apparatus(frame, chart);
  return restricted_lie_derivative(AdjointData::coordinate(Z, frame, app, chart), order);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Isometry: return "isometry";
    case Verdict::Conformal: return "conformal";
    case Verdict::Neither: return "neither";
    case Verdict::Unknown: break;
  }
  return "unknown";
}

ConformalReport conformal_factor(const AdjointData& z) {
  ConformalReport r;
  switch (preserves_distribution(z)) {
    case Truth::False: throw Error(ErrorKind::DistributionNotPreserved, "ad_Z does not preserve the distribution");
    case Truth::Unknown: return r;
    case Truth::True: break;
  }
  r.lie_derivative = restricted_lie_derivative(z, 1);
  const Matrix2& L = r.lie_derivative;
  const Truth off = L[0][1].is_zero();
  const Truth trace = (L[0][0] + L[1][1]).is_zero();
  if (off == Truth::False || trace == Truth::False) {
    r.verdict = Verdict::Neither;
    return r;
  }
  if (off == Truth::Unknown || trace == Truth::Unknown) return r;
  r.mu = L[1][1];
  switch (r.mu.is_zero()) {
    case Truth::True: r.verdict = Verdict::Isometry; break;
    case Truth::False: r.verdict = Verdict::Conformal; break;
    case Truth::Unknown: break;
  }
  return r;
}

ConformalReport conformal_factor(const VectorField& Z, const Frame& frame, const Chart& chart) {
  const ContactApparatus app = build_apparatus(frame, chart);
  return conformal_factor(AdjointData::coordinate(Z, frame, app, chart));
}

BinomialReport binomial_identity_check(const AdjointData& z, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2");
  const ConformalReport conformal = conformal_factor(z);
  if (conformal.verdict == Verdict::Unknown)
    throw Error(ErrorKind::Indeterminate, "cannot decide whether Z is conformal");
  if (conformal.verdict == Verdict::Neither)
    throw Error(ErrorKind::InvalidInput, "Z is neither an isometry nor conformal");

  // powers[i][k] = ad_Z^k X_(i+1)
  std::array<std::vector<Components>, 2> powers;
  for (int i = 0; i < 2; ++i) {
    powers[i].push_back(unit(i + 1));
    for (int k = 1; k <= n; ++k) {
      powers[i].push_back(z.ad(powers[i].back()));
      require_horizontal(powers[i].back(), "ad_Z^" + std::to_string(k) + " X" + std::to_string(i + 1));
    }
  }
  BinomialReport r;
  std::vector<Expr> corrected;
  for (auto [i, j] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    Expr sum;
    for (int k = 0; k <= n; ++k)
      sum += binomial(n, k) * metric(powers[i][static_cast<std::size_t>(k)], powers[j][static_cast<std::size_t>(n - k)]);
    Expr expected = metric(unit(i + 1), unit(j + 1));
    for (int step = 0; step < n; ++step) expected = z.act(expected) - conformal.mu * expected;
    r.sums.push_back(sum);
    corrected.push_back(sum - expected);
  }
  r.vanishing = make_check("binomial sums vanish", r.sums);
  r.corrected = make_check("binomial sums equal (Z - mu)^n g", corrected);
  return r;
}

BinomialReport binomial_identity_check(const VectorField& Z, const Frame& frame, const Chart& chart, int n) {
  const ContactApparatus app = build_apparatus(frame, chart);
  return binomial_identity_check(AdjointData::coordinate(Z, frame, app, chart), n);
}

// ------------------------------------------------------- fiber polynomials

void FiberPolynomial::add_term(const Exponent& e, const Expr& c) {
  if (c.is_literal_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_literal_zero()) terms_.erase(it);
}

FiberPolynomial FiberPolynomial::constant(const Expr& c) {
  FiberPolynomial f;
  f.add_term({0, 0, 0}, c);
  return f;
}

FiberPolynomial FiberPolynomial::variable(int i) {
  FiberPolynomial f;
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  f.add_term(e, Expr(1));
  return f;
}

FiberPolynomial FiberPolynomial::linear(const VectorField& X) {
  FiberPolynomial f;
  for (int k = 0; k < 3; ++k) f = f + X[k] * variable(k);
  return f;
}

Expr FiberPolynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Expr() : it->second;
}

int FiberPolynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

Truth FiberPolynomial::is_zero() const {
  Truth t = Truth::True;
  for (const auto& [e, c] : terms_) t = truth_and(t, c.is_zero());
  return t;
}

FiberPolynomial FiberPolynomial::operator-() const { return Expr(-1) * *this; }

FiberPolynomial operator+(const FiberPolynomial& a, const FiberPolynomial& b) {
  FiberPolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

FiberPolynomial operator-(const FiberPolynomial& a, const FiberPolynomial& b) { return a + (-b); }

FiberPolynomial operator*(const FiberPolynomial& a, const FiberPolynomial& b) {
  FiberPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

FiberPolynomial operator*(const Expr& c, const FiberPolynomial& a) {
  FiberPolynomial r;
  for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
  return r;
}

FiberPolynomial FiberPolynomial::fiber_derivative(int i) const {
  FiberPolynomial r;
  const auto k = static_cast<std::size_t>(i);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent lowered = e;
    --lowered[k];
    r.add_term(lowered, Expr(static_cast<long>(e[k])) * c);
  }
  return r;
}

FiberPolynomial FiberPolynomial::base_derivative(int i, const Chart& chart) const {
  FiberPolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(e, chart.partial(c, i));
  return r;
}

FiberPolynomial FiberPolynomial::substitute(const std::array<FiberPolynomial, 3>& images) const {
  FiberPolynomial r;
  for (const auto& [e, c] : terms_) {
    FiberPolynomial term = constant(c);
    for (std::size_t i = 0; i < 3; ++i)
      for (int p = 0; p < e[i]; ++p) term = term * images[i];
    r = r + term;
  }
  return r;
}

std::string FiberPolynomial::str(const std::array<std::string, 3>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = c.str();
    bool negative = false;
    if (!coef.empty() && coef[0] == '-' && coef.find_first_of(" ", 1) == std::string::npos) {
      negative = true;
      coef.erase(0, 1);
    }
    if (coef.find(' ') != std::string::npos) coef = "(" + coef + ")";
    std::string term = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += negative ? " - " + term : " + " + term;
  }
  return out;
}

FiberPolynomial poisson_bracket(const FiberPolynomial& F, const FiberPolynomial& G, const Chart& chart) {
  FiberPolynomial r;
  for (int k = 0; k < 3; ++k)
    r = r + F.fiber_derivative(k) * G.base_derivative(k, chart) - F.base_derivative(k, chart) * G.fiber_derivative(k);
  return r;
}

FiberPolynomial to_frame_momenta(const FiberPolynomial& F, const ContactApparatus& app) {
  std::array<FiberPolynomial, 3> images;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      images[static_cast<std::size_t>(k)] =
          images[static_cast<std::size_t>(k)] +
          app.coframe[static_cast<std::size_t>(i)].component(k) * FiberPolynomial::variable(i);
  return F.substitute(images);
}

Ala1Report lemma_ala1_check(const Frame& frame, const Chart& chart) {
  const ContactApparatus app = build_apparatus(frame, chart);
  const StructureFunctions sf = structure_functions(frame, app, chart);
  const FiberPolynomial h0 = FiberPolynomial::linear(app.X0);
  const FiberPolynomial h1 = FiberPolynomial::linear(frame.X1);
  const FiberPolynomial h2 = FiberPolynomial::linear(frame.X2);
  const Expr half = Expr::rational(1, 2);
  const FiberPolynomial h = (-half) * (h1 * h1) + half * (h2 * h2);

  Ala1Report r;
  r.bracket = to_frame_momenta(poisson_bracket(h, h0, chart), app);
  const FiberPolynomial f1 = FiberPolynomial::variable(1);
  const FiberPolynomial f2 = FiberPolynomial::variable(2);
  r.expected = (-sf.c011) * (f1 * f1) + (sf.c021 - sf.c012) * (f1 * f2) + sf.c022 * (f2 * f2);
  r.residual = r.bracket - r.expected;
  std::vector<Expr> residuals;
  for (const auto& [e, c] : r.residual.terms()) residuals.push_back(c);
  r.check = make_check("{h, h0} in frame momenta", residuals);
  return r;
}

}  // namespace sublorentz
