#include "sublorentz/lie_algebra.hpp"

#include <algorithm>
#include <regex>

#include "sublorentz/parser.hpp"

namespace sublorentz {

LieAlgebra::LieAlgebra(std::vector<std::string> labels) : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty Lie algebra");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels_[i] == labels_[j]) throw Error(ErrorKind::InvalidInput, "duplicate basis label " + labels_[i]);
  c_.resize(n * n * n);
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels, const std::vector<Bracket>& brackets) {
  LieAlgebra L(std::move(labels));
  for (const auto& b : brackets) {
    std::vector<Expr> v(static_cast<std::size_t>(L.dimension()));
    for (const auto& [k, coef] : b.terms) v.at(static_cast<std::size_t>(k)) += coef;
    L.set_bracket(b.i, b.j, v);
  }
  return L;
}

std::size_t LieAlgebra::at(int i, int j, int k) const {
  const int n = dimension();
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
    throw Error(ErrorKind::InvalidInput, "basis index out of range");
  return static_cast<std::size_t>((i * n + j) * n + k);
}

int LieAlgebra::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::UnknownName, "no basis element '" + std::string(label) + "'");
  return static_cast<int>(it - labels_.begin());
}

void LieAlgebra::set_bracket(int i, int j, const std::vector<Expr>& value) {
  if (static_cast<int>(value.size()) != dimension()) throw Error(ErrorKind::ArityMismatch, "bracket has wrong length");
  if (i == j) {
    for (const auto& e : value)
      if (!e.is_literal_zero()) throw Error(ErrorKind::InvalidInput, "[e, e] must vanish");
    return;
  }
  for (int k = 0; k < dimension(); ++k) {
    c_[at(i, j, k)] = value[static_cast<std::size_t>(k)];
    c_[at(j, i, k)] = -value[static_cast<std::size_t>(k)];
  }
}

std::vector<Expr> LieAlgebra::bracket(int i, int j) const {
  std::vector<Expr> r(static_cast<std::size_t>(dimension()));
  for (int k = 0; k < dimension(); ++k) r[static_cast<std::size_t>(k)] = c(i, j, k);
  return r;
}

std::vector<Expr> LieAlgebra::bracket(const std::vector<Expr>& x, const std::vector<Expr>& y) const {
  const int n = dimension();
  std::vector<Expr> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)].is_literal_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[static_cast<std::size_t>(j)].is_literal_zero()) continue;
      const Expr w = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k)
        if (!c(i, j, k).is_literal_zero()) r[static_cast<std::size_t>(k)] += w * c(i, j, k);
    }
  }
  return r;
}

ExprMatrix LieAlgebra::ad(int i) const {
  const auto n = static_cast<std::size_t>(dimension());
  ExprMatrix m(n, std::vector<Expr>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m[k][j] = c(i, static_cast<int>(j), static_cast<int>(k));
  return m;
}

std::vector<std::string> LieAlgebra::table() const {
  std::vector<std::string> out;
  for (int i = 0; i < dimension(); ++i)
    for (int j = i + 1; j < dimension(); ++j) {
      std::string rhs;
      for (int k = 0; k < dimension(); ++k) {
        const Expr& v = c(i, j, k);
        if (v.is_literal_zero()) continue;
        const std::string& e = labels_[static_cast<std::size_t>(k)];
        std::string s = v.str();
        std::string term;
        bool negative = false;
        if (s == "1") {
          term = e;
        } else if (s == "-1") {
          term = e;
          negative = true;
        } else {
          if (s[0] == '-' && s.find(' ') == std::string::npos) {
            negative = true;
            s.erase(0, 1);
          }
          term = (s.find(' ') != std::string::npos ? "(" + s + ")" : s) + "*" + e;
        }
        if (rhs.empty())
          rhs = negative ? "-" + term : term;
        else
          rhs += (negative ? " - " : " + ") + term;
      }
      if (!rhs.empty()) out.push_back("[" + labels_[static_cast<std::size_t>(i)] + ", " +
                                      labels_[static_cast<std::size_t>(j)] + "] = " + rhs);
    }
  return out;
}

// ----------------------------------------------------------------- checks

std::vector<Expr> jacobi_residuals(const LieAlgebra& L) {
  const int n = L.dimension();
  std::vector<Expr> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Expr r;
          for (int l = 0; l < n; ++l)
            r += L.c(i, j, l) * L.c(l, k, m) + L.c(j, k, l) * L.c(l, i, m) + L.c(k, i, l) * L.c(l, j, m);
          out.push_back(r);
        }
  return out;
}

Check jacobi_check(const LieAlgebra& L) { return make_check("Jacobi identity", jacobi_residuals(L)); }

Expr matrix_determinant(ExprMatrix m) {
  const std::size_t n = m.size();
  Expr det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_literal_zero()) ++pivot;
    if (pivot == n) return Expr();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_literal_zero()) continue;
      const Expr f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<Inertia> inertia(const ExprMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto q = m[i][j].as_rational();
      if (!q) return std::nullopt;
      a[i][j] = *q;
    }
  auto add_to = [&](std::size_t target, std::size_t source) {
    for (std::size_t c = 0; c < n; ++c) a[target][c] += a[source][c];
    for (std::size_t r = 0; r < n; ++r) a[r][target] += a[r][source];
  };
  auto swap_index = [&](std::size_t p, std::size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };
  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // No usable diagonal entry: combine two indices with a nonzero coupling.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (a[i][j] != 0) {
            add_to(i, j);
            p = i;
            found = true;
          }
      if (!found) {
        result.zero += static_cast<int>(n - k);
        return result;
      }
    }
    swap_index(k, p);
    const Rational pivot = a[k][k];
    (pivot > 0 ? result.positive : result.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rational f = a[r][k] / pivot;
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      for (std::size_t rr = k; rr < n; ++rr) a[rr][r] = a[r][rr];
    }
  }
  return result;
}

KillingData killing_form(const LieAlgebra& L) {
  const int n = L.dimension();
  KillingData kd;
  kd.K.assign(static_cast<std::size_t>(n), std::vector<Expr>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Expr t;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (L.c(a, j, k).is_literal_zero() || L.c(b, k, j).is_literal_zero()) continue;
          t += L.c(a, j, k) * L.c(b, k, j);
        }
      kd.K[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = t;
      kd.K[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = t;
    }
  kd.determinant = matrix_determinant(kd.K);
  kd.signature = inertia(kd.K);
  return kd;
}

Check killing_ad_invariance(const LieAlgebra& L, const ExprMatrix& K) {
  const int n = L.dimension();
  std::vector<Expr> residuals;
  auto k = [&](int i, int j) { return K[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Expr r;
        for (int m = 0; m < n; ++m) r += L.c(x, y, m) * k(m, z) + L.c(x, z, m) * k(y, m);
        residuals.push_back(r);
      }
  return make_check("Killing form ad-invariance", residuals);
}

AutomorphismReport automorphism_check(const LieAlgebra& L, const ExprMatrix& T) {
  const auto n = static_cast<std::size_t>(L.dimension());
  auto image = [&](const std::vector<Expr>& v) {
    std::vector<Expr> r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i] += T[i][j] * v[j];
    return r;
  };
  auto column = [&](std::size_t j) {
    std::vector<Expr> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = T[i][j];
    return r;
  };
  const ExprMatrix K = killing_form(L).K;
  auto kill = [&](const std::vector<Expr>& x, const std::vector<Expr>& y) {
    Expr s;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += x[i] * K[i][j] * y[j];
    return s;
  };
  std::vector<Expr> hom, kil;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto lhs = image(L.bracket(static_cast<int>(i), static_cast<int>(j)));
      const auto rhs = L.bracket(column(i), column(j));
      for (std::size_t k = 0; k < n; ++k) hom.push_back(lhs[k] - rhs[k]);
      kil.push_back(kill(column(i), column(j)) - K[i][j]);
    }
  return {make_check("T[x,y] = [Tx,Ty]", hom), make_check("K(Tx,Ty) = K(x,y)", kil)};
}

// ------------------------------------------------------- marked structure

StructureFunctions marked_structure_functions(const LieAlgebra& L, int x1, int x2, int x0) {
  if (L.dimension() != 3) throw Error(ErrorKind::InvalidInput, "a marked frame needs a 3-dimensional algebra");
  auto require = [](const Expr& e, const std::string& what) {
    switch (e.is_zero()) {
      case Truth::True: return;
      case Truth::False: throw Error(ErrorKind::BracketPatternViolation, what + " (residual " + e.str() + ")");
      case Truth::Unknown: throw Error(ErrorKind::Indeterminate, "cannot decide " + what);
    }
  };
  if (x1 == x2 || x1 == x0 || x2 == x0) throw Error(ErrorKind::InvalidInput, "marked basis vectors must differ");
  const auto b10 = L.bracket(x1, x0);
  const auto b20 = L.bracket(x2, x0);
  const auto b21 = L.bracket(x2, x1);
  auto at = [](const std::vector<Expr>& v, int i) { return v[static_cast<std::size_t>(i)]; };
  require(at(b10, x0), "[X1,X0] must be horizontal");
  require(at(b20, x0), "[X2,X0] must be horizontal");
  require(at(b21, x0) - Expr(1), "[X2,X1] must have X0-coefficient 1");
  StructureFunctions sf{at(b10, x1), at(b10, x2), at(b20, x1), at(b20, x2), at(b21, x1), at(b21, x2)};
  validate_structure_functions(sf);
  return sf;
}

Invariants constant_mode_invariants(const LieAlgebra& L, int x1, int x2, int x0) {
  return compute_invariants(marked_structure_functions(L, x1, x2, x0));
}

// ------------------------------------------------------------ dualization

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Splits at top-level '+'/'-' that are binary, keeping the sign with the term.
std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> terms;
  std::string current;
  int depth = 0;
  char previous = '\0';
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    const bool binary = depth == 0 && (ch == '+' || ch == '-') && !trim(current).empty() &&
                        std::string("*/^(").find(previous) == std::string::npos;
    if (binary) {
      terms.push_back(trim(current));
      current.clear();
    }
    current += ch;
    if (ch != ' ' && ch != '\t') previous = ch;
  }
  if (!trim(current).empty()) terms.push_back(trim(current));
  return terms;
}

}  // namespace

LieAlgebra dualize_structure_equations(const std::vector<std::string>& labels,
                                       const std::vector<std::string>& equations,
                                       const std::vector<std::string>& parameters) {
  LieAlgebra L(labels);
  const int n = L.dimension();
  if (static_cast<int>(equations.size()) != n)
    throw Error(ErrorKind::ArityMismatch, "need one structure equation per basis form");
  const Chart chart({"#0", "#1", "#2"}, parameters);
  static const std::regex equation_re(R"(^\s*d\s*([A-Za-z_]\w*)\s*=(.*)$)");
  static const std::regex wedge_re(R"(^(.*?)\s*\*?\s*([A-Za-z_]\w*)\s*\^\s*([A-Za-z_]\w*)\s*$)");

  // d[k] = coefficient of w^i ^ w^j (i < j)
  std::vector<std::vector<std::vector<Expr>>> d(
      static_cast<std::size_t>(n),
      std::vector<std::vector<Expr>>(static_cast<std::size_t>(n), std::vector<Expr>(static_cast<std::size_t>(n))));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& eq : equations) {
    std::smatch m;
    if (!std::regex_match(eq, m, equation_re))
      throw Error(ErrorKind::SyntaxError, "expected 'dA = ...' in: " + eq);
    const int k = L.index_of(m[1].str());
    if (seen[static_cast<std::size_t>(k)]) throw Error(ErrorKind::InvalidInput, "d" + m[1].str() + " given twice");
    seen[static_cast<std::size_t>(k)] = true;
    const std::string rhs = trim(m[2].str());
    if (rhs == "0") continue;
    for (std::string term : split_terms(rhs)) {
      std::smatch w;
      if (!std::regex_match(term, w, wedge_re))
        throw Error(ErrorKind::SyntaxError, "expected 'coefficient*A^B' in: " + term);
      std::string coef_text = trim(w[1].str());
      if (coef_text.empty() || coef_text == "+") coef_text = "1";
      if (coef_text == "-") coef_text = "-1";
      if (coef_text.back() == '*') coef_text.pop_back();
      Expr coef;
      try {
        coef = parse_expr(coef_text, chart);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnknownSymbol)
          throw Error(ErrorKind::NonConstantCoefficients, "coefficient '" + coef_text + "' is not constant");
        throw;
      }
      int i = L.index_of(w[2].str());
      int j = L.index_of(w[3].str());
      if (i == j) continue;
      if (i > j) {
        std::swap(i, j);
        coef = -coef;
      }
      auto& slot = d[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      slot += coef;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Expr> v(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k)
        v[static_cast<std::size_t>(k)] =
            -d[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      L.set_bracket(i, j, v);
    }
  return L;
}

// ----------------------------------------------------------------- catalog

const std::vector<std::string>& conformal_labels() {
  static const std::vector<std::string> labels{"T1", "T2", "T3", "P1", "P2", "P3", "P4", "W"};
  return labels;
}

const std::vector<std::string>& conformal_structure_equations() {
  static const std::vector<std::string> eqs{
      "dT1 = P1^T1 + P2^T2 + P3^T3",
      "dT2 = P1^T2 + P2^T1 + P4^T3",
      "dT3 = 2*P1^T3 - T1^T2",
      "dP1 = (1/2)*P4^T1 - (1/2)*P3^T2 - W^T3",
      "dP2 = (3/2)*P4^T2 - (3/2)*P3^T1",
      "dP3 = P3^P1 - P4^P2 - W^T1",
      "dP4 = P4^P1 - P3^P2 - W^T2",
      "dW = 2*W^P1 - P4^P3",
  };
  return eqs;
}

const std::vector<std::string>& isometry_labels() {
  static const std::vector<std::string> labels{"T1", "T2", "T3", "P"};
  return labels;
}

const std::vector<std::string>& isometry_structure_equations() {
  static const std::vector<std::string> eqs{"dT1 = P^T2", "dT2 = P^T1", "dT3 = T2^T1", "dP = k*T2^T1"};
  return eqs;
}

ExprMatrix printed_conformal_killing_matrix() {
  ExprMatrix K(8, std::vector<Expr>(8));
  auto pair = [&](int i, int j, long v) {
    K[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Expr(v);
    K[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = Expr(v);
  };
  pair(0, 6, -7);
  pair(1, 5, 6);
  pair(2, 7, 6);
  pair(3, 3, 12);
  pair(4, 4, 4);
  return K;
}

const std::vector<std::string>& catalog_algebra_names() {
  static const std::vector<std::string> names{"heisenberg", "sl2_e", "sl2_n", "sl2_f", "isometry4", "conformal8"};
  return names;
}

LieAlgebra catalog_algebra(const std::string& name, const std::optional<Expr>& kappa) {
  const Expr k = kappa ? *kappa : Expr::symbol("k");
  using B = LieAlgebra::Bracket;
  if (name == "heisenberg") return LieAlgebra::from_brackets({"e0", "e1", "e2"}, {B{2, 1, {{0, Expr(1)}}}});
  if (name == "sl2_e")
    return LieAlgebra::from_brackets({"e0", "e1", "e2"},
                                     {B{2, 1, {{0, Expr(1)}}}, B{1, 0, {{2, -k}}}, B{2, 0, {{1, -k}}}});
  if (name == "sl2_n")
    return LieAlgebra::from_brackets({"n0", "n1", "n2"},
                                     {B{2, 1, {{0, Expr(1)}}}, B{1, 0, {{1, k}}}, B{2, 0, {{2, -k}}}});
  if (name == "sl2_f")
    return LieAlgebra::from_brackets({"f0", "f1", "f2"},
                                     {B{2, 1, {{0, Expr(1)}}}, B{1, 0, {{2, Expr(1)}}}, B{2, 0, {{1, Expr(1)}}}});
  if (name == "isometry4")
    return LieAlgebra::from_brackets({"e1", "e2", "e3", "e4"},
                                     {B{0, 1, {{2, Expr(1)}}}, B{3, 0, {{1, Expr(1)}}}, B{3, 1, {{0, Expr(1)}}}});
  if (name == "conformal8") return dualize_structure_equations(conformal_labels(), conformal_structure_equations());
  throw Error(ErrorKind::UnknownName, "no catalog algebra named '" + name + "'");
}

Sl3Report is_sl3(const LieAlgebra& L) {
  Sl3Report r;
  r.dimension_eight = L.dimension() == 8;
  r.jacobi = jacobi_check(L).status;
  const KillingData kd = killing_form(L);
  r.nondegenerate = truth_not(kd.determinant.is_zero());
  r.inertia = kd.signature;
  r.holds = r.dimension_eight && r.jacobi == Truth::True && r.nondegenerate == Truth::True && r.inertia &&
            *r.inertia == Inertia{5, 3, 0};
  return r;
}

ExprMatrix sl2_f_swap() {
  // columns: T(f0) = f2, T(f1) = -f1, T(f2) = f0
  return {{Expr(), Expr(), Expr(1)}, {Expr(), Expr(-1), Expr()}, {Expr(1), Expr(), Expr()}};
}

}  // namespace sublorentz
