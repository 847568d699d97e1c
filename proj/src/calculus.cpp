#include "sublorentz/calculus.hpp"

#include <bit>

namespace sublorentz {

namespace {

std::vector<int> indices_of(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; i < 3; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

// Sign of the permutation sorting (indices of a) followed by (indices of b).
int shuffle_sign(unsigned a, unsigned b) {
  int inversions = 0;
  for (int i : indices_of(a))
    for (int j : indices_of(b))
      if (i > j) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Expr small_det(const std::vector<std::vector<Expr>>& m) {
  switch (m.size()) {
    case 0: return Expr(1);
    case 1: return m[0][0];
    case 2: return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    default:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
}

}  // namespace

VectorField VectorField::coordinate(int i) {
  VectorField v;
  v[i] = Expr(1);
  return v;
}

VectorField VectorField::operator-() const {
  VectorField r;
  for (int i = 0; i < 3; ++i) r[i] = -(*this)[i];
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField r;
  for (int i = 0; i < 3; ++i) r[i] = a[i] + b[i];
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  VectorField r;
  for (int i = 0; i < 3; ++i) r[i] = a[i] - b[i];
  return r;
}

VectorField operator*(const Expr& f, const VectorField& v) {
  VectorField r;
  for (int i = 0; i < 3; ++i) r[i] = f * v[i];
  return r;
}

Truth VectorField::is_zero() const {
  Truth t = Truth::True;
  for (const auto& e : c) t = truth_and(t, e.is_zero());
  return t;
}

Expr determinant(const Matrix3& m) {
  std::vector<std::vector<Expr>> rows(3);
  for (std::size_t i = 0; i < 3; ++i) rows[i].assign(m[i].begin(), m[i].end());
  return small_det(rows);
}

Matrix3 inverse(const Matrix3& m) {
  const Expr det = determinant(m);
  if (det.is_literal_zero()) throw Error(ErrorKind::SingularMatrix, "matrix determinant is 0");
  Matrix3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of entry (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const Expr cof = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
      inv[i][j] = cof / det;
    }
  return inv;
}

// ---------------------------------------------------------------- forms

DifferentialForm::DifferentialForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > 3) throw Error(ErrorKind::InvalidInput, "form degree must be 0..3");
}

DifferentialForm DifferentialForm::scalar(Expr f) {
  DifferentialForm r(0);
  r.coeffs_[0] = std::move(f);
  return r;
}

DifferentialForm DifferentialForm::one_form(const std::array<Expr, 3>& components) {
  DifferentialForm r(1);
  for (int i = 0; i < 3; ++i) r.coeffs_[1u << i] = components[static_cast<std::size_t>(i)];
  return r;
}

DifferentialForm DifferentialForm::basis(int i) {
  DifferentialForm r(1);
  r.coeffs_[1u << i] = Expr(1);
  return r;
}

void DifferentialForm::set_mask(unsigned mask, Expr value) {
  if (std::popcount(mask) != degree_ || mask > 7)
    throw Error(ErrorKind::InvalidInput, "basis element does not match the form degree");
  coeffs_[mask] = std::move(value);
}

const Expr& DifferentialForm::component(int i) const {
  if (degree_ != 1) throw Error(ErrorKind::ArityMismatch, "component(i) needs a 1-form");
  return coeffs_[1u << i];
}

Expr DifferentialForm::component(int i, int j) const {
  if (degree_ != 2) throw Error(ErrorKind::ArityMismatch, "component(i, j) needs a 2-form");
  if (i == j) return Expr();
  const Expr& v = coeffs_[(1u << i) | (1u << j)];
  return i < j ? v : -v;
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm r(degree_);
  for (unsigned m = 0; m < 8; ++m) r.coeffs_[m] = -coeffs_[m];
  return r;
}

DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.degree_ != b.degree_) throw Error(ErrorKind::ArityMismatch, "adding forms of different degree");
  DifferentialForm r(a.degree_);
  for (unsigned m = 0; m < 8; ++m) r.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
  return r;
}

DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) { return a + (-b); }

DifferentialForm operator*(const Expr& f, const DifferentialForm& a) {
  DifferentialForm r(a.degree_);
  for (unsigned m = 0; m < 8; ++m) r.coeffs_[m] = f * a.coeffs_[m];
  return r;
}

Truth DifferentialForm::is_zero() const {
  Truth t = Truth::True;
  for (const auto& e : coeffs_) t = truth_and(t, e.is_zero());
  return t;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  const int degree = a.degree() + b.degree();
  if (degree > 3) throw Error(ErrorKind::InvalidInput, "wedge product of degree above 3");
  DifferentialForm r(degree);
  for (unsigned ma = 0; ma < 8; ++ma) {
    if (std::popcount(ma) != a.degree() || a.at_mask(ma).is_literal_zero()) continue;
    for (unsigned mb = 0; mb < 8; ++mb) {
      if (std::popcount(mb) != b.degree() || (ma & mb) || b.at_mask(mb).is_literal_zero()) continue;
      const Expr term = a.at_mask(ma) * b.at_mask(mb);
      const unsigned m = ma | mb;
      r.set_mask(m, shuffle_sign(ma, mb) > 0 ? r.at_mask(m) + term : r.at_mask(m) - term);
    }
  }
  return r;
}

Expr wedge_eval(const DifferentialForm& form, const std::vector<VectorField>& fields) {
  if (static_cast<int>(fields.size()) != form.degree())
    throw Error(ErrorKind::ArityMismatch, "a " + std::to_string(form.degree()) + "-form needs " +
                                              std::to_string(form.degree()) + " fields, got " +
                                              std::to_string(fields.size()));
  Expr total;
  for (unsigned m = 0; m < 8; ++m) {
    if (std::popcount(m) != form.degree() || form.at_mask(m).is_literal_zero()) continue;
    const auto idx = indices_of(m);
    std::vector<std::vector<Expr>> mat(idx.size(), std::vector<Expr>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t s = 0; s < idx.size(); ++s) mat[r][s] = fields[s][idx[r]];
    total += form.at_mask(m) * small_det(mat);
  }
  return total;
}

Expr pairing(const DifferentialForm& form, const VectorField& v) { return wedge_eval(form, {v}); }

// ----------------------------------------------------------- frame calculus

FrameCalculus::FrameCalculus(Derivation derive, std::array<DifferentialForm, 3> basis_differentials)
    : derive_(std::move(derive)), dbasis_(std::move(basis_differentials)) {
  for (const auto& f : dbasis_)
    if (f.degree() != 2) throw Error(ErrorKind::InvalidInput, "basis differentials must be 2-forms");
}

FrameCalculus FrameCalculus::coordinate(const Chart& chart) {
  return FrameCalculus([chart](int i, const Expr& f) { return chart.partial(f, i); },
                       {DifferentialForm(2), DifferentialForm(2), DifferentialForm(2)});
}

FrameCalculus FrameCalculus::constant(const std::array<std::array<std::array<Expr, 3>, 3>, 3>& c) {
  std::array<DifferentialForm, 3> d{DifferentialForm(2), DifferentialForm(2), DifferentialForm(2)};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) d[k].set_mask((1u << i) | (1u << j), -c[i][j][k]);
  return FrameCalculus([](int, const Expr&) { return Expr(); }, d);
}

DifferentialForm FrameCalculus::d(const DifferentialForm& form) const {
  if (form.degree() > 2) throw Error(ErrorKind::InvalidInput, "exterior derivative of a 3-form");
  DifferentialForm r(form.degree() + 1);
  for (unsigned m = 0; m < 8; ++m) {
    if (std::popcount(m) != form.degree()) continue;
    const Expr& a = form.at_mask(m);
    if (a.is_literal_zero()) continue;
    DifferentialForm basis_m = DifferentialForm::scalar(Expr(1));
    for (int i : indices_of(m)) basis_m = wedge(basis_m, DifferentialForm::basis(i));
    std::array<Expr, 3> da;
    for (int i = 0; i < 3; ++i) da[static_cast<std::size_t>(i)] = derive_(i, a);
    r = r + wedge(DifferentialForm::one_form(da), basis_m);
    const auto idx = indices_of(m);
    if (idx.size() == 1) {
      r = r + a * dbasis_[static_cast<std::size_t>(idx[0])];
    } else if (idx.size() == 2) {
      const auto& e0 = DifferentialForm::basis(idx[0]);
      const auto& e1 = DifferentialForm::basis(idx[1]);
      r = r + a * (wedge(dbasis_[static_cast<std::size_t>(idx[0])], e1) -
                   wedge(e0, dbasis_[static_cast<std::size_t>(idx[1])]));
    }
  }
  return r;
}

Expr apply_field(const VectorField& X, const Expr& f, const Chart& chart) {
  Expr r;
  for (int i = 0; i < 3; ++i)
    if (!X[i].is_literal_zero()) r += X[i] * chart.partial(f, i);
  return r;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y, const Chart& chart) {
  VectorField r;
  for (int k = 0; k < 3; ++k) r[k] = apply_field(X, Y[k], chart) - apply_field(Y, X[k], chart);
  return r;
}

DifferentialForm exterior_derivative(const DifferentialForm& form, const Chart& chart) {
  return FrameCalculus::coordinate(chart).d(form);
}

}  // namespace sublorentz
