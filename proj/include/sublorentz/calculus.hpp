#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sublorentz/chart.hpp"
#include "sublorentz/expr.hpp"

namespace sublorentz {

/// Vector field on the chart: components along the three coordinate
/// directions.
struct VectorField {
  std::array<Expr, 3> c;

  static VectorField zero() { return {}; }
  static VectorField coordinate(int i);

  Expr& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const Expr& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Expr& f, const VectorField& v);

  Truth is_zero() const;
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

using Matrix3 = std::array<std::array<Expr, 3>, 3>;

Expr determinant(const Matrix3& m);
/// Exact inverse. SingularMatrix when the determinant normalizes to 0.
Matrix3 inverse(const Matrix3& m);

/// Exterior form of degree 0..3 over a fixed basis of three 1-forms (the
/// coordinate differentials, or a coframe). Coefficients are indexed by the
/// bitmask of the basis elements involved, in increasing index order:
/// mask 0b011 is e0^e1, 0b101 is e0^e2, and so on.
class DifferentialForm {
 public:
  explicit DifferentialForm(int degree = 0);
  static DifferentialForm scalar(Expr f);
  static DifferentialForm one_form(const std::array<Expr, 3>& components);
  /// The basis 1-form e_i.
  static DifferentialForm basis(int i);

  int degree() const noexcept { return degree_; }
  const Expr& at_mask(unsigned mask) const { return coeffs_[mask]; }
  void set_mask(unsigned mask, Expr value);
  /// Coefficient of e_i (degree 1).
  const Expr& component(int i) const;
  /// Antisymmetric coefficient of e_i^e_j (degree 2).
  Expr component(int i, int j) const;

  DifferentialForm operator-() const;
  friend DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b);
  friend DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b);
  friend DifferentialForm operator*(const Expr& f, const DifferentialForm& a);

  Truth is_zero() const;
  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

 private:
  int degree_;
  std::array<Expr, 8> coeffs_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

/// Evaluation on vector fields given by their components in the dual basis.
/// For 2-forms (b^c)(X,Y) = b(X)c(Y) - b(Y)c(X), with no 1/2 factor.
/// ArityMismatch unless fields.size() equals the degree.
Expr wedge_eval(const DifferentialForm& form, const std::vector<VectorField>& fields);
Expr pairing(const DifferentialForm& form, const VectorField& v);

/// Exterior calculus in an arbitrary basis of 1-forms e_0, e_1, e_2 with dual
/// fields E_i: functions differentiate as df = sum E_i(f) e_i and the basis
/// differentials de_k are supplied.
class FrameCalculus {
 public:
  using Derivation = std::function<Expr(int, const Expr&)>;
  FrameCalculus(Derivation derive, std::array<DifferentialForm, 3> basis_differentials);

  /// The coordinate coframe dx, dy, dz of a chart.
  static FrameCalculus coordinate(const Chart& chart);
  /// Left-invariant coframe with [E_i,E_j] = sum_k c[i][j][k] E_k and constant
  /// coefficients, so de_k(E_i,E_j) = -c[i][j][k].
  static FrameCalculus constant(const std::array<std::array<std::array<Expr, 3>, 3>, 3>& c);

  Expr derive(int i, const Expr& f) const { return derive_(i, f); }
  DifferentialForm d(const DifferentialForm& form) const;

 private:
  Derivation derive_;
  std::array<DifferentialForm, 3> dbasis_;
};

Expr apply_field(const VectorField& X, const Expr& f, const Chart& chart);
VectorField lie_bracket(const VectorField& X, const VectorField& Y, const Chart& chart);
DifferentialForm exterior_derivative(const DifferentialForm& form, const Chart& chart);

}  // namespace sublorentz
