#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sublorentz/invariants.hpp"

namespace sublorentz {

using ExprMatrix = std::vector<std::vector<Expr>>;

/// Real Lie algebra given by structure constants [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
 public:
  struct Bracket {
    int i, j;
    std::vector<std::pair<int, Expr>> terms;  ///< (k, coefficient)
  };

  /// Zero algebra with the given basis labels.
  explicit LieAlgebra(std::vector<std::string> labels);
  /// Sets [e_i, e_j] (and [e_j, e_i] = -[e_i, e_j]).
  static LieAlgebra from_brackets(std::vector<std::string> labels, const std::vector<Bracket>& brackets);

  int dimension() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  int index_of(std::string_view label) const;

  const Expr& c(int i, int j, int k) const { return c_[at(i, j, k)]; }
  void set_bracket(int i, int j, const std::vector<Expr>& value);
  std::vector<Expr> bracket(int i, int j) const;
  std::vector<Expr> bracket(const std::vector<Expr>& x, const std::vector<Expr>& y) const;
  /// Matrix of ad_{e_i}: column j holds [e_i, e_j].
  ExprMatrix ad(int i) const;

  /// Non-zero brackets [e_i, e_j] with i < j, rendered as "[a, b] = ...".
  std::vector<std::string> table() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t at(int i, int j, int k) const;
  std::vector<std::string> labels_;
  std::vector<Expr> c_;
};

/// Jacobi residuals for i < j < k and every output index; all zero for a
/// Lie algebra.
std::vector<Expr> jacobi_residuals(const LieAlgebra& L);
Check jacobi_check(const LieAlgebra& L);

struct Inertia {
  int positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

Expr matrix_determinant(ExprMatrix m);
/// Exact inertia of a symmetric rational matrix by congruence; nullopt when
/// some entry is not a rational constant.
std::optional<Inertia> inertia(const ExprMatrix& m);

struct KillingData {
  ExprMatrix K;
  Expr determinant;
  std::optional<Inertia> signature;
};

KillingData killing_form(const LieAlgebra& L);
/// K([x,y],z) + K(y,[x,z]) over all basis triples.
Check killing_ad_invariance(const LieAlgebra& L, const ExprMatrix& K);

/// T given by its matrix (column j = T(e_j)). Checks T[x,y] = [Tx,Ty] and
/// K(Tx,Ty) = K(x,y) on basis pairs.
struct AutomorphismReport {
  Check homomorphism;
  Check killing_preserved;
};
AutomorphismReport automorphism_check(const LieAlgebra& L, const ExprMatrix& T);

/// Invariants of a left-invariant structure: x1, x2, x0 are the indices of
/// the basis vectors playing X1, X2, X0. BracketPatternViolation unless
/// [X1,X0], [X2,X0] are horizontal and [X2,X1] has X0-coefficient 1;
/// TraceViolation unless c011 + c022 = 0; InvalidInput for dimension != 3.
StructureFunctions marked_structure_functions(const LieAlgebra& L, int x1, int x2, int x0);
Invariants constant_mode_invariants(const LieAlgebra& L, int x1, int x2, int x0);

/// Equations "dA = 2*B^C - (1/2)*D^A + k*C^B", one per basis 1-form, over
/// the given labels. Coefficients may involve the parameters only
/// (NonConstantCoefficients otherwise). The dual algebra has
/// c(i,j,k) = -(coefficient of w^i ^ w^j in dw^k).
LieAlgebra dualize_structure_equations(const std::vector<std::string>& labels,
                                       const std::vector<std::string>& equations,
                                       const std::vector<std::string>& parameters = {});

/// heisenberg, sl2_e, sl2_n, sl2_f, isometry4, conformal8. The sl2 entries
/// use the parameter "k" unless `kappa` is given. UnknownName otherwise.
LieAlgebra catalog_algebra(const std::string& name, const std::optional<Expr>& kappa = std::nullopt);
const std::vector<std::string>& catalog_algebra_names();

/// Structure equations used by the catalog.
const std::vector<std::string>& conformal_structure_equations();
const std::vector<std::string>& conformal_labels();
const std::vector<std::string>& isometry_structure_equations();
const std::vector<std::string>& isometry_labels();

/// Killing matrix of the conformal algebra as printed in the literature,
/// in the order of conformal_labels().
ExprMatrix printed_conformal_killing_matrix();

struct Sl3Report {
  bool dimension_eight = false;
  Truth jacobi = Truth::Unknown;
  Truth nondegenerate = Truth::Unknown;
  std::optional<Inertia> inertia;
  bool holds = false;
};

/// dim 8, Jacobi, det K != 0 and inertia (5,3,0).
Sl3Report is_sl3(const LieAlgebra& L);

/// Matrix of the map f0 -> f2, f1 -> -f1, f2 -> f0 on sl2_f.
ExprMatrix sl2_f_swap();

}  // namespace sublorentz
