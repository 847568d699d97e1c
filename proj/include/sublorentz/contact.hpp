#pragma once

#include <string>
#include <vector>

#include "sublorentz/frame.hpp"

namespace sublorentz {

/// Tri-state outcome of one named identity, with the residual that was
/// tested for zero.
struct Check {
  std::string name;
  Truth status = Truth::True;
  std::vector<Expr> residuals;
};

Truth all_zero(const std::vector<Expr>& residuals);
Check make_check(std::string name, std::vector<Expr> residuals);
Truth combined(const std::vector<Check>& checks);

struct ContactApparatus {
  DifferentialForm omega{1};
  VectorField X0;
  std::array<DifferentialForm, 3> coframe{DifferentialForm(1), DifferentialForm(1), DifferentialForm(1)};
  /// Expressions whose vanishing sets are excluded from the domain:
  /// denominators met while building the apparatus and the contact locus.
  std::vector<Expr> excluded;
};

/// det[X1 | X2 | [X1,X2]] with a positive leading coefficient; its zero set
/// is where the distribution fails to be contact.
Expr contact_locus(const Frame& frame, const Chart& chart);

/// The 1-form with omega(X1) = omega(X2) = 0 and d omega(X1,X2) = 1.
/// DegenerateFrame when X1, X2, [X1,X2] are dependent; IndeterminateDomain
/// when that cannot be decided.
DifferentialForm normalized_contact_form(const Frame& frame, const Chart& chart);

/// Unique solution of omega(X0) = 1, d omega(X0, X1) = d omega(X0, X2) = 0.
VectorField reeb_field(const DifferentialForm& omega, const Frame& frame, const Chart& chart);

/// Rows of the inverse of the component matrix [X0 | X1 | X2].
std::array<DifferentialForm, 3> dual_coframe(const VectorField& X0, const VectorField& X1, const VectorField& X2);

ContactApparatus build_apparatus(const Frame& frame, const Chart& chart);

/// The seven defining identities of an apparatus.
std::vector<Check> apparatus_checks(const ContactApparatus& app, const Frame& frame, const Chart& chart);

/// d nu0 - nu1^nu2 as a 2-form (zero for a valid apparatus).
DifferentialForm coframe_structure_residual(const ContactApparatus& app, const Chart& chart);

/// Coefficients of v on (X0, X1, X2): v = sum nu_i(v) X_i.
std::array<Expr, 3> frame_components(const ContactApparatus& app, const VectorField& v);

}  // namespace sublorentz
