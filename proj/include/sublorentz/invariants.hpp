#pragma once

#include <map>
#include <string>
#include <vector>

#include "sublorentz/contact.hpp"

namespace sublorentz {

using Matrix2 = std::array<std::array<Expr, 2>, 2>;

struct Invariants {
  Matrix2 h_tilde;  ///< operator h~ in the basis X1, X2 (columns are images)
  Expr chi;
  Expr kappa;
  Matrix2 h_bar;  ///< symmetric bilinear form h-bar in the basis X1, X2
};

/// Expands [X1,X0], [X2,X0] and [X2,X1] - X0 in the frame.
/// NonHorizontalBracket, BracketPatternViolation, TraceViolation, or
/// Indeterminate when a required zero test is undecidable.
StructureFunctions structure_functions(const Frame& frame, const ContactApparatus& app, const Chart& chart);

/// Brackets of a constant structure in the basis (X0, X1, X2):
/// [E_i, E_j] = sum_k t[i][j][k] E_k.
using BracketTable = std::array<std::array<std::array<Expr, 3>, 3>, 3>;
BracketTable bracket_table(const StructureFunctions& sf);

/// TraceViolation unless c011 + c022 = 0.
void validate_structure_functions(const StructureFunctions& sf);

/// Constant (abstract) structure: the derivative terms of kappa vanish.
Invariants compute_invariants(const StructureFunctions& sf);
Invariants compute_invariants(const StructureFunctions& sf, const Frame& frame, const Chart& chart);

Truth matrix_is_zero(const Matrix2& m);

struct EtaReport {
  DifferentialForm eta{1};
  DifferentialForm residual{2};  ///< d eta - d kappa ^ nu0
  Check stwrdz;                  ///< residual vanishes
  Check oro7;                    ///< both first-order identities
  bool holds = false;
};

/// Requires h~ = 0 (HTildeNonzero otherwise). Builds
/// eta = (kappa + c) nu0 + c121 nu1 - c122 nu2 with c = c021 and checks
/// d eta = d kappa ^ nu0 together with
///   -X1(c) - c c122 + X0(c121) = 0,  X2(c) - c c121 + X0(c122) = 0.
/// Indeterminate when a zero test is undecidable.
EtaReport eta_check(const StructureFunctions& sf, const Expr& kappa, const ContactApparatus& app, const Frame& frame,
                    const Chart& chart);
/// Abstract mode: calculus in the left-invariant coframe.
EtaReport eta_check(const StructureFunctions& sf);

enum class NullDirection { None, XMinus, XPlus };
std::string to_string(NullDirection d);

struct NullKernel {
  NullDirection direction = NullDirection::None;
  std::array<Expr, 2> vector;  ///< coefficients on X1, X2
  std::string reason;
};

/// Kernel direction of h~ when chi = 0 and h~ != 0. Indeterminate on
/// undecidable zero tests.
NullKernel null_kernel_bundle(const StructureFunctions& sf);

/// Y1 = X1 cosh t + X2 sinh t, Y2 = X1 sinh t + X2 cosh t.
Frame hyperbolic_rotate(const Frame& frame, const Expr& theta);
/// X1' = s X1, X2' = s X2.
Frame dilate(const Frame& frame, const Expr& s);

enum class Mode { Coordinate, Abstract };
enum class Label { Heisenberg, SL2Cover, NullKernelCase, Generic, Undecided };
std::string to_string(Label label);

struct Classification {
  Label label = Label::Undecided;
  std::map<std::string, std::string> witness;
  std::string reason;
};

/// h~ = 0 and kappa = 0 -> Heisenberg; h~ = 0 and kappa != 0 -> SL2Cover
/// (both group-level, abstract mode only); chi = 0 and h~ != 0 ->
/// NullKernelCase; otherwise Generic; any undecidable test -> Undecided.
Classification classify(const Invariants& inv, const StructureFunctions& sf, Mode mode);

struct ThetaReport {
  std::vector<Expr> residuals;    ///< X1(t) - c121, X2(t) + c122, X0(t) - (kappa + c)
  StructureFunctions rotated;     ///< structure functions of the rotated frame
  Check normal_form;              ///< [Y1,X0] = -k Y2, [Y2,X0] = -k Y1, [Y2,Y1] = X0
};

/// Requires h~ = 0 (HTildeNonzero). ThetaInvalid, listing the residuals,
/// when theta does not solve X1(t) = c121, X2(t) = -c122.
ThetaReport verify_normalizing_theta(const Frame& frame, const Expr& theta, const Chart& chart);
/// Abstract mode: theta must be constant.
ThetaReport verify_normalizing_theta(const StructureFunctions& sf, const Expr& theta);

/// Structure functions of the frame rotated by a constant angle, computed
/// from the bracket table of a constant structure.
StructureFunctions rotate_constant(const StructureFunctions& sf, const Expr& theta);

/// The six transformation formulas for structure functions under a
/// hyperbolic rotation, as residuals (rotated pipeline minus formula).
Check rotation_formula_check(const Frame& frame, const Expr& theta, const Chart& chart);

/// Matrix of h~ for the rotated frame equals M^-1 h~ M with
/// M = [[cosh t, sinh t], [sinh t, cosh t]]; also chi is unchanged.
Check h_tilde_covariance_check(const Frame& frame, const Expr& theta, const Chart& chart);

/// Rotated kappa minus original kappa.
Check kappa_rotation_check(const Frame& frame, const Expr& theta, const Chart& chart);

/// Covariance of h~ (with chi) and invariance of kappa for a constant
/// structure rotated by a constant angle.
std::vector<Check> constant_rotation_checks(const StructureFunctions& sf, const Expr& theta);

struct DilationReport {
  Frame scaled;
  Invariants original;
  Invariants dilated;
  /// Laws as usually stated: chi' = s^2 chi, kappa' = s^2 kappa, h' = s h,
  /// and every structure function scaling by s.
  std::vector<Check> stated;
  /// Laws that follow from X0' = s^2 X0: c0' = s^2 c0, c12' = s c12,
  /// chi' = s^4 chi, kappa' = s^2 kappa, h' = s^2 h.
  std::vector<Check> derived;
};

DilationReport dilation_checks(const Frame& frame, const Expr& s, const Chart& chart);

}  // namespace sublorentz
