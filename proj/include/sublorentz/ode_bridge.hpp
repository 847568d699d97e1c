#pragma once

#include <string_view>
#include <vector>

#include "sublorentz/invariants.hpp"

namespace sublorentz {

/// Second-order ODE u'' = Q(x, u, p) on the chart (x, u, p).
struct OdeStructure {
  Chart chart;
  Expr Q;
  /// w1 = du - p dx, w2 = dp - Q dx, w3 = dx
  std::array<DifferentialForm, 3> forms{DifferentialForm(1), DifferentialForm(1), DifferentialForm(1)};
  VectorField N1;  ///< d/dx + p d/du + Q d/dp
  VectorField N2;  ///< d/dp
  /// Representative of the conformal class: X1 = (N1 + N2)/2, X2 = (N1 - N2)/2.
  Frame frame;
};

/// The chart (x, u, p) used for ODE input.
Chart ode_chart();

OdeStructure build_from_ode(const Expr& Q);
OdeStructure build_from_ode(std::string_view Q);

/// X1 + X2 = N1 spans ker w1 ^ ker w2, X1 - X2 = N2 spans ker w1 ^ ker w3,
/// both are null for g, and H = ker w1 contains X1 and X2.
std::vector<Check> verify_null_bundles(const OdeStructure& s);

}  // namespace sublorentz
