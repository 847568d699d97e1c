#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sublorentz/invariants.hpp"

namespace sublorentz {

/// How a candidate field Z acts on the frame: Z(f) on scalars and ad_Z on
/// fields written in (X0, X1, X2) components.
struct AdjointData {
  std::function<Expr(const Expr&)> act;
  std::function<std::array<Expr, 3>(const std::array<Expr, 3>&)> ad;

  static AdjointData coordinate(const VectorField& Z, const Frame& frame, const ContactApparatus& app,
                                const Chart& chart);
  /// Left-invariant Z = z0 X0 + z1 X1 + z2 X2 with constant z.
  static AdjointData constant(const std::array<Expr, 3>& z, const StructureFunctions& sf);
};

/// nu0([Z,X1]) = nu0([Z,X2]) = 0.
Truth preserves_distribution(const AdjointData& z);
Truth preserves_distribution(const VectorField& Z, const Frame& frame, const Chart& chart);

/// Components of the l-th restricted Lie derivative of g on (X1, X2), with
/// g = diag(-1, 1). DistributionNotPreserved unless ad_Z keeps H;
/// Indeterminate when that cannot be decided.
Matrix2 restricted_lie_derivative(const AdjointData& z, int order = 1);
Matrix2 restricted_lie_derivative(const VectorField& Z, const Frame& frame, const Chart& chart, int order = 1);

enum class Verdict { Isometry, Conformal, Neither, Unknown };
std::string to_string(Verdict v);

struct ConformalReport {
  Verdict verdict = Verdict::Unknown;
  Expr mu;  ///< meaningful for Isometry (0) and Conformal
  Matrix2 lie_derivative;
};

ConformalReport conformal_factor(const AdjointData& z);
ConformalReport conformal_factor(const VectorField& Z, const Frame& frame, const Chart& chart);

struct BinomialReport {
  /// sum_k C(n,k) g(ad^k X, ad^(n-k) Y) for (X1,X1), (X1,X2), (X2,X2).
  std::vector<Expr> sums;
  /// The sums tested against 0.
  Check vanishing;
  /// The sums tested against (Z - mu)^n g(X,Y), which is what the
  /// conformal condition implies for frame fields.
  Check corrected;
};

/// Requires Z to be an isometry or conformal (InvalidInput otherwise) and
/// n >= 2. DistributionNotPreserved if some ad_Z^k X_i leaves H.
BinomialReport binomial_identity_check(const AdjointData& z, int n);
BinomialReport binomial_identity_check(const VectorField& Z, const Frame& frame, const Chart& chart, int n);

/// Polynomial in three fiber variables (canonical momenta p_x, p_y, p_z, or
/// frame momenta h0, h1, h2) with Expr coefficients.
class FiberPolynomial {
 public:
  using Exponent = std::array<int, 3>;

  FiberPolynomial() = default;
  static FiberPolynomial constant(const Expr& c);
  static FiberPolynomial variable(int i);
  /// h_X = sum_k X^k p_k.
  static FiberPolynomial linear(const VectorField& X);

  const std::map<Exponent, Expr>& terms() const noexcept { return terms_; }
  Expr coefficient(const Exponent& e) const;
  int degree() const;
  Truth is_zero() const;

  FiberPolynomial operator-() const;
  friend FiberPolynomial operator+(const FiberPolynomial& a, const FiberPolynomial& b);
  friend FiberPolynomial operator-(const FiberPolynomial& a, const FiberPolynomial& b);
  friend FiberPolynomial operator*(const FiberPolynomial& a, const FiberPolynomial& b);
  friend FiberPolynomial operator*(const Expr& c, const FiberPolynomial& a);

  /// Derivative in the fiber variable i.
  FiberPolynomial fiber_derivative(int i) const;
  /// Coefficient-wise partial derivative along chart coordinate i.
  FiberPolynomial base_derivative(int i, const Chart& chart) const;
  /// Replace each fiber variable i by the polynomial images[i].
  FiberPolynomial substitute(const std::array<FiberPolynomial, 3>& images) const;

  std::string str(const std::array<std::string, 3>& names) const;

  friend bool operator==(const FiberPolynomial&, const FiberPolynomial&) = default;

 private:
  void add_term(const Exponent& e, const Expr& c);
  std::map<Exponent, Expr> terms_;
};

/// {F,G} = sum_k dF/dp_k dG/dq_k - dF/dq_k dG/dp_k, so that
/// {h_X, h_Y} = h_[X,Y].
FiberPolynomial poisson_bracket(const FiberPolynomial& F, const FiberPolynomial& G, const Chart& chart);

/// Rewrites a polynomial in canonical momenta in the frame momenta
/// (h0, h1, h2) through p_k = sum_i nu_i^k h_i.
FiberPolynomial to_frame_momenta(const FiberPolynomial& F, const ContactApparatus& app);

struct Ala1Report {
  FiberPolynomial bracket;   ///< {h, h0} in frame momenta
  FiberPolynomial expected;  ///< -c011 h1^2 + (c021 - c012) h1 h2 + c022 h2^2
  FiberPolynomial residual;
  Check check;
};

/// {h, h0} with h = -h1^2/2 + h2^2/2 compared with the quadratic form built
/// from the structure functions.
Ala1Report lemma_ala1_check(const Frame& frame, const Chart& chart);

}  // namespace sublorentz
