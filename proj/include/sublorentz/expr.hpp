#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sublorentz/error.hpp"
#include "sublorentz/poly.hpp"

namespace sublorentz {

/// Exact scalar: a reduced fraction of polynomials over the rationals in
/// symbols and transcendental atoms.
///
/// Every Expr is stored in normal form, so structural equality is semantic
/// equality on the supported domain:
///  - the denominator is monic and free of cosh atoms (cosh terms are moved
///    to the numerator by multiplying with the conjugate),
///  - cosh(a)^k with k >= 2 is rewritten using cosh(a)^2 = 1 + sinh(a)^2,
///  - numerator and denominator are coprime.
class Expr {
 public:
  Expr() = default;
  Expr(long value) : num_(Rational(value)), den_(Rational(1)) {}  // NOLINT: implicit by design of the scalar type
  Expr(int value) : Expr(static_cast<long>(value)) {}                // NOLINT
  explicit Expr(const Rational& value);
  static Expr rational(long numerator, long denominator);
  static Expr symbol(std::string name);
  /// Normalizes num/den; throws DivisionByZero when den is zero.
  static Expr fraction(Poly num, Poly den);

  static Expr exp(const Expr& a);
  static Expr log(const Expr& a);
  static Expr sinh(const Expr& a);
  static Expr cosh(const Expr& a);

  const Poly& numerator_poly() const noexcept { return num_; }
  const Poly& denominator_poly() const noexcept { return den_; }
  Expr numerator() const;
  Expr denominator() const;

  Expr operator-() const;
  Expr add(const Expr& o) const;
  Expr mul(const Expr& o) const;
  Expr div(const Expr& o) const;
  friend Expr operator+(const Expr& a, const Expr& b) { return a.add(b); }
  friend Expr operator-(const Expr& a, const Expr& b) { return a.add(-b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return a.mul(b); }
  friend Expr operator/(const Expr& a, const Expr& b) { return a.div(b); }
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr& operator/=(const Expr& o) { return *this = *this / o; }
  Expr pow(int n) const;

  /// True iff the normal form is 0; False when the normal form is a nonzero
  /// rational function without transcendental atoms; Unknown otherwise.
  Truth is_zero() const;
  bool is_literal_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return denominator_poly().is_constant(); }
  std::optional<Rational> as_rational() const;
  bool has_atoms() const;
  /// Names of all symbols, including those inside atom arguments.
  std::vector<std::string> free_symbols() const;
  bool depends_on(std::string_view name) const;

  /// Partial derivative with respect to a symbol (any other symbol is held
  /// constant); chain rule through atoms.
  Expr diff(std::string_view name) const;
  /// Simultaneous substitution of symbols.
  Expr subs(const std::map<std::string, Expr, std::less<>>& bindings) const;

  /// Deterministic plain rendering, parseable back to the same Expr.
  std::string str() const;

  friend bool operator==(const Expr& a, const Expr& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_{1L};
};

/// Canonical form. Exprs are always canonical, so this is the identity; kept
/// as the named entry point of the kernel.
inline Expr simplify(const Expr& e) { return e; }
inline Truth is_zero(const Expr& e) { return e.is_zero(); }

/// Deterministic rendering of a polynomial (used for generator keys).
std::string render_poly(const Poly& p);

}  // namespace sublorentz
