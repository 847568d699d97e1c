#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sublorentz {

using Rational = mpq_class;

class Expr;

/// A polynomial indeterminate: either a named symbol (coordinate or
/// parameter) or a transcendental atom exp/sinh/cosh/log applied to an Expr.
/// Generators are ordered by their rendered key, which fixes the monomial
/// order used everywhere.
class Generator {
 public:
  enum class Kind : std::uint8_t { Symbol, Exp, Sinh, Cosh, Log };

  static Generator symbol(std::string name);
  /// Raw atom; no evaluation rules are applied here (see Expr::exp etc.).
  static Generator atom(Kind kind, const Expr& argument);

  Kind kind() const noexcept { return node_->kind; }
  bool is_symbol() const noexcept { return node_->kind == Kind::Symbol; }
  const std::string& key() const noexcept { return node_->key; }
  const Expr& argument() const;

  friend bool operator==(const Generator& a, const Generator& b) noexcept {
    return a.node_ == b.node_ || a.node_->key == b.node_->key;
  }
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const int c = a.node_->key.compare(b.node_->key);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Node {
    Kind kind;
    std::string key;
    std::shared_ptr<const Expr> argument;
  };
  explicit Generator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Power product of generators, factors sorted ascending by generator.
struct Monomial {
  struct Factor {
    Generator gen;
    int exp;
  };
  std::vector<Factor> factors;

  bool is_one() const noexcept { return factors.empty(); }
  int degree_in(const Generator& g) const noexcept;
  int total_degree() const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Quotient if `other` divides this monomial.
  std::optional<Monomial> divide(const Monomial& other) const;
  Monomial without(const Generator& g) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;
};

/// Lexicographic comparison: the smaller generator key is the more
/// significant variable. Compatible with multiplication.
int compare(const Monomial& a, const Monomial& b) noexcept;

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted by descending monomial order with no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}
  static Poly generator(const Generator& g, int exp = 1);
  static Poly from_terms(std::vector<Term> terms);  // sorts and combines
  /// Caller guarantees strictly descending monomials and nonzero coefficients.
  static Poly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  const Term& leading() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned n) const;

  int degree(const Generator& g) const noexcept;
  /// Coefficient of g^k with g removed.
  Poly coefficient(const Generator& g, int k) const;
  std::vector<Generator> generators() const;
  bool contains(const Generator& g) const noexcept;

  /// Exact quotient, or nullopt when `d` does not divide this polynomial.
  std::optional<Poly> divide_exact(const Poly& d) const;
  /// Formal partial derivative with respect to a generator.
  Poly partial(const Generator& g) const;
  /// Scale so that the leading coefficient is 1.
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor (1 when coprime, 0 only for gcd(0, 0)).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace sublorentz
