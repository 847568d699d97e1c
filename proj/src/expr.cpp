#include "sublorentz/expr.hpp"

#include <algorithm>
#include <functional>

namespace sublorentz {

namespace {

std::string_view kind_name(Generator::Kind k) {
  switch (k) {
    case Generator::Kind::Exp: return "exp";
    case Generator::Kind::Sinh: return "sinh";
    case Generator::Kind::Cosh: return "cosh";
    case Generator::Kind::Log: return "log";
    case Generator::Kind::Symbol: break;
  }
  return "";
}

bool has_high_cosh_power(const Poly& p) {
  for (const auto& t : p.terms())
    for (const auto& f : t.mono.factors)
      if (f.exp >= 2 && f.gen.kind() == Generator::Kind::Cosh) return true;
  return false;
}

bool contains_cosh(const Poly& p) {
  for (const auto& t : p.terms())
    for (const auto& f : t.mono.factors)
      if (f.gen.kind() == Generator::Kind::Cosh) return true;
  return false;
}

// cosh(a)^k -> cosh(a)^(k mod 2) * (1 + sinh(a)^2)^(k div 2)
Poly reduce_hyperbolic(const Poly& p) {
  if (!has_high_cosh_power(p)) return p;
  std::vector<Poly::Term> out;
  for (const auto& t : p.terms()) {
    Monomial base;
    Poly factor(1);
    for (const auto& f : t.mono.factors) {
      if (f.gen.kind() == Generator::Kind::Cosh && f.exp >= 2) {
        if (f.exp % 2) base.factors.push_back({f.gen, 1});
        const Poly one_plus_sinh2 =
            Poly(1) + Poly::generator(Generator::atom(Generator::Kind::Sinh, f.gen.argument()), 2);
        factor *= one_plus_sinh2.pow(static_cast<unsigned>(f.exp / 2));
      } else {
        base.factors.push_back(f);
      }
    }
    const Poly piece = factor.times_monomial(base, t.coeff);
    out.insert(out.end(), piece.terms().begin(), piece.terms().end());
  }
  return Poly::from_terms(std::move(out));
}

std::optional<Generator> first_cosh(const Poly& p) {
  for (const auto& g : p.generators())
    if (g.kind() == Generator::Kind::Cosh) return g;
  return std::nullopt;
}

Rational poly_content(const Poly& p) {
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  if (!p.is_zero() && p.leading_coeff() < 0) c = -c;
  return c;
}

std::string render_monomial(const Monomial& m) {
  std::string s;
  for (const auto& f : m.factors) {
    if (!s.empty()) s += '*';
    s += f.gen.key();
    if (f.exp != 1) s += '^' + std::to_string(f.exp);
  }
  return s;
}

bool is_single_factor(const Poly& p) {
  return p.terms().size() == 1 && p.leading_coeff() == 1 && p.leading().mono.factors.size() == 1;
}

}  // namespace

// Generator::atom needs the renderer, so it lives here.
Generator Generator::atom(Kind kind, const Expr& argument) {
  std::string key(kind_name(kind));
  key += '(';
  key += argument.str();
  key += ')';
  return Generator(std::make_shared<const Node>(Node{kind, std::move(key), std::make_shared<const Expr>(argument)}));
}

std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const mpz_class num = abs(t.coeff.get_num());
    const mpz_class& den = t.coeff.get_den();
    std::string body;
    if (t.mono.is_one()) {
      body = num.get_str();
    } else {
      body = (num == 1 ? std::string() : num.get_str() + "*") + render_monomial(t.mono);
    }
    if (den != 1) body += "/" + den.get_str();
    if (first) {
      s = negative ? "-" + body : body;
      first = false;
    } else {
      s += negative ? " - " : " + ";
      s += body;
    }
  }
  return s;
}

// ------------------------------------------------------------------ Expr

Expr::Expr(const Rational& value) : num_(value), den_(1L) {}

Expr Expr::rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return Expr(q);
}

Expr Expr::symbol(std::string name) {
  Expr e;
  e.num_ = Poly::generator(Generator::symbol(std::move(name)));
  return e;
}

Expr Expr::fraction(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by an expression equal to 0");
  num = reduce_hyperbolic(num);
  den = reduce_hyperbolic(den);
  // Move cosh atoms out of the denominator: multiply by the conjugate
  // D0 - D1*cosh(a), giving D0^2 - D1^2*(1 + sinh(a)^2).
  while (auto c = first_cosh(den)) {
    const Poly d0 = den.coefficient(*c, 0);
    const Poly d1 = den.coefficient(*c, 1);
    const Poly conj = d0 - d1 * Poly::generator(*c);
    num = reduce_hyperbolic(num * conj);
    den = reduce_hyperbolic(den * conj);
  }
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by an expression equal to 0");
  Expr e;
  if (num.is_zero()) return e;
  if (den.is_constant()) {
    e.num_ = num.scaled(1 / den.constant_value());
    return e;
  }
  const Poly g = gcd(num, den);
  if (!g.is_constant()) {
    num = *num.divide_exact(g);
    den = *den.divide_exact(g);
  }
  const Rational lc = den.leading_coeff();
  e.num_ = num.scaled(1 / lc);
  e.den_ = den.scaled(1 / lc);
  return e;
}

namespace {

Expr from_generator(const Generator& g) { return Expr::fraction(Poly::generator(g), Poly(1)); }

bool negative_leading(const Expr& a) { return !a.is_literal_zero() && a.numerator_poly().leading_coeff() < 0; }

// Single atom generator of the given kind, if `a` is exactly that.
std::optional<Generator> as_single_atom(const Expr& a, Generator::Kind kind) {
  if (!a.denominator_poly().is_constant() || a.denominator_poly().constant_value() != 1) return std::nullopt;
  const auto& terms = a.numerator_poly().terms();
  if (terms.size() != 1 || terms[0].coeff != 1 || terms[0].mono.factors.size() != 1 ||
      terms[0].mono.factors[0].exp != 1 || terms[0].mono.factors[0].gen.kind() != kind)
    return std::nullopt;
  return terms[0].mono.factors[0].gen;
}

}  // namespace

Expr Expr::exp(const Expr& a) {
  if (a.is_literal_zero()) return Expr(1);
  if (auto g = as_single_atom(a, Generator::Kind::Log)) return g->argument();
  return from_generator(Generator::atom(Generator::Kind::Exp, a));
}

Expr Expr::log(const Expr& a) {
  if (a.is_literal_zero()) throw Error(ErrorKind::DivisionByZero, "log(0)");
  if (a == Expr(1)) return Expr();
  if (auto g = as_single_atom(a, Generator::Kind::Exp)) return g->argument();
  return from_generator(Generator::atom(Generator::Kind::Log, a));
}

Expr Expr::sinh(const Expr& a) {
  if (a.is_literal_zero()) return Expr();
  if (negative_leading(a)) return -sinh(-a);
  return from_generator(Generator::atom(Generator::Kind::Sinh, a));
}

Expr Expr::cosh(const Expr& a) {
  if (a.is_literal_zero()) return Expr(1);
  if (negative_leading(a)) return cosh(-a);
  return from_generator(Generator::atom(Generator::Kind::Cosh, a));
}

Expr Expr::numerator() const { return fraction(num_, Poly(1)); }
Expr Expr::denominator() const { return fraction(den_, Poly(1)); }

Expr Expr::operator-() const {
  Expr e = *this;
  e.num_ = -num_;
  return e;
}

Expr Expr::add(const Expr& o) const {
  if (o.is_literal_zero()) return *this;
  if (is_literal_zero()) return o;
  if (den_ == o.den_) {
    if (den_.is_constant()) {
      Expr e;
      e.num_ = num_ + o.num_;
      return e;
    }
    return fraction(num_ + o.num_, den_);
  }
  if (o.den_.is_constant()) {
    // gcd(n1 + n2*d1, d1) = gcd(n1, d1) = 1, so no reduction is needed.
    Expr e;
    e.num_ = num_ + o.num_ * den_;
    e.den_ = den_;
    return e;
  }
  if (den_.is_constant()) return o + *this;
  const Poly g = gcd(den_, o.den_);
  const Poly a = *den_.divide_exact(g);
  const Poly b = *o.den_.divide_exact(g);
  return fraction(num_ * b + o.num_ * a, den_ * b);
}

Expr Expr::mul(const Expr& o) const {
  if (is_literal_zero() || o.is_literal_zero()) return Expr();
  if (den_.is_constant() && o.den_.is_constant()) {
    Expr e;
    e.num_ = reduce_hyperbolic(num_ * o.num_);
    return e;
  }
  if (!contains_cosh(num_) && !contains_cosh(o.num_)) {
    const Poly g1 = gcd(num_, o.den_);
    const Poly g2 = gcd(o.num_, den_);
    const Poly n1 = g1.is_constant() ? num_ : *num_.divide_exact(g1);
    const Poly d2 = g1.is_constant() ? o.den_ : *o.den_.divide_exact(g1);
    const Poly n2 = g2.is_constant() ? o.num_ : *o.num_.divide_exact(g2);
    const Poly d1 = g2.is_constant() ? den_ : *den_.divide_exact(g2);
    Poly den = d1 * d2;
    const Rational lc = den.leading_coeff();
    Expr e;
    e.num_ = (n1 * n2).scaled(1 / lc);
    e.den_ = den.scaled(1 / lc);
    return e;
  }
  return fraction(num_ * o.num_, den_ * o.den_);
}

Expr Expr::div(const Expr& o) const {
  if (o.is_literal_zero()) throw Error(ErrorKind::DivisionByZero, "division by an expression equal to 0");
  return *this * fraction(o.den_, o.num_);
}

Expr Expr::pow(int n) const {
  if (n < 0) {
    if (is_literal_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of 0");
    return fraction(den_, num_).pow(-n);
  }
  Expr result(1);
  Expr base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Truth Expr::is_zero() const {
  if (num_.is_zero()) return Truth::True;
  if (has_atoms()) return Truth::Unknown;
  return Truth::False;
}

std::optional<Rational> Expr::as_rational() const {
  if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
  return num_.constant_value() / den_.constant_value();
}

bool Expr::has_atoms() const {
  for (const Poly* p : {&num_, &den_})
    for (const auto& g : p->generators())
      if (!g.is_symbol()) return true;
  return false;
}

std::vector<std::string> Expr::free_symbols() const {
  std::vector<std::string> out;
  std::function<void(const Expr&)> visit = [&](const Expr& e) {
    for (const Poly* p : {&e.num_, &e.den_})
      for (const auto& g : p->generators()) {
        if (g.is_symbol())
          out.push_back(g.key());
        else
          visit(g.argument());
      }
  };
  visit(*this);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Expr::depends_on(std::string_view name) const {
  const auto syms = free_symbols();
  return std::find(syms.begin(), syms.end(), name) != syms.end();
}

namespace {

Expr poly_expr(const Poly& p) { return Expr::fraction(p, Poly(1)); }

Expr generator_derivative(const Generator& g, std::string_view name) {
  using K = Generator::Kind;
  if (g.is_symbol()) return g.key() == name ? Expr(1) : Expr();
  const Expr& a = g.argument();
  const Expr da = a.diff(name);
  if (da.is_literal_zero()) return Expr();
  switch (g.kind()) {
    case K::Exp: return poly_expr(Poly::generator(g)) * da;
    case K::Sinh: return Expr::cosh(a) * da;
    case K::Cosh: return Expr::sinh(a) * da;
    case K::Log: return da / a;
    case K::Symbol: break;
  }
  return Expr();
}

Expr poly_derivative(const Poly& p, std::string_view name) {
  Expr out;
  for (const auto& g : p.generators()) {
    const Expr dg = generator_derivative(g, name);
    if (dg.is_literal_zero()) continue;
    out += poly_expr(p.partial(g)) * dg;
  }
  return out;
}

}  // namespace

Expr Expr::diff(std::string_view name) const {
  if (!depends_on(name)) return Expr();
  const Expr dn = poly_derivative(num_, name);
  if (den_.is_constant()) return dn;  // den_ is 1 in that case
  const Expr dd = poly_derivative(den_, name);
  const Expr n = poly_expr(num_);
  const Expr d = poly_expr(den_);
  return (dn * d - n * dd) / (d * d);
}

Expr Expr::subs(const std::map<std::string, Expr, std::less<>>& bindings) const {
  if (bindings.empty()) return *this;
  using K = Generator::Kind;
  std::map<std::string, Expr> values;
  bool changed = false;
  for (const Poly* p : {&num_, &den_})
    for (const auto& g : p->generators()) {
      if (values.count(g.key())) continue;
      Expr v;
      if (g.is_symbol()) {
        auto it = bindings.find(g.key());
        v = it != bindings.end() ? it->second : poly_expr(Poly::generator(g));
      } else {
        const Expr a = g.argument().subs(bindings);
        switch (g.kind()) {
          case K::Exp: v = Expr::exp(a); break;
          case K::Sinh: v = Expr::sinh(a); break;
          case K::Cosh: v = Expr::cosh(a); break;
          case K::Log: v = Expr::log(a); break;
          case K::Symbol: break;
        }
      }
      if (!(v == poly_expr(Poly::generator(g)))) changed = true;
      values.emplace(g.key(), std::move(v));
    }
  if (!changed) return *this;
  auto evaluate = [&](const Poly& p) {
    Expr acc;
    for (const auto& t : p.terms()) {
      Expr term(t.coeff);
      for (const auto& f : t.mono.factors) term *= values.at(f.gen.key()).pow(f.exp);
      acc += term;
    }
    return acc;
  };
  return evaluate(num_) / evaluate(den_);
}

std::string Expr::str() const {
  if (num_.is_zero()) return "0";
  if (den_.is_constant()) return render_poly(num_);
  const Rational cn = poly_content(num_);
  const Rational cd = poly_content(den_);
  const Poly pn = num_.scaled(1 / cn);
  const Poly pd = den_.scaled(1 / cd);
  Rational ratio = cn / cd;
  if (ratio < 0 && pd.leading_coeff() < 0) ratio = -ratio;  // pd is positive-leading by construction
  const mpz_class p = ratio.get_num();
  const mpz_class q = ratio.get_den();

  std::string top;
  if (pn.is_constant()) {
    top = p.get_str();
  } else {
    const bool multi = pn.terms().size() > 1;
    const std::string body = multi ? "(" + render_poly(pn) + ")" : render_poly(pn);
    if (p == 1)
      top = body;
    else if (p == -1)
      top = "-" + body;
    else
      top = p.get_str() + "*" + body;
  }
  std::string bottom;
  if (q == 1 && is_single_factor(pd)) {
    bottom = render_poly(pd);
  } else {
    const bool multi = pd.terms().size() > 1;
    if (q == 1) {
      bottom = "(" + render_poly(pd) + ")";
    } else {
      const std::string body = multi ? "(" + render_poly(pd) + ")" : render_poly(pd);
      bottom = "(" + q.get_str() + "*" + body + ")";
    }
  }
  return top + "/" + bottom;
}

}  // namespace sublorentz
