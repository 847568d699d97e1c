#include "sublorentz/poly.hpp"

#include <algorithm>
#include <cassert>

#include "sublorentz/error.hpp"

namespace sublorentz {

Generator Generator::symbol(std::string name) {
  return Generator(std::make_shared<const Node>(Node{Kind::Symbol, std::move(name), nullptr}));
}

const Expr& Generator::argument() const {
  if (!node_->argument) throw Error(ErrorKind::InvalidInput, "symbol '" + key() + "' has no argument");
  return *node_->argument;
}

// ---------------------------------------------------------------- Monomial

int Monomial::degree_in(const Generator& g) const noexcept {
  for (const auto& f : factors)
    if (f.gen == g) return f.exp;
  return 0;
}

int Monomial::total_degree() const noexcept {
  int d = 0;
  for (const auto& f : factors) d += f.exp;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors.reserve(factors.size() + other.factors.size());
  auto a = factors.begin();
  auto b = other.factors.begin();
  while (a != factors.end() && b != other.factors.end()) {
    const auto c = a->gen <=> b->gen;
    if (c == 0) {
      out.factors.push_back({a->gen, a->exp + b->exp});
      ++a;
      ++b;
    } else if (c < 0) {
      out.factors.push_back(*a++);
    } else {
      out.factors.push_back(*b++);
    }
  }
  out.factors.insert(out.factors.end(), a, factors.end());
  out.factors.insert(out.factors.end(), b, other.factors.end());
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial out;
  auto a = factors.begin();
  auto b = other.factors.begin();
  while (b != other.factors.end()) {
    if (a == factors.end()) return std::nullopt;
    const auto c = a->gen <=> b->gen;
    if (c == 0) {
      if (a->exp < b->exp) return std::nullopt;
      if (a->exp > b->exp) out.factors.push_back({a->gen, a->exp - b->exp});
      ++a;
      ++b;
    } else if (c < 0) {
      out.factors.push_back(*a++);
    } else {
      return std::nullopt;
    }
  }
  out.factors.insert(out.factors.end(), a, factors.end());
  return out;
}

Monomial Monomial::without(const Generator& g) const {
  Monomial out;
  out.factors.reserve(factors.size());
  for (const auto& f : factors)
    if (!(f.gen == g)) out.factors.push_back(f);
  return out;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (a.factors[i].exp != b.factors[i].exp || !(a.factors[i].gen == b.factors[i].gen)) return false;
  return true;
}

int compare(const Monomial& a, const Monomial& b) noexcept {
  auto i = a.factors.begin();
  auto j = b.factors.begin();
  for (; i != a.factors.end() && j != b.factors.end(); ++i, ++j) {
    const auto c = i->gen <=> j->gen;
    if (c < 0) return 1;   // a has a more significant variable
    if (c > 0) return -1;
    if (i->exp != j->exp) return i->exp > j->exp ? 1 : -1;
  }
  if (i != a.factors.end()) return 1;
  if (j != b.factors.end()) return -1;
  return 0;
}

// -------------------------------------------------------------------- Poly

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return compare(a.mono, b.mono) > 0; }

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::generator(const Generator& g, int exp) {
  Poly p;
  if (exp == 0) return Poly(1);
  p.terms_.push_back({Monomial{{{g, exp}}}, Rational(1)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error(ErrorKind::InvalidInput, "polynomial is not constant");
  return terms_[0].coeff;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

Poly merge_add(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    const int c = compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->mono, subtract ? Rational(-j->coeff) : j->coeff});
      ++j;
    } else {
      Rational s = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
      if (s != 0) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back({j->mono, subtract ? Rational(-j->coeff) : j->coeff});
  return Poly::from_sorted(std::move(out));
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return merge_add(terms_, o.terms_, false);
}

Poly Poly::operator-(const Poly& o) const {
  if (o.is_zero()) return *this;
  return merge_add(terms_, o.terms_, true);
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.is_constant()) return scaled(o.terms_[0].coeff);
  if (is_constant()) return o.scaled(terms_[0].coeff);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly();
  Poly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;  // multiplication by a monomial preserves the order
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

int Poly::degree(const Generator& g) const noexcept {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(g));
  return d;
}

Poly Poly::coefficient(const Generator& g, int k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.degree_in(g) == k) out.push_back({t.mono.without(g), t.coeff});
  return from_terms(std::move(out));
}

std::vector<Generator> Poly::generators() const {
  std::vector<Generator> gens;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors) gens.push_back(f.gen);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

bool Poly::contains(const Generator& g) const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree_in(g) > 0) return true;
  return false;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return Poly();
  if (d.is_constant()) return scaled(1 / d.terms_[0].coeff);
  std::vector<Term> quotient;
  Poly rem = *this;
  const Term& lead = d.leading();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    auto m = lt.mono.divide(lead.mono);
    if (!m) return std::nullopt;
    Rational c = lt.coeff / lead.coeff;
    rem -= d.times_monomial(*m, c);
    quotient.push_back({std::move(*m), std::move(c)});
  }
  return from_terms(std::move(quotient));
}

Poly Poly::partial(const Generator& g) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.mono.degree_in(g);
    if (e == 0) continue;
    Monomial m;
    for (const auto& f : t.mono.factors) {
      if (f.gen == g) {
        if (f.exp > 1) m.factors.push_back({f.gen, f.exp - 1});
      } else {
        m.factors.push_back(f);
      }
    }
    out.push_back({std::move(m), t.coeff * e});
  }
  return from_terms(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coeff());
}

bool operator==(const Poly& a, const Poly& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  return true;
}

// --------------------------------------------------------------------- gcd

namespace {

Generator leading_variable(const Poly& a, const Poly& b) {
  // The most significant generator present in either polynomial.
  std::optional<Generator> best;
  for (const Poly* p : {&a, &b})
    for (const auto& t : p->terms())
      if (!t.mono.factors.empty() && (!best || t.mono.factors.front().gen < *best)) best = t.mono.factors.front().gen;
  assert(best);
  return *best;
}

Poly exact(const Poly& a, const Poly& d) {
  auto q = a.divide_exact(d);
  assert(q);
  return std::move(*q);
}

Poly content_in(const Poly& p, const Generator& v) {
  const int deg = p.degree(v);
  Poly g;
  for (int k = deg; k >= 0; --k) {
    Poly c = p.coefficient(v, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly primitive_part(const Poly& p, const Generator& v) {
  Poly c = content_in(p, v);
  Poly out = c.is_constant() ? p : exact(p, c);
  return out.monic();
}

Poly pseudo_remainder(Poly r, const Poly& b, const Generator& v) {
  const int db = b.degree(v);
  const Poly lcb = b.coefficient(v, db);
  while (!r.is_zero()) {
    const int dr = r.degree(v);
    if (dr < db) break;
    const Poly lcr = r.coefficient(v, dr);
    Monomial shift;
    if (dr > db) shift.factors.push_back({v, dr - db});
    r = lcb * r - (lcr * b).times_monomial(shift, 1);
  }
  return r;
}

Poly prs_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.terms().size() == 1 && b.terms().size() == 1) {
    // monomial gcd
    Monomial m;
    const auto& fa = a.leading().mono.factors;
    const auto& fb = b.leading().mono.factors;
    auto i = fa.begin();
    auto j = fb.begin();
    while (i != fa.end() && j != fb.end()) {
      const auto c = i->gen <=> j->gen;
      if (c == 0) {
        m.factors.push_back({i->gen, std::min(i->exp, j->exp)});
        ++i;
        ++j;
      } else if (c < 0) {
        ++i;
      } else {
        ++j;
      }
    }
    return Poly::from_terms({{m, Rational(1)}});
  }
  if (auto q = a.divide_exact(b)) return b.monic();
  if (auto q = b.divide_exact(a)) return a.monic();

  const Generator v = leading_variable(a, b);
  if (a.degree(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree(v) == 0) return gcd(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly content_gcd = gcd(ca, cb);
  Poly p = (ca.is_constant() ? a : exact(a, ca)).monic();
  Poly q = (cb.is_constant() ? b : exact(b, cb)).monic();
  if (p.degree(v) < q.degree(v)) std::swap(p, q);

  Poly g;
  while (true) {
    Poly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (r.degree(v) == 0) {
      g = Poly(1);
      break;
    }
    p = std::move(q);
    q = primitive_part(r, v);
  }
  g = primitive_part(g, v);
  return (content_gcd * g).monic();
}


// Heuristic gcd over the integers: evaluate the leading variable at a large
// integer, recurse, and rebuild the candidate from its balanced xi-adic
// expansion. A candidate is accepted only if it divides both inputs.

using Integer = mpz_class;

Integer max_norm(const Poly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) m = std::max(m, Integer(abs(t.coeff.get_num())));
  return m;
}

Integer integer_content(const Poly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) g = ::gcd(g, Integer(t.coeff.get_num()));
  return g;
}

// Rescales a nonzero polynomial to integer coefficients with content 1.
Poly integer_primitive(const Poly& p) {
  Integer l = 1;
  for (const auto& t : p.terms()) l = lcm(l, Integer(t.coeff.get_den()));
  Poly q = p.scaled(Rational(l));
  return q.scaled(Rational(1) / Rational(integer_content(q)));
}

Poly evaluate_at(const Poly& p, const Generator& v, const Integer& xi) {
  std::vector<Poly::Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    const int e = t.mono.degree_in(v);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e));
    out.push_back({t.mono.without(v), t.coeff * Rational(power)});
  }
  return Poly::from_terms(std::move(out));
}

// Coefficient-wise representative in (-xi/2, xi/2].
Poly balanced_mod(const Poly& p, const Integer& xi) {
  std::vector<Poly::Term> out;
  for (const auto& t : p.terms()) {
    Integer r = Integer(t.coeff.get_num()) % xi;
    if (r < 0) r += xi;
    if (2 * r > xi) r -= xi;
    if (r != 0) out.push_back({t.mono, Rational(r)});
  }
  return Poly::from_sorted(std::move(out));
}

Poly interpolate(Poly h, const Generator& v, const Integer& xi) {
  Poly f;
  int e = 0;
  while (!h.is_zero()) {
    const Poly g = balanced_mod(h, xi);
    Monomial m;
    if (e > 0) m.factors.push_back({v, e});
    f += g.times_monomial(m, 1);
    h = (h - g).scaled(Rational(1) / Rational(xi));
    ++e;
  }
  return f;
}

std::optional<Poly> heuristic_gcd(const Poly& f, const Poly& g, const std::vector<Generator>& vars, std::size_t level) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() ? g : f;
  if (level == vars.size()) {
    assert(f.is_constant() && g.is_constant());
    return Poly(Rational(::gcd(Integer(f.constant_value().get_num()), Integer(g.constant_value().get_num()))));
  }
  const Generator& v = vars[level];
  if (!f.contains(v) && !g.contains(v)) return heuristic_gcd(f, g, vars, level + 1);

  const Integer content = ::gcd(integer_content(f), integer_content(g));
  const Poly fp = f.scaled(Rational(1) / Rational(integer_content(f)));
  const Poly gp = g.scaled(Rational(1) / Rational(integer_content(g)));
  const Integer fn = max_norm(fp), gn = max_norm(gp);
  const Integer bound = 2 * std::min(fn, gn) + 29;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), bound.get_mpz_t());
  Integer xi = std::max(Integer(std::min(bound, Integer(99 * root))),
                        Integer(2 * std::min(Integer(fn / abs(fp.leading_coeff().get_num())),
                                             Integer(gn / abs(gp.leading_coeff().get_num()))) +
                                4));
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Poly fe = evaluate_at(fp, v, xi);
    const Poly ge = evaluate_at(gp, v, xi);
    if (!fe.is_zero() && !ge.is_zero()) {
      if (auto he = heuristic_gcd(fe, ge, vars, level + 1)) {
        Poly h = interpolate(*he, v, xi);
        if (!h.is_zero()) {
          h = h.scaled(Rational(1) / Rational(integer_content(h)));
          if (h.leading_coeff() < 0) h = -h;
          if (fp.divide_exact(h) && gp.divide_exact(h)) return h.scaled(Rational(content));
        }
      }
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    xi = 73794 * xi * r / 27011;
  }
  return std::nullopt;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  std::vector<Generator> vars = a.generators();
  for (const auto& g : b.generators()) vars.push_back(g);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (auto h = heuristic_gcd(integer_primitive(a), integer_primitive(b), vars, 0)) return h->monic();
  return prs_gcd(a, b);
}

}  // namespace sublorentz

