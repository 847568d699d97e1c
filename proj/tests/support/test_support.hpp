#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "sublorentz/contact.hpp"
#include "sublorentz/parser.hpp"

namespace sublorentz::testing {

/// Seed-pinned source of small random polynomials and frames.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Sum of up to `terms` monomials of total degree <= max_degree in the
  /// given symbols, with coefficients in [-3, 3] \ {0}.
  Expr polynomial(const std::vector<std::string>& symbols, int max_degree, int terms) {
    Expr result;
    for (int t = 0; t < terms; ++t) {
      int c = integer(-3, 3);
      if (c == 0) c = 1;
      Expr mono(c);
      int budget = integer(0, max_degree);
      while (budget-- > 0) mono *= Expr::symbol(symbols[static_cast<std::size_t>(integer(0, static_cast<int>(symbols.size()) - 1))]);
      result += mono;
    }
    return result;
  }

  Expr rational_function(const std::vector<std::string>& symbols) {
    Expr den = polynomial(symbols, 1, 2);
    if (den.is_literal_zero()) den = Expr(1);
    return polynomial(symbols, 2, 3) / den;
  }

  /// X1 = d/dx + a d/dz, X2 = c d/dx + d/dy + b d/dz with polynomial a, b, c,
  /// redrawn until the distribution is contact somewhere.
  Frame contact_frame(const Chart& chart) {
    const std::vector<std::string>& xyz = chart.coordinates();
    for (;;) {
      Frame f;
      f.X1 = {Expr(1), Expr(), polynomial(xyz, 2, 3)};
      f.X2 = {integer(0, 2) == 0 ? polynomial({xyz[2]}, 1, 1) : Expr(), Expr(1), polynomial(xyz, 2, 3)};
      if (!contact_locus(f, chart).is_literal_zero()) return f;
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline const nlohmann::json& oracle_values() {
  static const nlohmann::json values = [] {
    std::ifstream in(SUBLORENTZ_ORACLE_FILE);
    return nlohmann::json::parse(in);
  }();
  return values;
}

inline Expr oracle_expr(const nlohmann::json& j, const Chart& chart) { return parse_expr(j.get<std::string>(), chart); }

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status != Truth::True) return false;
  return true;
}

}  // namespace sublorentz::testing
