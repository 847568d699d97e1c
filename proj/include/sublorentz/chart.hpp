#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sublorentz/expr.hpp"

namespace sublorentz {

/// Single coordinate chart: three ordered coordinate names plus declared
/// parameters. Parameters are constants, so every partial derivative of a
/// parameter is zero.
class Chart {
 public:
  Chart() : coordinates_{"x", "y", "z"} {}
  Chart(std::vector<std::string> coordinates, std::vector<std::string> parameters);

  const std::vector<std::string>& coordinates() const noexcept { return coordinates_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }

  std::optional<int> coordinate_index(std::string_view name) const;
  bool is_coordinate(std::string_view name) const { return coordinate_index(name).has_value(); }
  bool is_parameter(std::string_view name) const;
  bool declares(std::string_view name) const { return is_coordinate(name) || is_parameter(name); }

  Expr coordinate(int i) const { return Expr::symbol(coordinates_.at(static_cast<std::size_t>(i))); }
  Expr symbol(std::string_view name) const;

  /// Partial derivative along a coordinate; UnknownSymbol for anything else.
  Expr differentiate(const Expr& e, std::string_view coordinate) const;
  Expr partial(const Expr& e, int i) const { return e.diff(coordinates_.at(static_cast<std::size_t>(i))); }

  Chart with_parameters(const std::vector<std::string>& extra) const;

  friend bool operator==(const Chart&, const Chart&) = default;

 private:
  std::vector<std::string> coordinates_;
  std::vector<std::string> parameters_;
};

}  // namespace sublorentz
