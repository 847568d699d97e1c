#include "sublorentz/chart.hpp"

#include <algorithm>
#include <set>

namespace sublorentz {

Chart::Chart(std::vector<std::string> coordinates, std::vector<std::string> parameters)
    : coordinates_(std::move(coordinates)), parameters_(std::move(parameters)) {
  if (coordinates_.size() != 3)
    throw Error(ErrorKind::InvalidInput, "a chart needs exactly three coordinates, got " +
                                             std::to_string(coordinates_.size()));
  std::set<std::string> seen;
  for (const auto* names : {&coordinates_, &parameters_})
    for (const auto& n : *names) {
      if (n.empty()) throw Error(ErrorKind::InvalidInput, "empty name in chart");
      if (!seen.insert(n).second) throw Error(ErrorKind::InvalidInput, "name declared twice: " + n);
    }
}

std::optional<int> Chart::coordinate_index(std::string_view name) const {
  for (std::size_t i = 0; i < coordinates_.size(); ++i)
    if (coordinates_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Chart::is_parameter(std::string_view name) const {
  return std::find(parameters_.begin(), parameters_.end(), name) != parameters_.end();
}

Expr Chart::symbol(std::string_view name) const {
  if (!declares(name)) throw Error(ErrorKind::UnknownSymbol, "undeclared name '" + std::string(name) + "'");
  return Expr::symbol(std::string(name));
}

Expr Chart::differentiate(const Expr& e, std::string_view coordinate) const {
  if (!is_coordinate(coordinate))
    throw Error(ErrorKind::UnknownSymbol, "'" + std::string(coordinate) + "' is not a chart coordinate");
  return e.diff(coordinate);
}

Chart Chart::with_parameters(const std::vector<std::string>& extra) const {
  std::vector<std::string> params = parameters_;
  for (const auto& p : extra)
    if (!is_parameter(p)) params.push_back(p);
  return Chart(coordinates_, params);
}

}  // namespace sublorentz
