#pragma once

#include <array>

#include "sublorentz/calculus.hpp"

namespace sublorentz {

/// Orthonormal frame of the distribution: X1 timelike, X2 spacelike.
struct Frame {
  VectorField X1;
  VectorField X2;
  friend bool operator==(const Frame&, const Frame&) = default;
};

/// The six structure functions c011, c012, c021, c022, c121, c122, where
///   [X1,X0] = c011 X1 + c012 X2,  [X2,X0] = c021 X1 + c022 X2,
///   [X2,X1] = c121 X1 + c122 X2 + X0.
struct StructureFunctions {
  Expr c011, c012, c021, c022, c121, c122;

  static constexpr std::array<const char*, 6> names{"c011", "c012", "c021", "c022", "c121", "c122"};
  std::array<Expr, 6> values() const { return {c011, c012, c021, c022, c121, c122}; }
  static StructureFunctions from_values(const std::array<Expr, 6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

  friend bool operator==(const StructureFunctions&, const StructureFunctions&) = default;
};

}  // namespace sublorentz
