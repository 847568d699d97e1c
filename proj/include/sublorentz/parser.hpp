#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sublorentz/chart.hpp"
#include "sublorentz/frame.hpp"

namespace sublorentz {

/// Grammar (whitespace insensitive):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] integer | '^' '(' ['-'] integer ')')?
///   primary := integer | name | fn '(' expr ')' | '(' expr ')'
///   fn      := exp | sinh | cosh | log
/// Names must be declared in the chart. Errors carry 1-based line:column.
Expr parse_expr(std::string_view text, const Chart& chart);

/// Same grammar where d/d<coordinate> denotes a coordinate direction, e.g.
/// "d/dx + (1/2)*y^2*d/dz". The result must be linear in the directions.
VectorField parse_vector_field(std::string_view text, const Chart& chart);

enum class RenderFormat { Plain, Json };

/// Plain rendering round-trips through parse_expr. Json wraps the plain text
/// as a JSON string literal. `names` optionally renames symbols for display.
std::string render_expr(const Expr& e, RenderFormat format = RenderFormat::Plain,
                        const std::map<std::string, std::string>& names = {});

std::string render_field(const VectorField& v, const Chart& chart);
/// Rendering with basis labels ("dx", "dy^dz", or coframe labels).
std::string render_form(const DifferentialForm& f, const std::array<std::string, 3>& basis);
std::string render_form(const DifferentialForm& f, const Chart& chart);

struct CoordinateFrameInput {
  Frame frame;
};

struct AbstractAlgebraInput {
  StructureFunctions sf;
};

struct StructureDefinition {
  Chart chart;
  std::variant<CoordinateFrameInput, AbstractAlgebraInput> mode;
  std::vector<VectorField> symmetries;
  std::vector<std::string> symmetry_sources;
  std::optional<Expr> theta;
  std::optional<std::string> scale;

  bool is_coordinate() const { return std::holds_alternative<CoordinateFrameInput>(mode); }
  const Frame& frame() const { return std::get<CoordinateFrameInput>(mode).frame; }
  const StructureFunctions& constants() const { return std::get<AbstractAlgebraInput>(mode).sf; }
};

/// Sectioned key/value structure file:
///
///   # comment
///   [chart]
///   coordinates = ["x", "y", "z"]     # optional, default x, y, z
///   [params]
///   names = ["s"]
///   [frame]                           # coordinate mode ...
///   X1 = "d/dx + (1/2)*y^2*d/dz"
///   X2 = "d/dy - (1/2)*x*y*d/dz"
///   [algebra]                         # ... or abstract mode
///   c011 = "0"                        # all six of c011 .. c122
///   [symmetry]
///   Z = ["y*d/dx + x*d/dy"]           # or Z1 = "...", Z2 = "..."
///   [transform]
///   theta = "x*y"
///   scale = "s"
///
/// Errors: MissingSection, DuplicateMode, SyntaxError, UnknownSymbol,
/// InvalidInput.
StructureDefinition parse_structure_file(std::string_view text);
StructureDefinition load_structure_file(const std::string& path);

}  // namespace sublorentz
