#pragma once

#include <string>
#include <vector>

#include "sublorentz/parser.hpp"

namespace sublorentz {

/// Built-in structure files: martinet, heisenberg (coordinate frames) and
/// heisenberg_abstract, sl2_e, sl2_n, sl2_f (left-invariant structures).
const std::vector<std::string>& builtin_structure_names();
/// UnknownName for anything else.
const std::string& builtin_structure_text(const std::string& name);
StructureDefinition builtin_structure(const std::string& name);

}  // namespace sublorentz
