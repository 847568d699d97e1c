#include "sublorentz/fixtures.hpp"

#include <map>

namespace sublorentz {

namespace {

// Generated from data/*.toml at configure time.
const std::map<std::string, std::string>& texts() {
  static const std::map<std::string, std::string> t{
#include "fixtures_data.inc"
  };
  return t;
}

}  // namespace

const std::vector<std::string>& builtin_structure_names() {
  static const std::vector<std::string> names{"martinet", "heisenberg", "heisenberg_abstract", "sl2_e", "sl2_n", "sl2_f"};
  return names;
}

const std::string& builtin_structure_text(const std::string& name) {
  const auto it = texts().find(name);
  if (it == texts().end()) throw Error(ErrorKind::UnknownName, "no built-in structure named '" + name + "'");
  return it->second;
}

StructureDefinition builtin_structure(const std::string& name) { return parse_structure_file(builtin_structure_text(name)); }

}  // namespace sublorentz
