#include "sublorentz/parser.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sublorentz {

namespace {

struct Origin {
  int line = 1;
  int column = 1;
};

bool is_name_start(unsigned char ch) { return std::isalpha(ch) || ch == '_' || ch >= 0x80; }
bool is_name_char(unsigned char ch) { return std::isalnum(ch) || ch == '_' || ch >= 0x80; }

// A scalar or a vector field (linear combination of coordinate directions).
struct Value {
  bool is_field = false;
  Expr scalar;
  VectorField field;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, const Chart& chart, Origin origin, bool field_mode)
      : text_(text), chart_(chart), origin_(origin), field_mode_(field_mode) {}

  Value parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    Value v = parse_sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message, ErrorKind kind = ErrorKind::SyntaxError) const {
    fail_at(pos_, message, kind);
  }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message, ErrorKind kind) const {
    int line = origin_.line;
    int column = origin_.column;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  std::string read_name() {
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Recognizes d/d<coordinate> at the current position (field mode only).
  std::optional<int> try_direction() {
    if (!field_mode_ || peek() != 'd') return std::nullopt;
    std::size_t p = pos_ + 1;
    auto skip = [&] {
      while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    };
    skip();
    if (p >= text_.size() || text_[p] != '/') return std::nullopt;
    ++p;
    skip();
    if (p >= text_.size() || text_[p] != 'd') return std::nullopt;
    ++p;
    const std::size_t start = p;
    while (p < text_.size() && is_name_char(static_cast<unsigned char>(text_[p]))) ++p;
    const auto idx = chart_.coordinate_index(text_.substr(start, p - start));
    if (!idx) return std::nullopt;
    pos_ = p;
    return idx;
  }

  Value add(const Value& a, const Value& b, bool subtract, std::size_t at) const {
    Value r;
    if (a.is_field != b.is_field) {
      // 0 + field is allowed so that "0" renders and parses as the zero field.
      const Value& scalar = a.is_field ? b : a;
      if (!scalar.scalar.is_literal_zero())
        fail_at(at, "cannot add a scalar and a vector field", ErrorKind::SyntaxError);
      r.is_field = true;
      r.field = a.is_field ? a.field : (subtract ? -b.field : b.field);
      return r;
    }
    r.is_field = a.is_field;
    if (a.is_field)
      r.field = subtract ? a.field - b.field : a.field + b.field;
    else
      r.scalar = subtract ? a.scalar - b.scalar : a.scalar + b.scalar;
    return r;
  }

  Value parse_sum() {
    Value v = parse_product();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+'))
        v = add(v, parse_product(), false, at);
      else if (accept('-'))
        v = add(v, parse_product(), true, at);
      else
        return v;
    }
  }

  Value parse_product() {
    Value v = parse_unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        Value w = parse_unary();
        if (v.is_field && w.is_field) fail_at(at, "product of two vector fields", ErrorKind::SyntaxError);
        Value r;
        r.is_field = v.is_field || w.is_field;
        if (!r.is_field)
          r.scalar = v.scalar * w.scalar;
        else
          r.field = v.is_field ? w.scalar * v.field : v.scalar * w.field;
        v = r;
      } else if (accept('/')) {
        Value w = parse_unary();
        if (w.is_field) fail_at(at, "division by a vector field", ErrorKind::SyntaxError);
        if (w.scalar.is_literal_zero()) fail_at(at, "division by zero", ErrorKind::DivisionByZero);
        if (v.is_field)
          v.field = (Expr(1) / w.scalar) * v.field;
        else
          v.scalar = v.scalar / w.scalar;
      } else {
        return v;
      }
    }
  }

  Value parse_unary() {
    skip_space();
    if (accept('-')) {
      Value v = parse_unary();
      if (v.is_field)
        v.field = -v.field;
      else
        v.scalar = -v.scalar;
      return v;
    }
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  long read_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (peek() == '.') fail("decimal literals are not supported; write a fraction a/b");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail_at(start, "exponent too large", ErrorKind::SyntaxError);
    return std::stol(digits);
  }

  long read_exponent() {
    skip_space();
    if (accept('(')) {
      const bool negative = accept('-');
      const long n = read_integer();
      expect(')');
      return negative ? -n : n;
    }
    const bool negative = accept('-');
    const long n = read_integer();
    return negative ? -n : n;
  }

  Value parse_power() {
    Value base = parse_primary();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) {
      if (base.is_field) fail_at(at, "power of a vector field", ErrorKind::SyntaxError);
      const long n = read_exponent();
      if (n < 0 && base.scalar.is_literal_zero()) fail_at(at, "negative power of zero", ErrorKind::DivisionByZero);
      base.scalar = base.scalar.pow(static_cast<int>(n));
    }
    return base;
  }

  Value parse_primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '.') fail("decimal literals are not supported; write a fraction a/b");
      Value v;
      v.scalar = Expr(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
      return v;
    }
    if (ch == '(') {
      ++pos_;
      Value v = parse_sum();
      expect(')');
      return v;
    }
    if (auto dir = try_direction()) {
      Value v;
      v.is_field = true;
      v.field = VectorField::coordinate(*dir);
      return v;
    }
    if (is_name_start(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      const std::string name = read_name();
      skip_space();
      if (peek() == '(' && (name == "exp" || name == "sinh" || name == "cosh" || name == "log") &&
          !chart_.declares(name)) {
        ++pos_;
        Value arg = parse_sum();
        expect(')');
        if (arg.is_field) fail_at(start, name + " of a vector field", ErrorKind::SyntaxError);
        Value v;
        if (name == "exp")
          v.scalar = Expr::exp(arg.scalar);
        else if (name == "sinh")
          v.scalar = Expr::sinh(arg.scalar);
        else if (name == "cosh")
          v.scalar = Expr::cosh(arg.scalar);
        else {
          if (arg.scalar.is_literal_zero()) fail_at(start, "log(0)", ErrorKind::DivisionByZero);
          v.scalar = Expr::log(arg.scalar);
        }
        return v;
      }
      if (!chart_.declares(name)) fail_at(start, "unknown identifier '" + name + "'", ErrorKind::UnknownSymbol);
      Value v;
      v.scalar = Expr::symbol(name);
      return v;
    }
    fail(std::string("unexpected '") + ch + "'");
  }

  std::string_view text_;
  const Chart& chart_;
  Origin origin_;
  bool field_mode_;
  std::size_t pos_ = 0;
};

Expr parse_expr_at(std::string_view text, const Chart& chart, Origin origin) {
  ExprParser p(text, chart, origin, false);
  return p.parse_all().scalar;
}

VectorField parse_field_at(std::string_view text, const Chart& chart, Origin origin) {
  ExprParser p(text, chart, origin, true);
  Value v = p.parse_all();
  if (!v.is_field) {
    if (v.scalar.is_literal_zero()) return VectorField::zero();
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(origin.line) + ", column " +
                                            std::to_string(origin.column) +
                                            ": expected a vector field built from d/d<coordinate> terms");
  }
  return v.field;
}

bool needs_parentheses(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || (ch == '-' && i > 0))) return true;
  }
  return false;
}

std::string join_terms(const std::vector<std::string>& pieces) {
  if (pieces.empty()) return "0";
  std::string out = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].starts_with("-"))
      out += " - " + pieces[i].substr(1);
    else
      out += " + " + pieces[i];
  }
  return out;
}

std::string scaled_label(const Expr& coefficient, const std::string& label) {
  const std::string s = coefficient.str();
  if (s == "1") return label;
  if (s == "-1") return "-" + label;
  return (needs_parentheses(s) ? "(" + s + ")" : s) + "*" + label;
}

}  // namespace

Expr parse_expr(std::string_view text, const Chart& chart) { return parse_expr_at(text, chart, {}); }

VectorField parse_vector_field(std::string_view text, const Chart& chart) { return parse_field_at(text, chart, {}); }

std::string render_expr(const Expr& e, RenderFormat format, const std::map<std::string, std::string>& names) {
  std::string plain;
  if (names.empty()) {
    plain = e.str();
  } else {
    std::map<std::string, Expr, std::less<>> bindings;
    for (const auto& [from, to] : names) bindings.emplace(from, Expr::symbol(to));
    plain = e.subs(bindings).str();
  }
  if (format == RenderFormat::Json) return nlohmann::json(plain).dump();
  return plain;
}

std::string render_field(const VectorField& v, const Chart& chart) {
  std::vector<std::string> pieces;
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_literal_zero()) pieces.push_back(scaled_label(v[i], "d/d" + chart.coordinates()[static_cast<std::size_t>(i)]));
  return join_terms(pieces);
}

std::string render_form(const DifferentialForm& f, const std::array<std::string, 3>& basis) {
  std::vector<std::string> pieces;
  for (unsigned m = 0; m < 8; ++m) {
    if (std::popcount(m) != f.degree() || f.at_mask(m).is_literal_zero()) continue;
    if (m == 0) {
      pieces.push_back(f.at_mask(0).str());
      continue;
    }
    std::string label;
    for (int i = 0; i < 3; ++i)
      if (m & (1u << i)) label += (label.empty() ? "" : "^") + basis[static_cast<std::size_t>(i)];
    pieces.push_back(scaled_label(f.at_mask(m), label));
  }
  return join_terms(pieces);
}

std::string render_form(const DifferentialForm& f, const Chart& chart) {
  const auto& c = chart.coordinates();
  return render_form(f, {"d" + c[0], "d" + c[1], "d" + c[2]});
}

// ------------------------------------------------------------ structure files

namespace {

struct RawValue {
  std::vector<std::string> items;  // one entry for a plain string
  bool is_list = false;
  int line = 0;
  std::vector<int> columns;  // column of each item's first character
};

using Section = std::map<std::string, RawValue>;

[[noreturn]] void file_error(ErrorKind kind, int line, const std::string& message) {
  throw Error(kind, "line " + std::to_string(line) + ": " + message);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Reads a double-quoted string starting at s[i] == '"'; advances i past it.
std::string read_string(const std::string& s, std::size_t& i, int line) {
  std::string out;
  ++i;
  while (i < s.size() && s[i] != '"') {
    if (s[i] == '\\' && i + 1 < s.size()) {
      ++i;
      if (s[i] != '"' && s[i] != '\\') file_error(ErrorKind::SyntaxError, line, "unsupported escape sequence");
    }
    out += s[i++];
  }
  if (i >= s.size()) file_error(ErrorKind::SyntaxError, line, "unterminated string");
  ++i;
  return out;
}

RawValue parse_value(const std::string& s, std::size_t offset, int line) {
  RawValue v;
  v.line = line;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto rest_is_comment = [&] {
    skip();
    return i >= s.size() || s[i] == '#';
  };
  skip();
  if (i < s.size() && s[i] == '"') {
    v.columns.push_back(static_cast<int>(offset + i + 2));
    v.items.push_back(read_string(s, i, line));
  } else if (i < s.size() && s[i] == '[') {
    v.is_list = true;
    ++i;
    skip();
    while (i < s.size() && s[i] != ']') {
      if (s[i] != '"') file_error(ErrorKind::SyntaxError, line, "list items must be quoted strings");
      v.columns.push_back(static_cast<int>(offset + i + 2));
      v.items.push_back(read_string(s, i, line));
      skip();
      if (i < s.size() && s[i] == ',') {
        ++i;
        skip();
      } else if (i < s.size() && s[i] != ']') {
        file_error(ErrorKind::SyntaxError, line, "expected ',' or ']' in list");
      }
    }
    if (i >= s.size()) file_error(ErrorKind::SyntaxError, line, "unterminated list");
    ++i;
  } else {
    file_error(ErrorKind::SyntaxError, line, "values must be quoted strings or lists of quoted strings");
  }
  if (!rest_is_comment()) file_error(ErrorKind::SyntaxError, line, "trailing characters after value");
  return v;
}

std::map<std::string, Section> parse_sections(std::string_view text) {
  static const std::set<std::string> known{"chart", "params", "frame", "algebra", "symmetry", "transform"};
  std::map<std::string, Section> sections;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    if (t[0] == '[') {
      const auto close = t.find(']');
      if (close == std::string::npos) file_error(ErrorKind::SyntaxError, line, "unterminated section header");
      const std::string rest = trim(t.substr(close + 1));
      if (!rest.empty() && rest[0] != '#') file_error(ErrorKind::SyntaxError, line, "trailing characters after section header");
      current = trim(t.substr(1, close - 1));
      if (!known.count(current)) file_error(ErrorKind::InvalidInput, line, "unknown section [" + current + "]");
      if (sections.count(current)) file_error(ErrorKind::InvalidInput, line, "section [" + current + "] appears twice");
      sections[current];
      continue;
    }
    const auto eq = raw.find('=');
    if (eq == std::string::npos) file_error(ErrorKind::SyntaxError, line, "expected key = value");
    if (current.empty()) file_error(ErrorKind::SyntaxError, line, "key outside of any section");
    const std::string key = trim(raw.substr(0, eq));
    if (key.empty()) file_error(ErrorKind::SyntaxError, line, "empty key");
    auto& section = sections[current];
    if (section.count(key)) file_error(ErrorKind::InvalidInput, line, "key '" + key + "' repeated in [" + current + "]");
    section[key] = parse_value(raw.substr(eq + 1), eq + 1, line);
  }
  return sections;
}

const RawValue& require_key(const Section& s, const std::string& section, const std::string& key) {
  auto it = s.find(key);
  if (it == s.end()) throw Error(ErrorKind::MissingSection, "[" + section + "] needs key '" + key + "'");
  return it->second;
}

std::string single(const RawValue& v, const std::string& key) {
  if (v.is_list || v.items.size() != 1) file_error(ErrorKind::InvalidInput, v.line, "'" + key + "' must be a single string");
  return v.items.front();
}

void reject_unknown_keys(const Section& s, const std::string& section, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : s)
    if (!allowed.count(key)) file_error(ErrorKind::InvalidInput, value.line, "unknown key '" + key + "' in [" + section + "]");
}

}  // namespace

StructureDefinition parse_structure_file(std::string_view text) {
  const auto sections = parse_sections(text);
  auto section = [&](const std::string& name) -> const Section* {
    auto it = sections.find(name);
    return it == sections.end() ? nullptr : &it->second;
  };

  std::vector<std::string> coordinates{"x", "y", "z"};
  std::vector<std::string> parameters;
  if (const Section* s = section("chart")) {
    reject_unknown_keys(*s, "chart", {"coordinates"});
    if (auto it = s->find("coordinates"); it != s->end()) coordinates = it->second.items;
  }
  if (const Section* s = section("params")) {
    reject_unknown_keys(*s, "params", {"names"});
    if (auto it = s->find("names"); it != s->end()) parameters = it->second.items;
  }
  for (const auto& name : coordinates)
    if (name.empty() || !is_name_start(static_cast<unsigned char>(name[0])))
      throw Error(ErrorKind::InvalidInput, "invalid coordinate name '" + name + "'");
  for (const auto& name : parameters)
    if (name.empty() || !is_name_start(static_cast<unsigned char>(name[0])))
      throw Error(ErrorKind::InvalidInput, "invalid parameter name '" + name + "'");

  StructureDefinition def{Chart(coordinates, parameters), CoordinateFrameInput{}, {}, {}, std::nullopt, std::nullopt};
  const Chart& chart = def.chart;

  auto expr_of = [&](const RawValue& v, std::size_t item) {
    return parse_expr_at(v.items[item], chart, {v.line, v.columns[item]});
  };
  auto field_of = [&](const RawValue& v, std::size_t item) {
    return parse_field_at(v.items[item], chart, {v.line, v.columns[item]});
  };

  const Section* frame = section("frame");
  const Section* algebra = section("algebra");
  if (frame && algebra) throw Error(ErrorKind::DuplicateMode, "both [frame] and [algebra] are present");
  if (!frame && !algebra) throw Error(ErrorKind::MissingSection, "one of [frame] or [algebra] is required");
  if (frame) {
    reject_unknown_keys(*frame, "frame", {"X1", "X2"});
    const RawValue& x1 = require_key(*frame, "frame", "X1");
    const RawValue& x2 = require_key(*frame, "frame", "X2");
    single(x1, "X1");
    single(x2, "X2");
    def.mode = CoordinateFrameInput{Frame{field_of(x1, 0), field_of(x2, 0)}};
  } else {
    std::set<std::string> allowed(StructureFunctions::names.begin(), StructureFunctions::names.end());
    reject_unknown_keys(*algebra, "algebra", allowed);
    std::array<Expr, 6> values;
    for (std::size_t i = 0; i < 6; ++i) {
      auto it = algebra->find(StructureFunctions::names[i]);
      if (it == algebra->end()) continue;
      single(it->second, StructureFunctions::names[i]);
      values[i] = expr_of(it->second, 0);
      for (const auto& sym : values[i].free_symbols())
        if (!chart.is_parameter(sym))
          file_error(ErrorKind::InvalidInput, it->second.line,
                     "abstract structure functions must be constant; '" + sym + "' is a coordinate");
    }
    def.mode = AbstractAlgebraInput{StructureFunctions::from_values(values)};
  }

  if (const Section* s = section("symmetry")) {
    for (const auto& [key, value] : *s) {
      const bool numbered = key.size() > 1 && key[0] == 'Z' &&
                            key.find_first_not_of("0123456789", 1) == std::string::npos;
      if (key != "Z" && !numbered) file_error(ErrorKind::InvalidInput, value.line, "unknown key '" + key + "' in [symmetry]");
    }
    // "Z" first (list order), then Z1, Z2, ... in numeric order.
    if (auto it = s->find("Z"); it != s->end())
      for (std::size_t i = 0; i < it->second.items.size(); ++i) {
        def.symmetries.push_back(field_of(it->second, i));
        def.symmetry_sources.push_back(it->second.items[i]);
      }
    std::vector<std::pair<long, const RawValue*>> numbered;
    for (const auto& [key, value] : *s)
      if (key != "Z") numbered.emplace_back(std::stol(key.substr(1)), &value);
    std::sort(numbered.begin(), numbered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [n, value] : numbered) {
      def.symmetries.push_back(field_of(*value, 0));
      def.symmetry_sources.push_back(single(*value, "Z" + std::to_string(n)));
    }
    if (def.symmetries.empty()) throw Error(ErrorKind::MissingSection, "[symmetry] lists no fields");
  }

  if (const Section* s = section("transform")) {
    reject_unknown_keys(*s, "transform", {"theta", "scale"});
    if (auto it = s->find("theta"); it != s->end()) {
      single(it->second, "theta");
      def.theta = expr_of(it->second, 0);
    }
    if (auto it = s->find("scale"); it != s->end()) {
      const std::string name = single(it->second, "scale");
      if (!chart.is_parameter(name))
        file_error(ErrorKind::InvalidInput, it->second.line, "scale '" + name + "' must be a declared parameter");
      def.scale = name;
    }
  }
  return def;
}

StructureDefinition load_structure_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_structure_file(buffer.str());
}

}  // namespace sublorentz
