#include <fstream>

#include "doctest.h"
#include "sublorentz/fixtures.hpp"
#include "sublorentz/parser.hpp"

using namespace sublorentz;

TEST_CASE("expressions") {
  Chart chart;
  CHECK(parse_expr("2*x^2 - y/3", chart) == Expr(2) * Expr::symbol("x").pow(2) - Expr::symbol("y") / 3);
  CHECK(parse_expr("x^(-2)", chart) == Expr(1) / Expr::symbol("x").pow(2));
  CHECK(parse_expr("-(x + 1)", chart) == -Expr::symbol("x") - 1);
  CHECK(parse_expr("exp(z)*cosh(x)", chart) == Expr::exp(Expr::symbol("z")) * Expr::cosh(Expr::symbol("x")));
  CHECK(parse_expr("  1 /  ( 2 ) ", chart) == Expr::rational(1, 2));
}

TEST_CASE("expression errors carry positions") {
  Chart chart;
  auto kind_of = [&](const char* text) {
    try {
      parse_expr(text, chart);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error for " << text);
    return ErrorKind::InvalidInput;
  };
  CHECK(kind_of("x +") == ErrorKind::SyntaxError);
  CHECK(kind_of("w + 1") == ErrorKind::UnknownSymbol);
  CHECK(kind_of("0.5*x") == ErrorKind::SyntaxError);
  CHECK(kind_of("x/(y - y)") == ErrorKind::DivisionByZero);
  try {
    parse_expr("x + * y", chart);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }
}

TEST_CASE("parameters are declared separately") {
  Chart chart({"x", "y", "z"}, {"k"});
  CHECK(parse_expr("k*x", chart).depends_on("k"));
  CHECK_THROWS_AS(Chart({"x", "x", "z"}, {}), Error);
  CHECK_THROWS_AS(Chart({"x", "y"}, {}), Error);
}

TEST_CASE("vector fields") {
  Chart chart;
  const VectorField v = parse_vector_field("d/dx + (1/2)*y^2*d/dz", chart);
  CHECK(v[0] == Expr(1));
  CHECK(v[1] == Expr());
  CHECK(v[2] == Expr::symbol("y").pow(2) / 2);
  CHECK(render_field(v, chart) == "d/dx + y^2/2*d/dz");
  CHECK(parse_vector_field(render_field(v, chart), chart) == v);
  CHECK_THROWS_AS(parse_vector_field("d/dx*d/dy", chart), Error);
  CHECK_THROWS_AS(parse_expr("d/dx", chart), Error);
}

TEST_CASE("json rendering") {
  Chart chart;
  CHECK(render_expr(parse_expr("x/2", chart), RenderFormat::Json) == "\"x/2\"");
  CHECK(render_expr(parse_expr("x", chart), RenderFormat::Plain, {{"x", "q"}}) == "q");
}

TEST_CASE("structure file in coordinate mode") {
  const auto def = parse_structure_file(R"(
# comment
[chart]
coordinates = ["x", "y", "z"]
[frame]
X1 = "d/dx + (1/2)*y^2*d/dz"
X2 = "d/dy - (1/2)*x*y*d/dz"
[symmetry]
Z = ["-(1/y)*d/dx + y*d/dz"]
[transform]
theta = "x*y"
)");
  REQUIRE(def.is_coordinate());
  CHECK(def.symmetries.size() == 1);
  CHECK(def.symmetry_sources[0] == "-(1/y)*d/dx + y*d/dz");
  CHECK(def.theta.has_value());
}

TEST_CASE("structure file in abstract mode") {
  const auto def = parse_structure_file("[params]\nnames = [\"k\"]\n[algebra]\nc012 = \"-k\"\nc021 = \"-k\"\n");
  REQUIRE_FALSE(def.is_coordinate());
  CHECK(def.constants().c011 == Expr());
  CHECK(def.constants().c012 == -Expr::symbol("k"));
}

TEST_CASE("structure file errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_structure_file(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Indeterminate;
  };
  CHECK(kind_of("[chart]\n") == ErrorKind::MissingSection);
  CHECK(kind_of("[frame]\nX1 = \"d/dx\"\nX2 = \"d/dy\"\n[algebra]\nc011 = \"0\"\n") == ErrorKind::DuplicateMode);
  CHECK(kind_of("[algebra]\nc011 = \"x\"\n") != ErrorKind::Indeterminate);
  CHECK(kind_of("[frame]\nX1 = \"d/dx\"\n") != ErrorKind::Indeterminate);
  CHECK(kind_of("[weird]\n") == ErrorKind::InvalidInput);
  CHECK(kind_of("[frame]\nX1 = d/dx\n") == ErrorKind::SyntaxError);
}

TEST_CASE("built-in fixtures match the data directory") {
  for (const auto& name : builtin_structure_names()) {
    std::ifstream in(std::string(SUBLORENTZ_DATA_DIR) + "/" + name + ".toml");
    REQUIRE(in);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(builtin_structure_text(name) == text);
    CHECK_NOTHROW(builtin_structure(name));
  }
  CHECK_THROWS_AS(builtin_structure("nope"), Error);
}
