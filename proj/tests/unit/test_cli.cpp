#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sublorentz/cli.hpp"

using namespace sublorentz;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args, int expected_code) {
  args.emplace_back("--format");
  args.emplace_back("json");
  const Outcome o = invoke(args);
  CHECK(o.code == expected_code);
  return json::parse(o.out);
}

std::string data(const std::string& name) { return std::string(SUBLORENTZ_DATA_DIR) + "/" + name; }

const json* find_check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("analyze martinet") {
  const json r = invoke_json({"analyze", data("martinet.toml")}, kPass);
  CHECK(r["report_version"] == 1);
  CHECK(r["invariants"]["chi"] == "1/(4*y^4)");
  CHECK(r["invariants"]["kappa"] == "-5/(2*y^2)");
  CHECK(r["apparatus"]["omega"] == "-y/3*dx + x/3*dy + 2/(3*y)*dz");
  CHECK(r["apparatus"]["X0"] == "-1/y*d/dx + y*d/dz");
  CHECK(r["brackets"]["[X2,X1]"] == "X0 + 1/y*X1");
  CHECK(r["brackets"]["[X2,X0]"] == "1/y^2*X1");
  CHECK(r["brackets"]["[X1,X0]"] == "0");
  CHECK(r["reeb_field_symmetry"]["verdict"] == "neither");
  for (const auto& c : r["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("builtin names resolve") {
  const json r = invoke_json({"classify", "heisenberg_abstract"}, kPass);
  CHECK(r["classification"]["label"] == "Heisenberg");
  const json s = invoke_json({"analyze", "sl2_e"}, kPass);
  CHECK(s["classification"]["label"] == "SL2Cover");
  CHECK(s["invariants"]["kappa"] == "k");
  CHECK(find_check(s, "d eta = d kappa ^ nu0") != nullptr);
}

TEST_CASE("symmetry command") {
  const Outcome o = invoke({"symmetry", "heisenberg"});
  CHECK(o.out.find("verdict: isometry") != std::string::npos);
  const json r = invoke_json({"symmetry", "heisenberg"}, kCheckFailed);
  REQUIRE(r["symmetries"].size() == 2);
  CHECK(r["symmetries"][0]["verdict"] == "isometry");
  CHECK(r["symmetries"][1]["verdict"] == "conformal");
  CHECK(r["symmetries"][1]["mu"] == "2");
  CHECK(r["symmetries"][1]["binomial_sums"]["2"] == json::array({"-4", "0", "4"}));
  CHECK(invoke({"symmetry", "sl2_e"}).code == kInputError);
  const json m = invoke_json({"symmetry", "martinet"}, kPass);
  CHECK(m["symmetries"][0]["verdict"] == "neither");
}

TEST_CASE("rotate and dilate") {
  const json r = invoke_json({"rotate", "martinet", "--theta", "x*y"}, kPass);
  CHECK(r["invariants"]["rotated"]["kappa"] == "-5/(2*y^2)");
  const json a = invoke_json({"rotate", "sl2_n", "--theta", "2"}, kPass);
  CHECK(a["invariants"]["rotated"]["chi"] == "-k^2");
  CHECK(invoke({"rotate", "sl2_n", "--theta", "x"}).code == kInputError);

  const json d = invoke_json({"dilate", "martinet", "--scale", "s"}, kPass);
  CHECK(d["invariants"]["dilated"]["kappa"] == "-5*s^2/(2*y^2)");
  bool some_stated_law_fails = false;
  for (const auto& c : d["stated_laws"]) some_stated_law_fails |= c["status"] == "fail";
  CHECK(some_stated_law_fails);
  CHECK(invoke({"dilate", "martinet", "--scale", "x"}).code == kInputError);
}

TEST_CASE("algebra command") {
  const json f = invoke_json({"algebra", "sl2_f"}, kPass);
  CHECK(f["inertia"] == json::array({2, 1, 0}));
  CHECK(f["half_killing"][0][0] == "1");
  const json e = invoke_json({"algebra", "sl2_e", "--kappa", "-1/2"}, kPass);
  CHECK(e["killing_det"] == "-1/2");
  CHECK(invoke({"algebra", "sl2_e", "--kappa", "x"}).code == kInputError);
  CHECK(invoke({"algebra", "nope"}).code == kInputError);

  const json c = invoke_json({"algebra", "conformal8"}, kCheckFailed);
  CHECK(c["jacobi"] == "pass");
  CHECK(c["killing_det"] == "-2239488");
  CHECK((*find_check(c, "det K = -3048192"))["status"] == "fail");
  CHECK((*find_check(c, "dim 8, Jacobi, det K != 0, inertia (5,3,0)"))["status"] == "pass");
}

TEST_CASE("ode command") {
  const json r = invoke_json({"ode", "--Q", "x*p"}, kPass);
  CHECK(r["invariants"]["kappa"] == "0");
  CHECK(r["structure_functions"]["c121"] == "-x/2");
  CHECK(invoke({"ode", "--Q", "x +"}).code == kInputError);
}

TEST_CASE("catalog") {
  const json r = invoke_json({"catalog"}, kPass);
  CHECK(r["algebras"].size() == 6);
  CHECK(r["structures"].size() == 6);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == kInputError);
  CHECK(invoke({"analyze"}).code == kInputError);
  CHECK(invoke({"analyze", "martinet", "--format", "xml"}).code == kInputError);
  const Outcome o = invoke({"analyze", "missing.toml"});
  CHECK(o.code == kInputError);
  CHECK(o.err.rfind("error: ", 0) == 0);
  CHECK(invoke({"--help"}).code == kPass);
}

TEST_CASE("reports are deterministic and formats agree") {
  const Outcome a = invoke({"analyze", "martinet", "--format", "json"});
  const Outcome b = invoke({"analyze", "martinet", "--format", "json"});
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  const Outcome t = invoke({"analyze", "martinet"});
  CHECK(t.code == a.code);
  for (const auto& c : j["checks"])
    CHECK(t.out.find("[" + c["status"].get<std::string>() + "] " + c["name"].get<std::string>()) != std::string::npos);
}
