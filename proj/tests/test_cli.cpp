#include "cli.hpp"

#include "polyz/presentation.hpp"
#include "polyz/presets.hpp"

#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using nlohmann::json;

namespace {

struct Result
{
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = polyz::cli::run(args, out, err);
  std::string s = out.str();
  if (!s.empty() && s.back() == '\n')
    s.pop_back();
  return {code, s, err.str()};
}

const json &schema()
{
  static const json s = [] {
    std::ifstream in(POLYZ_SOURCE_DIR "/docs/cli-output.schema.json");
    REQUIRE(in);
    return json::parse(in);
  }();
  return s;
}

// Enough of JSON Schema for the output schema: type, required, properties,
// additionalProperties, items, enum, const, pattern, oneOf and local $ref.
bool conforms(const json &v, const json &s)
{
  if (s.contains("$ref")) {
    std::string ref = s["$ref"];
    return conforms(v, schema()["$defs"][ref.substr(ref.rfind('/') + 1)]);
  }
  if (s.contains("oneOf")) {
    int hits = 0;
    for (const auto &alt : s["oneOf"])
      hits += conforms(v, alt);
    if (hits != 1)
      return false;
  }
  if (s.contains("type")) {
    auto is = [&](const std::string &t) {
      if (t == "object") return v.is_object();
      if (t == "array") return v.is_array();
      if (t == "string") return v.is_string();
      if (t == "boolean") return v.is_boolean();
      if (t == "integer") return v.is_number_integer();
      if (t == "number") return v.is_number();
      if (t == "null") return v.is_null();
      return false;
    };
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto &t : s["type"])
        ok = ok || is(t);
    } else {
      ok = is(s["type"]);
    }
    if (!ok)
      return false;
  }
  if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
    return false;
  if (s.contains("const") && v != s["const"])
    return false;
  if (s.contains("pattern") && !std::regex_match(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
    return false;
  if (s.contains("items"))
    for (const auto &e : v)
      if (!conforms(e, s["items"]))
        return false;
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto &k : s["required"])
        if (!v.contains(k))
          return false;
    for (const auto &[k, e] : v.items()) {
      if (s.contains("properties") && s["properties"].contains(k)) {
        if (!conforms(e, s["properties"][k]))
          return false;
      } else if (s.value("additionalProperties", true) == false) {
        return false;
      }
    }
  }
  return true;
}

json run_json(std::vector<std::string> args)
{
  args.push_back("--json");
  Result r = run(args);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == args[0]);
  CHECK(conforms(j, schema()));
  return j;
}

} // namespace

TEST_CASE("examples")
{
  Result c = run({"collect", "--group", "g2", "g2*g1"});
  CHECK(c.code == 0);
  CHECK(c.out == "g1^-1*g2");

  Result p = run({"pow", "--group", "b1", "[0,1,1]", "2"});
  CHECK(p.code == 0);
  CHECK(p.out == "[-1,2,2]");

  Result a = run({"aut-classify", "--group", "b1", "--matrix", "[[1,0,0],[0,2,0],[0,0,1]]"});
  CHECK(a.code == 1);
  CHECK(a.err.find("not an automorphism") != std::string::npos);
}

TEST_CASE("arithmetic commands")
{
  CHECK(run({"mul", "--group", "g2", "[3,1]", "[5,2]"}).out == "[-2,3]");
  CHECK(run({"mul", "--group", "g2", "g1^3*g2", "g1^5*g2^2"}).out == "g1^-2*g2^3");
  CHECK(run({"inv", "--group", "g2", "g1*g2"}).out == "g1*g2^-1");
  CHECK(run({"pow", "--group", "g2", "[4,2]", "-3"}).out == "[-12,-6]");
  CHECK(run({"pow", "--group", "z", "g1", "100000000000000000000"}).out == "g1^100000000000000000000");
  CHECK(run({"central", "--group", "a0", "[0,0,2]"}).out == "true");
  CHECK(run({"central", "--group", "a1", "[0,0,2]"}).out == "false");
}

TEST_CASE("automorphism commands")
{
  Result c = run({"aut-classify", "--group", "g2", "--matrix", "[[1,3],[0,-1]]"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("alpha(3)", 0) == 0);
  CHECK(c.out.find("out-class: [alpha(1)]") != std::string::npos);

  CHECK(run({"aut-compose", "--group", "g2", "alpha(1)", "alpha(1)"}).out == "gamma(2)");
  CHECK(run({"aut-inner", "--group", "g2", "g1"}).out == "gamma(2)");
  CHECK(run({"out-class", "--group", "g2", "gamma(-7)"}).out.rfind("class: [beta(1)]", 0) == 0);

  Result b1 = run({"aut-classify", "--group", "b1", "--matrix", "[[1,0,1],[0,0,1],[0,1,0]]"});
  CHECK(b1.code == 0);
  CHECK(b1.out.rfind("b1:alpha(a=0; A=[[0,1],[1,0]])", 0) == 0);

  // Matrices on non-family groups go through the engine.
  Result zxz = run({"aut-classify", "--group", "zxz", "--matrix", "[[2,1],[1,1]]"});
  CHECK(zxz.code == 0);
  CHECK(zxz.out.find("inverse: [[1,-1],[-1,2]]") != std::string::npos);
  CHECK(run({"aut-classify", "--group", "zxz", "--matrix", "[[2,0],[0,1]]"}).code == 1);
}

TEST_CASE("witness commands")
{
  Result w = run({"iso-witness", "--group", "g2", "--alpha", "alpha(1)", "--element", "g1"});
  CHECK(w.code == 0);
  CHECK(w.out.find("source twist: [[1,3],[0,-1]]") != std::string::npos);

  Result v = run({"iso-verify", "--group", "g2", "--alpha", "alpha(1)", "--element", "g1", "--count", "200"});
  CHECK(v.code == 0);
  CHECK(v.out.find("multiplicativity failures: 0") != std::string::npos);

  CHECK(run({"iso-verify", "--group", "zxz", "--alpha", "[[0,1],[1,0]]", "--psi", "[[1,1],[0,1]]"}).code == 0);
  CHECK(run({"iso-verify", "--group", "b1", "--alpha", "gamma(a=0; B=[[1,0],[0,1]])", "--element", "[1,1,1]",
             "--count", "100"})
            .code == 0);
  CHECK(run({"iso-witness", "--group", "g2", "--alpha", "alpha(1)"}).code == 2);
  CHECK(run({"iso-witness", "--group", "g2", "--alpha", "[[1,0],[0,2]]", "--element", "g1"}).code == 1);
}

TEST_CASE("bench")
{
  Result e = run({"bench", "--group", "g2", "mul", "--count", "0"});
  CHECK(e.code == 0);
  CHECK(e.out.find("results equal: yes") != std::string::npos);

  CHECK(run({"bench", "--group", "b1", "pow", "--count", "50", "--repeats", "2"}).code == 0);
  CHECK(run({"bench", "--group", "b1", "pow", "--count", "50", "--corrupt-kernel"}).code == 1);
  CHECK(run({"bench", "--group", "b1", "div"}).code == 2);
}

TEST_CASE("exit codes")
{
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"collect", "g1"}).code == 2);                                   // no group
  CHECK(run({"collect", "--group", "nope", "g1"}).code == 2);                // unknown preset
  CHECK(run({"collect", "--group", "g2", "g3"}).code == 2);                  // bad generator
  CHECK(run({"collect", "--group", "g2", "[1,2,3]"}).code == 2);             // wrong rank
  CHECK(run({"collect", "--group", "g2", "--presentation", "x", "g1"}).code == 2);
  CHECK(run({"pow", "--group", "g2", "g1"}).code == 2);                      // missing exponent
  CHECK(run({"pow", "--group", "g2", "g1", "two"}).code == 2);
  CHECK(run({"aut-compose", "--group", "g2", "alpha(1)", "epsilon(2)"}).code == 2);
  CHECK(run({"aut-classify", "--group", "g2", "--matrix", "[[1,0],[0"}).code == 2);
  CHECK(run({"aut-classify", "--group", "g2", "--matrix", "[[1,0],[0,2]]"}).code == 1);
  CHECK(run({"aut-compose", "--group", "a1", "alpha(a=0; b=1; c=0; d=0)", "alpha(a=0; c=0; d=0)"}).code == 1);
  CHECK(run({"out-class", "--group", "zxz", "[[1,0],[0,1]]"}).code == 2);
}

TEST_CASE("presentation files")
{
  std::string path = (std::filesystem::temp_directory_path() / "polyz_test_cli.pres").string();
  {
    std::ofstream f(path);
    f << "<g1,g2 | g2*g1 = g1^-1*g2>\n";
  }
  Result r = run({"collect", "--presentation", path, "g2*g1"});
  CHECK(r.code == 0);
  CHECK(r.out == "g1^-1*g2");
  std::remove(path.c_str());
  CHECK(run({"collect", "--presentation", path, "g1"}).code == 2);
}

TEST_CASE("JSON output follows the schema")
{
  json c = run_json({"collect", "--group", "g2", "g2*g1"});
  CHECK(c["group"] == "g2");
  CHECK(c["result"]["word"] == json::array({"-1", "1"}));
  CHECK(c["result"]["text"] == "g1^-1*g2");

  json p = run_json({"pow", "--group", "z", "g1", "123456789012345678901234567890"});
  CHECK(p["result"]["word"][0] == "123456789012345678901234567890");

  run_json({"mul", "--group", "b0", "[1,2,3]", "g3"});
  run_json({"inv", "--group", "a1", "g1*g2*g3"});
  run_json({"central", "--group", "b1", "[0,2,0]"});
  json a = run_json({"aut-classify", "--group", "g2", "--matrix", "[[-1,2],[0,1]]"});
  CHECK(a["result"]["family"] == "beta(2)");
  CHECK(a["result"]["inner"] == true);
  run_json({"aut-classify", "--group", "zxz", "--matrix", "[[0,1],[1,0]]"});
  run_json({"aut-compose", "--group", "a0", "beta(a=1; b=0; c=1)", "gamma(a=2; b=3; c=0)"});
  run_json({"aut-inner", "--group", "a1", "g2"});
  run_json({"out-class", "--group", "b0", "beta(a=3; M=[[0,1],[1,0]])"});
  run_json({"iso-witness", "--group", "g2", "--alpha", "alpha(1)", "--psi", "gamma(1)"});
  json v = run_json({"iso-verify", "--group", "g2", "--alpha", "alpha(1)", "--element", "g1", "--count", "20"});
  CHECK(v["result"]["report"]["ok"] == true);
  run_json({"bench", "--group", "a0", "mul", "--count", "20", "--repeats", "1"});

  // A malformed envelope is rejected by the checker.
  CHECK_FALSE(conforms(json{{"command", "collect"}, {"group", "g2"}}, schema()));
  CHECK_FALSE(conforms(json{{"command", "collect"}, {"group", "g2"}, {"result", {{"word", {1}}, {"text", "g1"}}}},
                       schema()));
}

TEST_CASE("collect output is a fixed point")
{
  for (const auto &name : polyz::preset_names()) {
    polyz::Tower t = polyz::preset(name);
    for (int i = 0; i < 60; ++i) {
      // random raw word, not in normal form
      std::string word;
      int len = int(polyz::test::uniform(0, 8));
      for (int k = 0; k < len; ++k)
        word += (k ? "*g" : "g") + std::to_string(polyz::test::uniform(1, long(t.rank()))) + "^" +
                std::to_string(polyz::test::uniform(-9, 9));
      Result once = run({"collect", "--group", name, word});
      REQUIRE(once.code == 0);
      Result twice = run({"collect", "--group", name, once.out});
      CHECK(twice.out == once.out);
      CHECK(t.collect(polyz::parse_word(word, t.rank())) ==
            t.collect(polyz::parse_word(once.out, t.rank())));
    }
  }
}
