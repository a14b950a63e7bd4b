#include <catch_amalgamated.hpp>

#include "tkk/cli.hpp"
#include "tkk/spec_io.hpp"

using namespace tkk;

namespace {

const std::string kFixtures = TKK_FIXTURES;

cli::RunResult run(std::string command, std::vector<std::string> args, std::string base, std::string format = "machine",
                   std::string kind = "") {
  cli::CommandConfig c;
  c.command = std::move(command);
  c.args = std::move(args);
  c.base = std::move(base);
  c.format = std::move(format);
  c.kind = std::move(kind);
  return c.command.empty() ? cli::RunResult{} : cli::run(c);
}

Json parse(const cli::RunResult& r) { return Json::parse(r.report); }

}  // namespace

TEST_CASE("parse_spec examples") {
  SpecObject sl = parse_spec_text(R"({"construct": "sl", "n": 2, "base": {"construct": "scalar"}})");
  REQUIRE(std::holds_alternative<Algebra>(sl));
  CHECK(std::get<Algebra>(sl).dim() == 3);
  CHECK(std::get<Algebra>(sl).kind == AlgebraKind::lie);

  try {
    parse_spec(kFixtures + "/malformed_zero_den.json");
    FAIL("accepted 1/0");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("products[0].terms[0].c") != std::string::npos);
  }

  try {
    parse_spec(kFixtures + "/mat2_tagged_jordan.json");
    FAIL("accepted a noncommutative jordan table");
  } catch (const ValidationError& e) {
    REQUIRE(e.report().witness);
    CHECK(e.report().witness->lhs != e.report().witness->rhs);
  }
}

TEST_CASE("parse errors carry lines and fields") {
  try {
    parse_spec_text("{\n  \"basis\": [\"1\"],\n  \"products\": [,]\n}", "inline");
    FAIL("malformed JSON accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_WITH(parse_spec_text(R"({"basis": ["1"]})"), Catch::Matchers::ContainsSubstring("'products'"));
  CHECK_THROWS_WITH(parse_spec_text(R"({"basis": ["1"], "products": [{"i": 3, "j": 0, "terms": []}]})"),
                    Catch::Matchers::ContainsSubstring("products[0].i"));
  CHECK_THROWS_WITH(parse_spec_text(R"({"construct": "nope"})"), Catch::Matchers::ContainsSubstring("nope"));
  CHECK_THROWS_AS(parse_spec(kFixtures + "/does_not_exist.json"), ParseError);
}

TEST_CASE("negative-control fixtures are rejected") {
  for (const char* f : {"neg_jordan_mat2_plus", "neg_jordan_double_plus", "neg_lie_sl2", "neg_lie_sl2_dual",
                        "neg_jts_mat2", "neg_jts_double"}) {
    CAPTURE(f);
    CHECK_THROWS_AS(parse_spec(kFixtures + "/" + f + ".json"), ValidationError);
  }
  CHECK_NOTHROW(parse_spec(kFixtures + "/mat2_plus.json"));
  CHECK_NOTHROW(parse_spec(kFixtures + "/mat2_raw.json"));
}

TEST_CASE("export round trip") {
  for (const auto& name : fixture_names()) {
    Algebra a = fixture(name);
    Algebra b = algebra_from_json(algebra_to_json(a));
    CHECK(a.table == b.table);
    CHECK(a.space == b.space);
    CHECK(a.kind == b.kind);
    CHECK(a.unit == b.unit);
  }
  TripleSystem t = triple_from_associative(fixture("mat2"));
  TripleSystem u = triple_from_json(triple_to_json(t));
  CHECK(t.gamma == u.gamma);
  Algebra sl = algebra_from_json(Json::parse(R"({"construct": "sl", "n": 3, "base": {"construct": "fixture", "name": "dual"}})"));
  CHECK(sl.dim() == 16);
  Algebra tf = algebra_from_json(Json::parse(R"({"construct": "truncated_free", "generators": ["x", "y"], "degree": 2, "relations": ["xy - yx"]})"));
  CHECK(tf.dim() == 6);
}

TEST_CASE("run examples") {
  cli::RunResult v = run("verify", {"thm32"}, "scalar");
  CHECK(v.exit_code == 0);
  Json j = parse(v);
  CHECK(j["schema_version"] == cli::kSchemaVersion);
  CHECK(j["result"]["iso"] == true);
  CHECK(j["result"]["dim_uce"] == 3);
  CHECK(j["result"]["dim_tkk"] == 3);

  cli::RunResult c = run("check", {}, kFixtures + "/mat2_raw.json", "text", "jordan");
  CHECK(c.exit_code != 0);
  CHECK(c.report.find("witness") != std::string::npos);

  cli::RunResult h = run("hc1", {}, "scalar", "text");
  CHECK(h.exit_code == 0);
  CHECK(h.report.find("hc1_dim: 0") != std::string::npos);
}

TEST_CASE("commands and exit codes") {
  CHECK(run("check", {}, "mat2", "machine", "associative").exit_code == 0);
  CHECK(run("check", {}, "mat2", "machine", "jts").exit_code == 0);
  CHECK(run("check", {}, kFixtures + "/neg_lie_sl2.json").exit_code == cli::failed);
  CHECK(run("check", {}, kFixtures + "/malformed_zero_den.json").exit_code == cli::usage);
  CHECK(run("build", {"sl"}, "dual").exit_code == 0);
  CHECK(run("build", {"tkk"}, "grassmann2").exit_code == 0);
  CHECK(run("build", {"uce"}, "mat2").exit_code == 0);
  CHECK(run("build", {"nothing"}, "mat2").exit_code == cli::usage);
  CHECK(run("verify", {"thm99"}, "scalar").exit_code == cli::usage);
  CHECK(run("verify", {"thm32"}, "no_such_base").exit_code == cli::usage);
  Json h2 = parse(run("h2", {}, "grassmann2"));
  CHECK(h2["result"]["h2_dim"] == 2);
  CHECK(h2["result"]["hc1_dim"] == 2);
  Json g = parse(run("growth", {}, "scalar"));
  CHECK(g["result"]["rows"].size() == 3);

  cli::CommandConfig guard;
  guard.command = "verify";
  guard.args = {"thm41"};
  guard.base = "grassmann2";
  guard.max_dim = 100;
  CHECK(cli::run(guard).exit_code == cli::error);

  cli::CommandConfig st;
  st.command = "steinberg";
  st.base = "dual";
  CHECK(cli::run(st).exit_code == 0);
}

TEST_CASE("reports are deterministic") {
  for (const char* base : {"scalar", "grassmann2"}) {
    cli::RunResult a = run("verify", {"thm32"}, base);
    cli::RunResult b = run("verify", {"thm32"}, base);
    CHECK(a.report == b.report);
  }
  CHECK(run("build", {"tkk"}, "free2d2").report == run("build", {"tkk"}, "free2d2").report);
}
