#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "ncgrass/report.hpp"
#include "ncgrass/suites.hpp"

using namespace ncgrass;

// The JSON layout frozen here is the output contract; the renderer has
// to match these bytes, not the other way around.

namespace {

SuiteConfig small_config(const std::string& suite) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = 1;
  cfg.timing = false;
  return cfg;
}

CheckRecord record(const std::string& suite, const std::string& identity,
                   const std::string& params, Outcome status) {
  CheckRecord r;
  r.suite = suite;
  r.identity = identity;
  r.anchor = "ncg:" + suite + "/" + identity;
  r.params = params;
  r.status = status;
  r.elapsed_ms = 0;
  return r;
}

}  // namespace

TEST_CASE("config validation rejects malformed requests") {
  SuiteConfig cfg;
  CHECK_NOTHROW(validate_config(cfg));

  cfg = SuiteConfig{};
  cfg.suite = "bogus";
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.trials = -1;
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.max_n = 0;
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.dims = {};
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.dims = {{2, 2}};
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);

  cfg = SuiteConfig{};
  cfg.dims = {{3, 0}};
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("empty report renders the frozen layout") {
  VerificationReport rep;
  const std::string expected =
      "{\n"
      "  \"artifact\": {\"name\": \"ncgrass\", \"version\": \"0.1.0\"},\n"
      "  \"config\": {\"suite\": \"all\", \"seed\": 42, \"dims\": \"4:2\", "
      "\"trials\": 10, \"max_n\": 5},\n"
      "  \"summary\": {\"pass\": 0, \"fail\": 0, \"undefined\": 0, "
      "\"degenerate\": 0},\n"
      "  \"checks\": []\n"
      "}\n";
  CHECK(render_json(rep) == expected);
}

TEST_CASE("json strings are escaped and keys stay ordered") {
  VerificationReport rep;
  rep.checks.push_back(record("s", "id", "a\"b\\c\nd", Outcome::Pass));
  const std::string doc = render_json(rep);

  CHECK(doc.find("\"params\": \"a\\\"b\\\\c\\nd\"") != std::string::npos);

  const auto line_start = doc.find("{\"suite\": \"s\"");
  REQUIRE(line_start != std::string::npos);
  const std::string line = doc.substr(line_start, doc.find('\n', line_start) - line_start);
  std::size_t prev = 0;
  for (const char* key : {"\"suite\"", "\"identity\"", "\"anchor\"", "\"params\"",
                          "\"status\"", "\"elapsed_ms\""}) {
    const auto at = line.find(key);
    REQUIRE(at != std::string::npos);
    CHECK(at > prev);
    prev = at;
  }
}

TEST_CASE("reports sort into a canonical order and count outcomes") {
  VerificationReport rep;
  rep.checks.push_back(record("b", "z", "p=1", Outcome::Fail));
  rep.checks.push_back(record("a", "z", "p=2", Outcome::Pass));
  rep.checks.push_back(record("a", "z", "p=1", Outcome::Undefined));
  rep.checks.push_back(record("a", "y", "p=9", Outcome::Degenerate));
  rep.sort_checks();

  CHECK(rep.checks[0].identity == "y");
  CHECK(rep.checks[1].params == "p=1");
  CHECK(rep.checks[2].params == "p=2");
  CHECK(rep.checks[3].suite == "b");
  CHECK(rep.count(Outcome::Pass) == 1);
  CHECK(rep.count(Outcome::Fail) == 1);
  CHECK(rep.count(Outcome::Undefined) == 1);
  CHECK(rep.count(Outcome::Degenerate) == 1);
}

TEST_CASE("text rendering carries the same summary") {
  VerificationReport rep;
  rep.checks.push_back(record("s", "id", "n=2", Outcome::Pass));
  const std::string doc = render_text(rep);
  CHECK(doc.find("id") != std::string::npos);
  CHECK(doc.find("pass 1") != std::string::npos);
}

TEST_CASE("suite runs are reproducible for a fixed seed") {
  const auto a = run_suites(small_config("classical"));
  const auto b = run_suites(small_config("classical"));
  CHECK(render_json(a) == render_json(b));
}

TEST_CASE("every suite dispatches and its checks hold") {
  for (const char* name :
       {"quasidet", "quasiplucker", "quantum", "specialization", "classical"}) {
    const auto rep = run_suites(small_config(name));
    INFO("suite " << name);
    CHECK(!rep.checks.empty());
    CHECK(rep.count(Outcome::Fail) == 0);
    for (const auto& c : rep.checks) CHECK(c.suite == name);
  }
  const auto all = run_suites(small_config("all"));
  std::size_t total = 0;
  for (const char* name :
       {"quasidet", "quasiplucker", "quantum", "specialization", "classical"})
    total += run_suites(small_config(name)).checks.size();
  CHECK(all.checks.size() == total);
}

TEST_CASE("a corrupted sum assembly surfaces as named failures") {
  setenv("NCGRASS_FAULT", "1", 1);
  const auto faulted = run_suites(small_config("quantum"));
  unsetenv("NCGRASS_FAULT");

  CHECK(faulted.count(Outcome::Fail) > 0);
  bool named = false;
  for (const auto& c : faulted.checks)
    if (c.status == Outcome::Fail) {
      CHECK(c.anchor == "ncg:quantum/bracket-symmetry");
      named = true;
    }
  CHECK(named);

  const auto clean = run_suites(small_config("quantum"));
  CHECK(clean.count(Outcome::Fail) == 0);
}

TEST_CASE("report bytes match the stored golden run") {
  SuiteConfig cfg;
  cfg.suite = "all";
  cfg.seed = 42;
  cfg.dims = {{4, 2}};
  cfg.trials = 2;
  cfg.timing = false;

  std::ifstream in(std::string(NCGRASS_GOLDEN_DIR) + "/report.json",
                   std::ios::binary);
  REQUIRE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(render_json(run_suites(cfg)) == golden.str());
}

TEST_CASE("command line front end honors its exit contract") {
  const std::string tool = NCGRASS_TOOL_PATH;
  const auto run_tool = [&](const std::string& prefix, const std::string& args) {
    const std::string cmd = prefix + tool + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };

  CHECK(run_tool("", "--suite classical --trials 1") == 0);
  CHECK(run_tool("", "--help") == 0);
  CHECK(run_tool("", "--dims nope") == 2);
  CHECK(run_tool("", "--dims 2:4") == 2);
  CHECK(run_tool("", "--suite nope") == 2);
  CHECK(run_tool("", "--unknown-flag") == 2);
  CHECK(run_tool("", "--out /nonexistent/dir/r.json") == 2);
  CHECK(run_tool("NCGRASS_FAULT=1 ", "--suite quantum --trials 1") == 1);
}
