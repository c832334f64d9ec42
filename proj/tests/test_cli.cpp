#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

#include "grace/cli.hpp"
#include "grace/errors.hpp"
#include "grace/labeling.hpp"

using namespace grace;

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_function_literal") {
  CHECK(parse_function_literal("0,0,1").n() == 3);
  CHECK(parse_function_literal(" 1 , 2 , 0 ").to_literal() == "1,2,0");
  CHECK_THROWS_AS(parse_function_literal(""), ParseError);
  CHECK_THROWS_AS(parse_function_literal("0,x,1"), ParseError);
  CHECK_THROWS_AS(parse_function_literal("0,,1"), ParseError);
  try {
    parse_function_literal("0,3,1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("index 1") != std::string::npos);
    CHECK(msg.find("3") != std::string::npos);
  }
}

TEST_CASE("beta subcommand emits a result object") {
  const CliRun r = run({"beta", "--f", "0,0,1"});
  REQUIRE(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["beta"] == 3);
  CHECK(j["graceful"] == true);
  const Labeling witness = Labeling::from_values(j["witness"].get<std::vector<int>>());
  const std::vector<int> labels = edge_label_set(parse_function_literal("0,0,1"), witness);
  CHECK(std::set<int>(labels.begin(), labels.end()).size() == 3);
}

TEST_CASE("certify subcommand") {
  const CliRun r = run({"certify", "--f", "0,1"});
  CHECK(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["certificate"] == false);
  CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("enumerate subcommand") {
  const CliRun r = run({"enumerate", "--n", "3"});
  CHECK(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 2);
  CHECK(j["members"] == nlohmann::json::array({"0,0,0", "0,0,1"}));
}

TEST_CASE("verify subcommand exit codes") {
  const CliRun pass = run({"verify", "--lemma", "a", "--n", "5"});
  CHECK(pass.status == 0);
  const nlohmann::json j = nlohmann::json::parse(pass.out);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["lemma"] == "a");
  CHECK_FALSE(j.contains("wall_time"));

  const CliRun unknown = run({"verify", "--lemma", "z", "--n", "3"});
  CHECK(unknown.status == 2);
}

TEST_CASE("identical invocations emit identical bytes") {
  const CliRun a = run({"verify", "--lemma", "b", "--n", "3"});
  const CliRun b = run({"verify", "--lemma", "b", "--n", "3"});
  CHECK(a.out == b.out);
  CHECK(a.status == 0);
}

TEST_CASE("csv sweep format has one row per instance") {
  const CliRun r = run({"--format", "csv", "verify", "--lemma", "swap", "--n", "4"});
  CHECK(r.status == 0);
  const std::size_t rows = std::count(r.out.begin(), r.out.end(), '\n');
  CHECK(rows == 1 + 6);  // header + one row per semigroup member at n=4
}

TEST_CASE("usage and config errors exit with 2") {
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"beta"}).status == 2);                      // missing --f
  CHECK(run({"--workers", "0", "beta", "--f", "0"}).status == 2);
  CHECK(run({"--format", "yaml", "beta", "--f", "0"}).status == 2);
  CHECK(run({"beta", "--f", "0,5,1"}).status == 2);      // out-of-range image
  const CliRun unwritable =
      run({"--output", "/nonexistent-dir/report.json", "beta", "--f", "0,0,1"});
  CHECK(unwritable.status == 2);
  CHECK(unwritable.err.find("/nonexistent-dir/report.json") != std::string::npos);
}

TEST_CASE("GRACE_MAX_N environment override") {
  setenv("GRACE_MAX_N", "3", 1);
  const CliRun capped = run({"beta", "--f", "0,0,1,2"});
  unsetenv("GRACE_MAX_N");
  CHECK(capped.status == 2);
  CHECK(capped.err.find("max_n") != std::string::npos);
  CHECK(run({"beta", "--f", "0,0,1,2"}).status == 0);
  CHECK(run({"--max-n", "2", "aut", "--f", "0,0,1"}).status == 2);
  CHECK(run({"--max-n", "2", "swap", "--f", "0,0,0"}).status == 2);
}

TEST_CASE("swap subcommand") {
  const CliRun r = run({"swap", "--f", "0,0,0"});
  REQUIRE(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["g"] == "0,0,1");
  CHECK(j["root"] == 1);

  const CliRun all = run({"swap", "--f", "0,0,0", "--candidates"});
  REQUIRE(all.status == 0);
  const nlohmann::json ja = nlohmann::json::parse(all.out);
  CHECK(ja["candidates"].size() == 2);

  CHECK(run({"swap", "--f", "0,0"}).status == 2);  // construction unavailable
}

TEST_CASE("subset-certify subcommand") {
  const CliRun r = run({"subset-certify", "--f", "0,0,1", "--m", "3"});
  REQUIRE(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["certificate"] == true);
  CHECK(j["m"] == 3);
  CHECK(run({"subset-certify", "--f", "0,0,1", "--m", "1"}).status == 2);
}

TEST_CASE("cycles subcommand") {
  const CliRun r = run({"cycles", "--s", "1", "--t", "2"});
  REQUIRE(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 9);
  CHECK(j["f"] == "0,2,3,4,1,6,7,8,5");
  CHECK(run({"cycles", "--s", "0", "--t", "2"}).status == 2);
}

TEST_CASE("aut and grl subcommands") {
  const CliRun aut = run({"aut", "--f", "0,0,0"});
  REQUIRE(aut.status == 0);
  const nlohmann::json ja = nlohmann::json::parse(aut.out);
  CHECK(ja["order"] == 2);
  CHECK(ja["elements"].size() == 2);

  const CliRun g = run({"grl", "--f", "0,0,1"});
  REQUIRE(g.status == 0);
  const nlohmann::json jg = nlohmann::json::parse(g.out);
  CHECK(jg["count"] == 4);
  CHECK(jg["representatives"].size() == 4);
}

}  // TEST_SUITE
