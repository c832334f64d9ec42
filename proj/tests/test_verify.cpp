#include <doctest.h>

#include <fstream>
#include <sstream>

#include "grace/errors.hpp"
#include "grace/report.hpp"
#include "grace/verify.hpp"

using namespace grace;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string json_bytes(const VerificationReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

// Minimal validator for the schema subset docs/report.schema.json uses:
// type, required, enum, minimum, additionalProperties, items.
bool validates(const nlohmann::json& value, const nlohmann::json& schema,
               std::string* why) {
  if (schema.contains("type")) {
    const std::string type = schema["type"];
    const bool ok = (type == "object" && value.is_object()) ||
                    (type == "array" && value.is_array()) ||
                    (type == "string" && value.is_string()) ||
                    (type == "integer" && value.is_number_integer()) ||
                    (type == "boolean" && value.is_boolean());
    if (!ok) {
      *why = "type mismatch, expected " + type + " got " + value.dump();
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema["enum"]) found = found || option == value;
    if (!found) {
      *why = "enum mismatch: " + value.dump();
      return false;
    }
  }
  if (schema.contains("minimum") && value.is_number_integer() &&
      value.get<long long>() < schema["minimum"].get<long long>()) {
    *why = "minimum violated: " + value.dump();
    return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          *why = "missing required key " + key.get<std::string>();
          return false;
        }
    const nlohmann::json props =
        schema.contains("properties") ? schema["properties"] : nlohmann::json::object();
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (!props.contains(it.key())) {
        if (schema.contains("additionalProperties") &&
            schema["additionalProperties"] == false) {
          *why = "unexpected key " + it.key();
          return false;
        }
        continue;
      }
      if (!validates(it.value(), props[it.key()], why)) {
        *why = it.key() + ": " + *why;
        return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items"))
    for (const auto& element : value)
      if (!validates(element, schema["items"], why)) return false;
  return true;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("lemma a sweep at small n") {
  const VerificationReport r3 = verify_lemma_a(3);
  CHECK(r3.verdict == "PASS");
  CHECK(r3.domain_size == 2);
  CHECK(r3.checked == 2);
  CHECK(r3.premise_holds == 1);  // "0,0,1" has Aut order 1 inside order 2
  CHECK(r3.counterexamples.empty());

  const VerificationReport r1 = verify_lemma_a(1);
  CHECK(r1.verdict == "PASS");
  CHECK(r1.domain_size == 1);
  CHECK(r1.premise_holds == 0);  // vacuous

  for (int n = 2; n <= 5; ++n) CHECK(verify_lemma_a(n).verdict == "PASS");
}

TEST_CASE("lemma b sweep at small n") {
  const VerificationReport r2 = verify_lemma_b(2);
  CHECK(r2.verdict == "PASS");
  CHECK(r2.domain_size == 4);
  CHECK(r2.premise_holds == 0);

  const VerificationReport r3 = verify_lemma_b(3);
  CHECK(r3.verdict == "PASS");
  CHECK(r3.domain_size == 27);
  CHECK(r3.checked == 27);

  RunConfig parallel;
  parallel.workers = 4;
  const VerificationReport seq = verify_lemma_b(4);
  const VerificationReport par = verify_lemma_b(4, parallel);
  CHECK(seq.verdict == "PASS");
  CHECK(seq.domain_size == 256);
  CHECK(seq.premise_holds == par.premise_holds);
  CHECK(seq.counterexamples.empty());
  CHECK(par.counterexamples.empty());
}

TEST_CASE("lemma sweeps respect the cap") {
  RunConfig config;
  config.max_n = 4;
  CHECK_THROWS_AS(verify_lemma_a(5, config), SizeCapError);
  CHECK_THROWS_AS(verify_lemma_b(5, config), SizeCapError);
}

TEST_CASE("swap remark sweep reports without asserting") {
  const VerificationReport r = verify_swap_remark(3);
  CHECK(r.verdict == "PASS");
  CHECK(r.domain_size == 2);
  REQUIRE(r.swap_instances.size() == 2);

  // "0,0,0" is the equality-premise instance: swapped to "0,0,1"
  const SwapInstance& star = r.swap_instances[0];
  CHECK(star.f.to_literal() == "0,0,0");
  CHECK_FALSE(star.premise_already_strict);
  REQUIRE(star.g.has_value());
  CHECK(star.g->to_literal() == "0,0,1");
  CHECK(star.aut_strict_after_swap);
  CHECK(star.grl_f == 2);
  CHECK(star.grl_g == 4);
  CHECK_FALSE(star.grl_equal);
  CHECK(r.flagged >= 1);

  // "0,0,1" already satisfies the strict premise: skipped, counted
  const SwapInstance& path = r.swap_instances[1];
  CHECK(path.f.to_literal() == "0,0,1");
  CHECK(path.premise_already_strict);
  CHECK(r.premise_holds == 1);

  CHECK_THROWS_AS(verify_swap_remark(2), SizeCapError);
}

TEST_CASE("swap remark sweep is deterministic") {
  const std::string a = json_bytes(verify_swap_remark(4));
  const std::string b = json_bytes(verify_swap_remark(4));
  CHECK(a == b);
}

TEST_CASE("trees corollary sweep") {
  const VerificationReport r4 = verify_trees_corollary(4);
  CHECK(r4.verdict == "PASS");
  CHECK(r4.domain_size == 6);

  const VerificationReport r2 = verify_trees_corollary(2);
  CHECK(r2.verdict == "PASS");
  CHECK(r2.domain_size == 1);
}

TEST_CASE("cycles corollary") {
  CHECK_THROWS_AS(verify_cycles_corollary(0, 2), ParseError);
  CHECK_THROWS_AS(verify_cycles_corollary(1, 1), ParseError);

  const VerificationReport r = verify_cycles_corollary(1, 2);
  CHECK(r.verdict == "PASS");
  CHECK(r.n == 9);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->size() == 9);
}

TEST_CASE("reports serialize to identical bytes across runs") {
  CHECK(json_bytes(verify_lemma_b(4)) == json_bytes(verify_lemma_b(4)));
  CHECK(json_bytes(verify_lemma_a(5)) == json_bytes(verify_lemma_a(5)));
}

TEST_CASE("golden report fixtures") {
  const std::string dir(GRACE_GOLDEN_DIR);
  CHECK(json_bytes(verify_lemma_a(3)) == read_file(dir + "/verify_a_n3.json"));
  CHECK(json_bytes(verify_lemma_a(4)) == read_file(dir + "/verify_a_n4.json"));
  CHECK(json_bytes(verify_lemma_b(2)) == read_file(dir + "/verify_b_n2.json"));
  CHECK(json_bytes(verify_lemma_b(3)) == read_file(dir + "/verify_b_n3.json"));
  CHECK(json_bytes(verify_lemma_b(4)) == read_file(dir + "/verify_b_n4.json"));
  CHECK(json_bytes(verify_swap_remark(4)) == read_file(dir + "/verify_swap_n4.json"));
}

TEST_CASE("every emitted report validates against the committed schema") {
  const nlohmann::json schema =
      nlohmann::json::parse(read_file(std::string(GRACE_DOCS_DIR) + "/report.schema.json"));
  std::string why;
  for (const VerificationReport& r :
       {verify_lemma_a(4), verify_lemma_b(3), verify_swap_remark(4),
        verify_trees_corollary(5), verify_cycles_corollary(1, 2)}) {
    const bool ok = validates(report_to_json(r), schema, &why);
    INFO(r.lemma, ": ", why);
    CHECK(ok);
  }
}

TEST_CASE("sampled lemma b run records its policy") {
  RunConfig config;
  config.seed = 5;
  const VerificationReport r = verify_lemma_b(6, config);
  CHECK(r.verdict == "PASS");
  REQUIRE(r.sample_size.has_value());
  CHECK(*r.sample_size == 10000);
  CHECK(r.domain_size == 10000);
  CHECK(r.seed == 5);
  const nlohmann::json j = report_to_json(r);
  CHECK(j["config"]["sample_size"] == 10000);
  CHECK(j["config"]["seed"] == 5);
}

}  // TEST_SUITE
