#include <doctest.h>

#include "classprod/constructions.hpp"
#include "classprod/errors.hpp"
#include "classprod/report_json.hpp"

using namespace classprod;

TEST_CASE("verifier reports round trip through JSON") {
  for (auto spec : {"q8", "es:3", "sym:4", "alt:5", "cyclic:1"}) {
    CAPTURE(spec);
    for (auto const& r : check_all(build_group(spec))) {
      Json j = to_json(r);
      CHECK(report_from_json(Json::parse(j.dump())) == r);
    }
  }
}

TEST_CASE("report field order is stable") {
  auto r = check_theorem_a(quaternion8());
  Json j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) {
    keys.push_back(it.key());
  }
  CHECK(keys == std::vector<std::string>{"statement_id", "group_id", "hypotheses_met",
                                         "pairs_checked", "verdict", "witnesses",
                                         "notes", "sub_verdicts"});
  CHECK(j["verdict"] == "holds");
  CHECK(j["sub_verdicts"][0]["clause"] == "in-particular");
  CHECK(j["sub_verdicts"][0]["verdict"] == "discrepancy");
}

TEST_CASE("malformed reports are rejected") {
  Json j = to_json(check_theorem_a(quaternion8()));
  Json missing = j;
  missing.erase("group_id");
  CHECK_THROWS_AS(report_from_json(missing), ParseError);
  Json bad_verdict = j;
  bad_verdict["verdict"] = "maybe";
  CHECK_THROWS_AS(report_from_json(bad_verdict), ParseError);
  Json bad_value = j;
  bad_value["witnesses"] = Json::array({Json{{"elements", {1}}, {"names", {"i"}},
                                             {"values", {{"x", 1.5}}}}});
  CHECK_THROWS_AS(report_from_json(bad_value), ParseError);
}

TEST_CASE("verdict names") {
  for (auto v : {Verdict::holds, Verdict::fails, Verdict::vacuous, Verdict::discrepancy}) {
    CHECK(verdict_from_string(to_string(v)) == v);
  }
  CHECK_THROWS_AS(verdict_from_string("unknown"), Error);
}
