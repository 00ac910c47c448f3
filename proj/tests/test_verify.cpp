// SPDX-License-Identifier: Apache-2.0
#include "noma/verify.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

using namespace noma;

TEST_SUITE_BEGIN("verify");

TEST_CASE("all myth checks confirm the corrected claims") {
  const std::vector<MythReport> reports = run_all_myths(20240810);
  REQUIRE(reports.size() == 6);
  const int expected_ids[] = {1, 2, 3, 4, 5, 9};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(reports[i].myth);
    CHECK(reports[i].myth == expected_ids[i]);
    CHECK(reports[i].verdict == Verdict::kConfirmed);
    CHECK(!reports[i].evidence.empty());
    CHECK(reports[i].seed == 20240810);
  }
}

TEST_CASE("checks are deterministic in their seed") {
  for (int id : {1, 2, 3, 4, 5, 9}) {
    CAPTURE(id);
    CHECK(check_myth(id, 7).to_json() == check_myth(id, 7).to_json());
  }
}

TEST_CASE("reports serialize with the documented schema") {
  const MythReport report = check_myth3(123);
  const std::string json = report.to_json();
  for (const char* field :
       {"\"myth\"", "\"verdict\"", "\"seed\"", "\"evidence\"", "\"label\"",
        "\"values\""}) {
    CHECK(json.find(field) != std::string::npos);
  }
  CHECK(json.find("\"confirmed\"") != std::string::npos);

  const std::vector<MythReport> reports = {check_myth1(5), check_myth2(5)};
  const std::string all = myths_to_json(reports);
  CHECK(all.find("\"myth\": 1") != std::string::npos);
  CHECK(all.find("\"myth\": 2") != std::string::npos);
}

TEST_CASE("unknown myth ids are rejected") {
  CHECK_THROWS_AS(check_myth(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_myth(0, 1), std::invalid_argument);
}

TEST_CASE("verdict aggregation drives the exit contract") {
  std::vector<MythReport> reports = run_all_myths(99);
  CHECK(all_confirmed(reports));
  // A synthetic counterexample must flip the aggregate (the CLI turns this
  // into a nonzero exit code).
  reports[2].verdict = Verdict::kCounterexampleFound;
  CHECK(!all_confirmed(reports));
  CHECK(std::string(to_string(Verdict::kCounterexampleFound)) ==
        "counterexample-found");
}

TEST_SUITE_END();
