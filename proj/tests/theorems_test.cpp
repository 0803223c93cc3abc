// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "fairdiv/theorems.hpp"

using namespace fairdiv;

namespace {

TheoremOptions quick() {
  TheoremOptions options;
  options.suite_count = 6;
  options.exhaustive_items = 2;
  return options;
}

Suite examples() {
  Suite suite = parse_manifest("example 1\nexample 2\nexample 3\nnonzero 2 2 5 3\n");
  return suite;
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("mechanism list") {
  auto mechanisms = theorem_mechanisms();
  CHECK(mechanisms.size() == 8);
  CHECK(mechanisms[6].name() == "example2");
  CHECK(mechanisms[7].name() == "example4");
}

TEST_CASE("impossibility on the first example") {
  auto result = check_theorem9(quick());
  CHECK(result.passed);
  CHECK(result.id == "theorem-9");
  CHECK(result.failure.empty());
}

TEST_CASE("frontier characterization on small exhaustive suites") {
  auto result = check_theorem6(quick());
  CHECK(result.passed);
  CHECK(result.cases > 0);
}

TEST_CASE("bounded envy on exhaustive binary suites") {
  auto result = check_corollary1(quick());
  CHECK(result.passed);
  CHECK(result.cases > 0);
}

TEST_CASE("biconditionals on the worked examples") {
  auto mechanisms = theorem_mechanisms();
  Suite suite = examples();
  for (auto check : {check_theorem3, check_theorem4, check_theorem5, check_theorem7,
                     check_theorem8, check_corollary2}) {
    auto result = check(mechanisms, suite, quick());
    CAPTURE(result.id);
    CAPTURE(result.failure);
    CHECK(result.passed);
    CHECK(result.findings.size() >= mechanisms.size());
  }
}

TEST_CASE("report exit codes") {
  TheoremReport report;
  report.results.push_back({"a", "", true, 3, 0, {}, "", 0});
  CHECK(report.exit_code() == 0);
  report.results.push_back({"b", "", true, 0, 0, {}, "", 0});
  CHECK(report.exit_code() == 2);
  report.results.push_back({"c", "", false, 1, 0, {}, "x", 0});
  CHECK(report.exit_code() == 1);
  CHECK_FALSE(report.passed());
}

}
