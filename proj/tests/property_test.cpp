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
#include "properties.hpp"

namespace {

constexpr int kCases = 1000;

void require_clean(const props::Outcome& outcome) {
  INFO(outcome.name);
  INFO(outcome.first_failure);
  CHECK(outcome.cases == kCases);
  CHECK(outcome.failures == 0);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("normalization") { require_clean(props::normalization(101, kCases)); }

TEST_CASE("non-wastefulness") { require_clean(props::non_wastefulness(202, kCases)); }

TEST_CASE("like marginal law") { require_clean(props::like_marginal_law(303, kCases)); }

TEST_CASE("shared envy-freeness equals envy-freeness without zeros") {
  require_clean(props::sef_equals_ef(404, kCases));
}

TEST_CASE("envy-free ex post implies ex ante") {
  auto outcome = props::efp_implies_efa(505, kCases);
  require_clean(outcome);
  CHECK(outcome.premises > kCases / 10);
}

TEST_CASE("ex post equivalence implies ex ante equivalence") {
  auto outcome = props::ex_post_implies_ex_ante(606, kCases);
  require_clean(outcome);
  CHECK(outcome.premises >= kCases);
}

TEST_CASE("agreement with the brute-force reference") {
  require_clean(props::reference_agreement(707, kCases));
}

TEST_CASE("efficient ex ante implies efficient ex post") {
  auto outcome = props::pea_implies_pep(808, kCases);
  require_clean(outcome);
  CHECK(outcome.premises > 0);
}

}
