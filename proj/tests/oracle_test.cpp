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

#include <set>

#include "doctest.h"
#include "fairdiv/oracle.hpp"
#include "reference.hpp"

using namespace fairdiv;

namespace {

const Matrix kExample1{{1, 2}, {2, 1}};
const Matrix kExample3{{1, 4}, {2, 3}};

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumeration skips zero bidders") {
  CHECK(enumerate_allocations(kExample1).size() == 4);
  auto ex2 = enumerate_allocations(Matrix{{1, 1}, {0, 1}});
  REQUIRE(ex2.size() == 2);
  CHECK(ex2[0] == Allocation({0, 0}));
  CHECK(ex2[1] == Allocation({0, 1}));
  auto zero = enumerate_allocations(Matrix{{0, 1}, {0, 1}});
  REQUIRE(zero.size() == 2);
  CHECK(zero[0].owner(0) == kDiscarded);
  WorkBound tight;
  tight.max_nodes = 3;
  CHECK_THROWS_AS(enumerate_allocations(kExample1, tight), WorkBoundExceeded);
}

TEST_CASE("ex post efficiency on example 1") {
  CHECK(is_pep(Allocation({0, 0}), kExample1));
  CHECK(is_pep(Allocation({1, 0}), kExample1));
  CHECK_FALSE(is_pep(Allocation({0, 1}), kExample1));
  auto dominator = find_dominator(Allocation({0, 1}), kExample1);
  REQUIRE(dominator);
  CHECK(*dominator == Allocation({1, 0}));
  CHECK(pareto_dominates(Allocation({1, 0}), Allocation({0, 1}), kExample1));
  CHECK_FALSE(pareto_dominates(UtilityVector{2, 2}, UtilityVector{2, 2}));
}

TEST_CASE("frontier matches brute force") {
  auto f1 = pareto_frontier(kExample1);
  CHECK(std::set<Allocation>(f1.begin(), f1.end()) ==
        std::set<Allocation>{Allocation({0, 0}), Allocation({1, 1}), Allocation({1, 0})});
  auto f3 = pareto_frontier(kExample3);
  CHECK(f3.size() == 4);
  const Matrix t{{1, 2, 0}, {2, 1, 1}, {0, 3, 1}};
  auto ft = pareto_frontier(t);
  std::set<std::vector<int>> got;
  for (const auto& a : ft) got.insert(a.owners());
  CHECK(got == ref::frontier(ref::from(t)));
  CHECK(got.size() == 9);
}

TEST_CASE("ex ante efficiency on example 1") {
  CHECK_FALSE(is_pea({Rational(3, 2), Rational(3, 2)}, kExample1));
  CHECK(is_pea({3, 0}, kExample1));
  CHECK(is_pea({2, 2}, kExample1));
  CHECK(is_pea({Rational(5, 2), 1}, kExample1));
  auto lp = pea_lp({Rational(3, 2), Rational(3, 2)}, kExample1);
  CHECK(lp.objective > Rational(0));
  CHECK(pareto_dominates(lp.point, UtilityVector{Rational(3, 2), Rational(3, 2)}));
  CHECK_THROWS_AS(pea_lp({4, 4}, kExample1), std::invalid_argument);
}

TEST_CASE("ex ante efficiency agrees with the two-agent segment test") {
  const Matrix q{{Rational(1, 2), 3, 1}, {2, Rational(3, 2), 1}};
  auto u = ref::from(q);
  for (int a = 0; a <= 9; ++a) {
    for (int b = 0; b <= 9; ++b) {
      UtilityVector target{Rational(a, 2), Rational(b, 2)};
      bool achievable = true;
      try {
        pea_lp(target, q);
      } catch (const std::invalid_argument&) {
        achievable = false;
      }
      if (!achievable) continue;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(is_pea(target, q) ==
            ref::pea_two_agents({mpq_class(a, 2), mpq_class(b, 2)}, u));
    }
  }
}

}
