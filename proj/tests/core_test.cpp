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
#include "fairdiv/core.hpp"

using namespace fairdiv;

namespace {

const Instance kExample1{{1, 2}, {2, 1}};
const Instance kExample3{{1, 4}, {2, 3}};

// Example 1 allocations: both to agent 1, both to agent 2, o1 to 1 and o2
// to 2, o2 to 1 and o1 to 2.
const Allocation kPi1({0, 0});
const Allocation kPi2({1, 1});
const Allocation kPi3({0, 1});
const Allocation kPi4({1, 0});

AllocationDistribution like_example1() {
  return AllocationDistribution(2, 2, {{kPi1, Rational(1, 4)},
                                       {kPi2, Rational(1, 4)},
                                       {kPi3, Rational(1, 4)},
                                       {kPi4, Rational(1, 4)}});
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(Matrix{{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(Matrix{{-1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(Matrix(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS((Matrix{{1, 2}, {1}}), std::invalid_argument);
  Instance empty{Matrix(2, 0)};
  CHECK(empty.items() == 0);
  CHECK(kExample1.prefix(1).utilities() == Matrix{{1}, {2}});
}

TEST_CASE("bid profiles") {
  BidProfile bids = BidProfile::sincere(kExample1);
  CHECK(bids.positive_bidders(0) == std::vector<int>{0, 1});
  BidProfile zeroed = bids.with_bid(0, 0, Rational(0));
  CHECK(zeroed.positive_bidders(0) == std::vector<int>{1});
  CHECK_FALSE(BidProfile(Matrix{{0}, {0}}).has_positive_bidder(0));
  std::vector<Rational> row{5, 6};
  CHECK(bids.with_row(1, row).bid(1, 1) == Rational(6));
  CHECK(bids.prefix(1).items() == 1);
}

TEST_CASE("bundle utility") {
  CHECK(bundle_utility(kPi4, 0, 0, kExample1.utilities()) == Rational(2));
  CHECK(bundle_utility(kPi2, 0, 0, kExample1.utilities()) == Rational(0));
  CHECK(bundle_utility(kPi3, 1, 1, kExample3.utilities()) == Rational(3));
  CHECK(bundle_utility(kPi1, 1, 0, kExample1.utilities()) == Rational(3));
  CHECK(utility_vector(kPi4, kExample1.utilities()) == std::vector<Rational>{2, 2});
}

TEST_CASE("allocation rendering and validation") {
  CHECK(kPi3.to_string(2) == "({o1},{o2})");
  CHECK(kPi1.to_string(2) == "({o1,o2},{})");
  CHECK(Allocation({kDiscarded, 1}).to_string(2) == "({},{o2}) discarded {o1}");
  CHECK_THROWS(Allocation({2}).validate(2));
  CHECK_NOTHROW(Allocation({kDiscarded}).validate(1));
}

TEST_CASE("distribution validation") {
  CHECK_THROWS(AllocationDistribution(2, 2, {{kPi1, Rational(1, 2)}}));
  CHECK_THROWS(AllocationDistribution(2, 2, {{kPi1, Rational(0)}, {kPi2, Rational(1)}}));
  CHECK_THROWS(AllocationDistribution(2, 1, {{kPi1, Rational(1)}}));
  CHECK_THROWS(AllocationDistribution(2, 2, {}));
  auto d = like_example1();
  CHECK(d.probability(kPi3) == Rational(1, 4));
  CHECK(d.probability(Allocation({kDiscarded, 0})).is_zero());
}

TEST_CASE("marginals and expected utilities") {
  auto like = like_example1();
  AssignmentMatrix p = marginals(like);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(p.p.at(i, j) == Rational(1, 2));
  }
  auto ubar = expected_utilities(p, kExample1.utilities());
  CHECK(ubar.own(0) == Rational(3, 2));
  CHECK(ubar.own(1) == Rational(3, 2));
  CHECK(ubar.ubar.at(0, 1) == Rational(3, 2));

  auto osd = AllocationDistribution::degenerate(2, kPi1);
  AssignmentMatrix q = marginals(osd);
  CHECK(q.p == Matrix{{1, 1}, {0, 0}});
  auto u = expected_utilities(q, kExample1.utilities());
  CHECK(u.own(0) == Rational(3));
  CHECK(u.own(1) == Rational(0));
  CHECK(u.ubar.at(1, 0) == Rational(3));
  CHECK(expected_own_utility(osd, 0, kExample1.utilities()) == Rational(3));
}

TEST_CASE("prefix marginalisation and mixtures") {
  auto like = like_example1();
  auto first = like.marginalize_prefix(1);
  CHECK(first.size() == 2);
  CHECK(first.probability(Allocation({0})) == Rational(1, 2));
  auto mixed = mix({{Rational(1, 2), AllocationDistribution::degenerate(2, kPi1)},
                    {Rational(1, 2), AllocationDistribution::degenerate(2, kPi2)}});
  CHECK(mixed.probability(kPi1) == Rational(1, 2));
  CHECK(mixed.size() == 2);
}

TEST_CASE("priority orders") {
  CHECK(PriorityOrder::parse("2,1,3").order() == std::vector<int>{1, 0, 2});
  CHECK(PriorityOrder::parse("2,1,3").to_string() == "2,1,3");
  CHECK_THROWS(PriorityOrder::parse("1,1"));
  CHECK_THROWS(PriorityOrder::parse("1,x"));
  auto all = PriorityOrder::all(3);
  REQUIRE(all.size() == 6);
  CHECK(all.front().to_string() == "1,2,3");
  CHECK(all.back().to_string() == "3,2,1");
}

TEST_CASE("work bound") {
  WorkBound bound;
  bound.max_nodes = 10;
  CHECK_NOTHROW(bound.require(10, "test"));
  CHECK_THROWS_AS(bound.require(11, "test"), WorkBoundExceeded);
}

}
