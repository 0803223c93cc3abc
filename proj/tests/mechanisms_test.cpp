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

#include <array>

#include "doctest.h"
#include "fairdiv/mechanisms.hpp"
#include "reference.hpp"

using namespace fairdiv;

namespace {

const Instance kExample1{{1, 2}, {2, 1}};
const Instance kExample3{{1, 4}, {2, 3}};

AllocationDistribution run(std::string_view name, const Instance& instance,
                           std::optional<PriorityOrder> sigma = std::nullopt) {
  return mechanism_by_name(name, std::move(sigma))(BidProfile::sincere(instance));
}

using Expected = std::vector<std::pair<std::vector<int>, Rational>>;

AllocationDistribution dist(std::size_t agents, const Expected& support) {
  AllocationDistribution::Support s;
  for (const auto& [owners, p] : support) s.emplace(Allocation(owners), p);
  return AllocationDistribution(agents, support.front().first.size(), s);
}

}  // namespace

TEST_SUITE("mechanisms") {

TEST_CASE("example 1 supports") {
  CHECK(run("osd", kExample1, PriorityOrder::parse("1,2")) == dist(2, {{{0, 0}, 1}}));
  CHECK(run("osd", kExample1, PriorityOrder::parse("2,1")) == dist(2, {{{1, 1}, 1}}));
  CHECK(run("orp", kExample1) ==
        dist(2, {{{0, 0}, Rational(1, 2)}, {{1, 1}, Rational(1, 2)}}));
  CHECK(run("pareto-like", kExample1) ==
        dist(2, {{{0, 0}, Rational(1, 2)}, {{1, 1}, Rational(1, 4)}, {{1, 0}, Rational(1, 4)}}));
  CHECK(run("like", kExample1) == dist(2, {{{0, 0}, Rational(1, 4)},
                                           {{1, 1}, Rational(1, 4)},
                                           {{0, 1}, Rational(1, 4)},
                                           {{1, 0}, Rational(1, 4)}}));
  CHECK(run("balanced-like", kExample1) ==
        dist(2, {{{0, 1}, Rational(1, 2)}, {{1, 0}, Rational(1, 2)}}));
  CHECK(run("maximum-like", kExample1) == dist(2, {{{1, 0}, 1}}));
}

TEST_CASE("example 3 supports") {
  const Allocation split({0, 1});
  CHECK(run("pareto-like", kExample3).contains(split));
  CHECK_FALSE(run("osd", kExample3, PriorityOrder::parse("1,2")).contains(split));
  CHECK_FALSE(run("osd", kExample3, PriorityOrder::parse("2,1")).contains(split));
  CHECK_FALSE(run("orp", kExample3).contains(split));
  CHECK_FALSE(run("maximum-like", kExample3).contains(split));
  // Frozen from the brute-force reference.
  CHECK(run("maximum-like", kExample3) == dist(2, {{{1, 0}, 1}}));
  CHECK(run("balanced-like", kExample3) ==
        dist(2, {{{0, 1}, Rational(1, 2)}, {{1, 0}, Rational(1, 2)}}));
}

TEST_CASE("three-agent distributions frozen from the reference") {
  const Instance t{{1, 2, 0}, {2, 1, 1}, {0, 3, 1}};
  CHECK(run("balanced-like", t) == dist(3, {{{0, 1, 2}, Rational(1, 4)},
                                            {{0, 2, 1}, Rational(1, 4)},
                                            {{1, 0, 2}, Rational(1, 4)},
                                            {{1, 2, 1}, Rational(1, 8)},
                                            {{1, 2, 2}, Rational(1, 8)}}));
  CHECK(run("maximum-like", t) ==
        dist(3, {{{1, 2, 1}, Rational(1, 2)}, {{1, 2, 2}, Rational(1, 2)}}));
  CHECK(run("pareto-like", t) == dist(3, {{{0, 0, 1}, Rational(1, 8)},
                                          {{0, 0, 2}, Rational(1, 8)},
                                          {{0, 2, 1}, Rational(1, 8)},
                                          {{0, 2, 2}, Rational(1, 8)},
                                          {{1, 0, 1}, Rational(1, 12)},
                                          {{1, 0, 2}, Rational(1, 12)},
                                          {{1, 1, 1}, Rational(1, 6)},
                                          {{1, 2, 1}, Rational(1, 12)},
                                          {{1, 2, 2}, Rational(1, 12)}}));
  CHECK(run("orp", t) == dist(3, {{{0, 0, 1}, Rational(1, 6)},
                                  {{0, 0, 2}, Rational(1, 6)},
                                  {{0, 2, 2}, Rational(1, 6)},
                                  {{1, 1, 1}, Rational(1, 3)},
                                  {{1, 2, 2}, Rational(1, 6)}}));
}

TEST_CASE("fractional utilities frozen from the reference") {
  const Instance q{{Rational(1, 2), 3, 1}, {2, Rational(3, 2), 1}};
  CHECK(run("pareto-like", q) == dist(2, {{{0, 0, 0}, Rational(1, 2)},
                                          {{1, 0, 0}, Rational(1, 8)},
                                          {{1, 0, 1}, Rational(1, 8)},
                                          {{1, 1, 0}, Rational(1, 8)},
                                          {{1, 1, 1}, Rational(1, 8)}}));
  CHECK(run("maximum-like", q) ==
        dist(2, {{{1, 0, 0}, Rational(1, 2)}, {{1, 0, 1}, Rational(1, 2)}}));
}

TEST_CASE("feasibility rules on branches") {
  BidProfile ex1 = BidProfile::sincere(kExample1);
  std::array<int, 0> none{};
  std::array<int, 1> first_to_1{0};
  CHECK(FeasibilityRule::like().bind(ex1)(0, none) == FeasibleSet{0, 1});
  CHECK(FeasibilityRule::maximum_like().bind(ex1)(0, none) == FeasibleSet{1});
  CHECK(FeasibilityRule::balanced_like().bind(ex1)(1, first_to_1) == FeasibleSet{1});
  CHECK(FeasibilityRule::pareto_like().bind(ex1)(0, none) == FeasibleSet{0, 1});
  CHECK(FeasibilityRule::pareto_like().bind(ex1)(1, first_to_1) == FeasibleSet{0});

  BidProfile ex2(Matrix{{1, 1}, {0, 1}});
  CHECK(FeasibilityRule::like().bind(ex2)(0, none) == FeasibleSet{0});

  BidProfile three(Matrix{{1, 1}, {1, 1}, {1, 1}});
  std::array<int, 1> one_held{0};
  CHECK(FeasibilityRule::balanced_like().bind(three)(1, one_held) == FeasibleSet{1, 2});
  CHECK(FeasibilityRule::balanced_like().bind(three)(0, none) == FeasibleSet{0, 1, 2});

  BidProfile tie(Matrix{{2, 1}, {2, 1}});
  CHECK(FeasibilityRule::maximum_like().bind(tie)(0, none) == FeasibleSet{0, 1});
}

TEST_CASE("non-wasteful discard and edge shapes") {
  BidProfile zero_column(Matrix{{0, 1}, {0, 2}});
  auto d = allocate(FeasibilityRule::osd(PriorityOrder::parse("2,1")), zero_column);
  CHECK(d == dist(2, {{{kDiscarded, 1}, 1}}));
  auto like = allocate(FeasibilityRule::like(), zero_column);
  CHECK(like.probability(Allocation({kDiscarded, 0})) == Rational(1, 2));

  Instance one_agent{{3, 1}};
  CHECK(run("orp", one_agent) == dist(1, {{{0, 0}, 1}}));

  Instance empty{Matrix(2, 0)};
  for (const auto& name : mechanism_names()) {
    auto e = run(name, empty);
    CHECK(e.size() == 1);
    CHECK(e.probability(Allocation(std::vector<int>{})) == Rational(1));
  }
}

TEST_CASE("mixture identity and bounds") {
  const Instance t{{1, 2, 0}, {2, 1, 1}, {0, 3, 1}};
  BidProfile bids = BidProfile::sincere(t);
  std::vector<std::pair<Rational, AllocationDistribution>> parts;
  for (const auto& sigma : PriorityOrder::all(3)) {
    parts.emplace_back(Rational(1, 6), allocate(FeasibilityRule::osd(sigma), bids));
  }
  CHECK(orp_distribution(bids) == mix(parts));

  WorkBound small;
  small.max_nodes = 3;
  CHECK_THROWS_AS(allocate(FeasibilityRule::like(), bids, small), WorkBoundExceeded);
  WorkBound few_agents;
  few_agents.max_orp_agents = 2;
  CHECK_THROWS_AS(orp_distribution(bids, few_agents), WorkBoundExceeded);
  CHECK_THROWS(FeasibilityRule::osd(PriorityOrder::parse("1,2")).bind(bids));
  CHECK_THROWS(mechanism_by_name("serial"));
}

TEST_CASE("rule names") {
  CHECK(FeasibilityRule::like().name() == "like");
  CHECK(FeasibilityRule::osd(PriorityOrder::parse("2,1")).name().find("osd") == 0);
  CHECK(mechanism_by_name("orp").name() == "orp");
  CHECK(builtin_mechanisms().size() == 6);
}

TEST_CASE("agrees with the reference on examples") {
  for (const Instance& instance : {kExample1, kExample3, Instance{{1, 2, 0}, {2, 1, 1}, {0, 3, 1}}}) {
    auto u = ref::from(instance.utilities());
    BidProfile bids = BidProfile::sincere(instance);
    CHECK(ref::from(allocate(FeasibilityRule::like(), bids)) == ref::simulate(u, ref::like()));
    CHECK(ref::from(allocate(FeasibilityRule::balanced_like(), bids)) ==
          ref::simulate(u, ref::balanced()));
    CHECK(ref::from(allocate(FeasibilityRule::maximum_like(), bids)) ==
          ref::simulate(u, ref::maximum()));
    CHECK(ref::from(allocate(FeasibilityRule::pareto_like(), bids)) ==
          ref::simulate(u, ref::pareto()));
    CHECK(ref::from(orp_distribution(bids)) == ref::random_priority(u));
  }
}

}
