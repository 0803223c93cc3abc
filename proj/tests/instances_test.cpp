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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "fairdiv/instances.hpp"

using namespace fairdiv;

TEST_SUITE("instances") {

TEST_CASE("domain names round trip") {
  for (Domain d : all_domains()) CHECK(parse_domain(domain_name(d)) == d);
  CHECK(domain_name(Domain::kIdenticalCardinal) == "identical-cardinal");
  CHECK_THROWS(parse_domain("uniform"));
}

TEST_CASE("generation is deterministic and in domain") {
  for (Domain d : all_domains()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t m = 1; m <= 4; ++m) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          DomainSpec spec{d, n, m, seed, 3, 2};
          CAPTURE(domain_name(d));
          CAPTURE(n);
          CAPTURE(m);
          Instance a = generate(spec);
          CHECK(a == generate(spec));
          CHECK(satisfies_domain(a.utilities(), d));
          CHECK(a.agents() == n);
          CHECK(a.items() == m);
        }
      }
    }
  }
  DomainSpec one{Domain::kGeneral, 3, 4, 1, 3, 2};
  DomainSpec two = one;
  two.seed = 2;
  CHECK_FALSE(generate(one) == generate(two));
}

TEST_CASE("structured domains") {
  Instance borda = generate({Domain::kBorda, 3, 4, 9});
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Rational> row(borda.utilities().row(i).begin(), borda.utilities().row(i).end());
    std::sort(row.begin(), row.end());
    CHECK(row == std::vector<Rational>{1, 2, 3, 4});
  }
  Instance lex = generate({Domain::kLexicographic, 2, 3, 4});
  for (std::size_t i = 0; i < 2; ++i) {
    std::set<Rational> row(lex.utilities().row(i).begin(), lex.utilities().row(i).end());
    CHECK(row == std::set<Rational>{1, 2, 4});
  }
  Instance identical = generate({Domain::kIdenticalCardinal, 3, 3, 5});
  CHECK(std::equal(identical.utilities().row(0).begin(), identical.utilities().row(0).end(),
                   identical.utilities().row(2).begin()));
  CHECK(satisfies_domain(Matrix{{1, 0}, {1, 1}}, Domain::kBinary));
  CHECK_FALSE(satisfies_domain(Matrix{{1, 0}, {1, 1}}, Domain::kNonZero));
  CHECK_FALSE(satisfies_domain(Matrix{{2, 1}, {1, 2}}, Domain::kIdenticalCardinal));
  CHECK(satisfies_domain(Matrix{{2, 1}, {5, 3}}, Domain::kIdenticalOrdinal));
}

TEST_CASE("parse and serialize") {
  const char* text = "# example\n2 2\n1 2\n2 1/2\n";
  Instance instance = parse_instance(text);
  CHECK(instance.utility(1, 1) == Rational(1, 2));
  CHECK(serialize_instance(instance) == "2 2\n1 2\n2 1/2\n");
  CHECK(parse_instance(serialize_instance(instance)) == instance);
  CHECK(parse_matrix("2 0\n").cols() == 0);
  CHECK_THROWS_AS(parse_instance("1 1\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("1 2\n1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("1 1\n-1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix(""), std::invalid_argument);
  // Bids may leave an item unliked.
  CHECK_FALSE(parse_bids("2 1\n0\n0\n").has_positive_bidder(0));
}

TEST_CASE("worked examples") {
  CHECK(worked_example(1).instance == Instance{{1, 2}, {2, 1}});
  CHECK_FALSE(worked_example(1).mechanism);
  CHECK(worked_example(3).instance == Instance{{1, 4}, {2, 3}});

  auto ex2 = worked_example(2);
  REQUIRE(ex2.mechanism);
  auto d2 = ex2.mechanism->mechanism()(BidProfile::sincere(ex2.instance));
  CHECK(d2.probability(Allocation({0, 1})) == Rational(3, 4));
  CHECK(d2.probability(Allocation({0, 0})) == Rational(1, 4));
  // Off the listed profile it behaves like its base rule.
  auto other = ex2.mechanism->mechanism()(BidProfile(Matrix{{1, 1}, {1, 1}}));
  CHECK(other.size() == 4);
  CHECK_THROWS(worked_example(2, Rational(1, 2)));

  const Rational eps(1, 10);
  auto ex4 = worked_example(4, Rational(3, 4), eps);
  auto d4 = ex4.mechanism->mechanism()(BidProfile::sincere(ex4.instance));
  const Matrix& u = ex4.instance.utilities();
  CHECK(expected_own_utility(d4, 0, u) == Rational(3) - Rational(2) * eps);
  CHECK(expected_own_utility(d4, 1, u) == eps);
  CHECK_THROWS(worked_example(5));
}

TEST_CASE("product distributions from assignment matrices") {
  AssignmentMatrix p{Matrix{{Rational(1, 2), 1}, {Rational(1, 2), 0}}};
  auto d = ConstructedMechanism::from_assignment(p);
  CHECK(d.size() == 2);
  CHECK(d.probability(Allocation({1, 0})) == Rational(1, 2));
  CHECK(marginals(d) == p);
}

TEST_CASE("exhaustive enumeration") {
  std::size_t all = for_each_exhaustive(2, 2, 1, false, [](const Instance&) {});
  CHECK(all == 9);  // three liked columns per item
  std::size_t seen = 0;
  std::size_t orbits = for_each_exhaustive(2, 2, 1, true, [&](const Instance& instance) {
    ++seen;
    auto r0 = instance.utilities().row(0);
    auto r1 = instance.utilities().row(1);
    CHECK_FALSE(std::lexicographical_compare(r1.begin(), r1.end(), r0.begin(), r0.end()));
  });
  CHECK(orbits == seen);
  CHECK(orbits == 5);  // four unordered pairs of distinct rows plus (11, 11)
}

TEST_CASE("manifests") {
  Suite suite = parse_manifest(
      "# comment\nexample 1\ninstance 2 2 1 1 0 1/2\nbinary 2 3 7 3\nexhaustive 2 1 1\n");
  REQUIRE(suite.size() == 1 + 1 + 3 + 3);
  CHECK(suite[0].label == "example1");
  CHECK(suite[1].instance.utility(1, 1) == Rational(1, 2));
  CHECK(suite[2].label == "binary 2x3 seed=7");
  CHECK(suite[4].label == "binary 2x3 seed=9");
  CHECK_THROWS(parse_manifest("instance 2 2 1 1\n"));
  CHECK_THROWS(parse_manifest("general 2 2\n"));
  WorkBound tight;
  tight.max_nodes = 10;
  CHECK_THROWS_AS(parse_manifest("exhaustive 3 3 3\n", tight), WorkBoundExceeded);

  for (const auto& name : builtin_suite_names()) {
    CAPTURE(name);
    CHECK_FALSE(parse_manifest(builtin_manifest(name, 10)).empty());
  }
  CHECK(parse_manifest(builtin_manifest("binary", 25)).size() == 26);
  CHECK_THROWS(builtin_manifest("nope"));
}

}
