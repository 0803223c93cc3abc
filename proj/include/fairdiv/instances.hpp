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

#ifndef FAIRDIV_INSTANCES_HPP_
#define FAIRDIV_INSTANCES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/core.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

enum class Domain {
  kGeneral,
  kNonZero,
  kBinary,
  kIdenticalCardinal,
  kIdenticalOrdinal,
  kBorda,
  kLexicographic,
};

std::string domain_name(Domain domain);
Domain parse_domain(std::string_view name);
std::vector<Domain> all_domains();

struct DomainSpec {
  Domain domain = Domain::kGeneral;
  std::size_t agents = 2;
  std::size_t items = 2;
  std::uint64_t seed = 0;
  // Random values are k/denominator with k in [0, value_bound*denominator].
  std::int64_t value_bound = 3;
  std::int64_t denominator = 6;
};

// Deterministic in the spec. Throws std::invalid_argument for unsatisfiable
// specs.
Instance generate(const DomainSpec& spec);

// Independent membership test for generated matrices.
bool satisfies_domain(const Matrix& u, Domain domain);

// Like everywhere except on listed bid profiles, where an explicit
// distribution is returned instead.
class ConstructedMechanism {
 public:
  struct Override {
    BidProfile bids;
    AllocationDistribution distribution;
  };

  ConstructedMechanism(std::string name, Mechanism base,
                       std::vector<Override> overrides);

  // Product distribution with independent items; each column of `p` must sum
  // to 1 over positive bidders.
  static AllocationDistribution from_assignment(const AssignmentMatrix& p);

  const std::string& name() const { return name_; }
  const std::vector<Override>& overrides() const { return overrides_; }
  Mechanism mechanism() const;

 private:
  std::string name_;
  Mechanism base_;
  std::vector<Override> overrides_;
};

struct WorkedExample {
  int id;
  Instance instance;
  std::optional<ConstructedMechanism> mechanism;
};

// Example 2 gives o2 to agent 2 with `example2_probability` (in (1/2, 1]);
// Example 4 uses `example4_epsilon` (in (0, 1)).
WorkedExample worked_example(int id,
                           const Rational& example2_probability = Rational(3, 4),
                           const Rational& example4_epsilon = Rational(1, 4));

// Text format: "n m" then n rows of m rationals ("p" or "p/q"); lines
// starting with '#' are comments.
Matrix parse_matrix(std::string_view text);
Instance parse_instance(std::string_view text);
BidProfile parse_bids(std::string_view text);
std::string serialize_matrix(const Matrix& m);
inline std::string serialize_instance(const Instance& instance) {
  return serialize_matrix(instance.utilities());
}

struct SuiteEntry {
  std::string label;
  Instance instance;
};

using Suite = std::vector<SuiteEntry>;

// Calls `visit` for every n x m matrix with entries in {0..max_value} whose
// columns each contain a positive entry. With `agent_symmetric`, only matrices
// with rows in nondecreasing lexicographic order are visited (one per orbit
// under relabelling agents). Returns the number visited.
std::uint64_t for_each_exhaustive(std::size_t agents, std::size_t items,
                                  int max_value, bool agent_symmetric,
                                  const std::function<void(const Instance&)>& visit);

// Manifest lines (one per suite block, '#' comments):
//   <domain> <n> <m> <seed> <count> [value_bound] [denominator]
//   example <id>
//   instance <n> <m> <n*m values, row by row>
//   exhaustive <n> <m> <max_value>
// Seeded lines expand to `count` instances with seeds seed, seed+1, ...
Suite parse_manifest(std::string_view text, const WorkBound& bound = {});

// Built-in manifests: "general", "identical", "binary" (table blocks, each
// with `count` random instances plus fixed extras), and "small-suite".
std::string builtin_manifest(std::string_view name, std::size_t count = 200);
std::vector<std::string> builtin_suite_names();

}  // namespace fairdiv

#endif  // FAIRDIV_INSTANCES_HPP_
