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

// Suite-level axiom checks and the reference verdict table for the built-in
// mechanisms over three utility domains.

#ifndef FAIRDIV_TABLE_HPP_
#define FAIRDIV_TABLE_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/axioms.hpp"
#include "fairdiv/instances.hpp"
#include "fairdiv/strategic.hpp"

namespace fairdiv {

enum class Axiom { kSP, kOSP, kEFA, kSEFA, kEFP, kSEFP, kBEFP, kPEA, kPEP };

// Lower-case CLI names: sp, osp, efa, sefa, efp, sefp, befp, pea, pep.
std::string axiom_name(Axiom axiom);
Axiom parse_axiom(std::string_view name);
const std::vector<Axiom>& all_axioms();

enum class Block { kGeneral, kIdentical, kBinary };

std::string block_name(Block block);
const std::vector<Block>& all_blocks();

// A counterexample found on one suite entry.
struct Evidence {
  std::string label;
  Instance instance;
  std::optional<AxiomVerdict> verdict;
  std::optional<Deviation> deviation;
};

enum class Observation { kHolds, kViolated, kInconclusive };
std::string observation_name(Observation observation);

struct CheckOptions {
  WorkBound bound;
  std::vector<Rational> grid_extra;
  // BEFP via check_befp (0/1 utilities only) rather than the unit envy bound.
  bool strict_befp = true;
  // For SP/OSP: also run the step/memoryless probes and turn any probe
  // failure into a constructed deviation.
  bool probes = false;
};

struct SuiteCheck {
  Observation observed = Observation::kHolds;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::size_t probes = 0;
  std::optional<Evidence> witness;
  std::string note;
};

// Runs one axiom over a suite with sincere bids (SP/OSP: grid search) and
// stops at the first violation. Instances exceeding the work bound are
// skipped and counted.
SuiteCheck check_suite(const Mechanism& mech, Axiom axiom, const Suite& suite,
                       const CheckOptions& options = {});

struct ExpectedCell {
  Block block;
  std::string mechanism;
  Axiom axiom;
  bool holds;
  // Verdict established by earlier work rather than derived here.
  bool prior_work;
};

// The reference verdicts, in row order, nine axioms per row.
const std::vector<ExpectedCell>& reference_table();

struct CellResult {
  ExpectedCell expected;
  SuiteCheck check;
  double seconds = 0;

  bool matches() const;
  // Expected violation without a witness in the suite.
  bool inconclusive() const;
};

// Conclusions-style equivalence claims checked on the identical block.
struct EquivalenceResult {
  std::string mechanism;
  std::string reference;
  bool ex_post = true;
  bool expected = true;
  bool observed = true;
  std::size_t instances = 0;
  std::optional<std::string> counterexample;
};

struct TableReport {
  std::map<Block, std::size_t> suite_sizes;
  std::vector<CellResult> cells;
  std::vector<EquivalenceResult> equivalences;

  std::size_t mismatches() const;
  std::size_t inconclusive() const;
  // 0 all reproduced, 1 any mismatch, 2 inconclusive only.
  int exit_code() const;
};

struct TableOptions {
  std::map<Block, Suite> suites;
  WorkBound bound;
  std::vector<Rational> grid_extra;
};

// Built-in suite for a block with `count` random instances plus fixed extras.
Suite block_suite(Block block, std::size_t count = 200,
                  const WorkBound& bound = {});

// Sectioned manifest: "[general]", "[identical]" and "[binary]" headers, each
// followed by ordinary manifest lines.
std::map<Block, Suite> parse_table_manifest(std::string_view text,
                                            const WorkBound& bound = {});

TableReport run_table(const TableOptions& options);

}  // namespace fairdiv

#endif  // FAIRDIV_TABLE_HPP_
