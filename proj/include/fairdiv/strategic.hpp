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

// Manipulation search over a finite bid grid, and probes for the two
// structural properties (step, memoryless) that decide strategy-proofness.
//
// A search that finds nothing only says that no profitable misreport exists
// inside the grid. The grid covers every value in the agent's row and the
// item's column plus a value below and above all of them, which is enough to
// hit every behavioural region of the built-in rules, but it is not a proof
// for arbitrary mechanisms.

#ifndef FAIRDIV_STRATEGIC_HPP_
#define FAIRDIV_STRATEGIC_HPP_

#include <optional>
#include <vector>

#include "fairdiv/core.hpp"
#include "fairdiv/instances.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

// Candidate bids for each (agent, item), ascending, always containing 0 and
// at least one positive value.
class BidGrid {
 public:
  // {0} + column j + row i + {min positive / 2, 2 * max} + extra.
  static BidGrid build(const Instance& instance,
                       const std::vector<Rational>& extra = {});

  const std::vector<Rational>& values(std::size_t agent, std::size_t item) const {
    return cells_[agent * items_ + item];
  }
  std::size_t agents() const { return agents_; }
  std::size_t items() const { return items_; }

 private:
  std::size_t agents_ = 0;
  std::size_t items_ = 0;
  std::vector<std::vector<Rational>> cells_;
};

// A profitable misreport by one agent while everybody else bids sincerely.
struct Deviation {
  Instance instance;
  std::size_t agent = 0;
  // Set for online deviations: only this item's bid differs, and utilities
  // are compared over items 0..item.
  std::optional<std::size_t> item;
  std::vector<Rational> bids;
  Rational sincere;
  Rational deviant;

  Rational gain() const { return deviant - sincere; }
};

// First strict gain in search order (agents ascending, bid rows in
// lexicographic grid order). Throws WorkBoundExceeded when the row count
// exceeds the bound.
std::optional<Deviation> sp_falsify(const Mechanism& mech,
                                    const Instance& instance,
                                    const BidGrid& grid,
                                    const WorkBound& bound = {});

// For each agent and item j, varies only that bid with a sincere past and
// compares expected utility over items 0..j, with the mechanism run on the
// instance truncated after j.
std::optional<Deviation> osp_falsify(const Mechanism& mech,
                                     const Instance& instance,
                                     const BidGrid& grid,
                                     const WorkBound& bound = {});

// Recomputes both expected utilities of a deviation from scratch.
bool verify_deviation(const Mechanism& mech, const Deviation& deviation,
                      const WorkBound& bound = {});

// Two bid rows of `agent` that differ only where the probe varied them and
// give different probabilities for `item`; `low` gives the smaller one.
struct ProbeFailure {
  Instance instance;
  std::size_t agent = 0;
  std::size_t item = 0;
  std::vector<Rational> low_bids;
  std::vector<Rational> high_bids;
  Rational low;
  Rational high;
};

// Probability of `item` is 0 at bid 0 and the same for every positive grid
// bid, with the rest of the profile sincere.
std::optional<ProbeFailure> step_probe_detail(const Mechanism& mech,
                                              const Instance& instance,
                                              std::size_t agent,
                                              std::size_t item,
                                              const BidGrid& grid,
                                              const WorkBound& bound = {});
bool step_probe(const Mechanism& mech, const Instance& instance,
                std::size_t agent, std::size_t item, const BidGrid& grid,
                const WorkBound& bound = {});

// Probability of `item` is the same for every grid combination of the
// agent's bids on earlier items, with the rest of the profile sincere.
std::optional<ProbeFailure> memoryless_probe_detail(const Mechanism& mech,
                                                    const Instance& instance,
                                                    std::size_t agent,
                                                    std::size_t item,
                                                    const BidGrid& grid,
                                                    const WorkBound& bound = {});
bool memoryless_probe(const Mechanism& mech, const Instance& instance,
                      std::size_t agent, std::size_t item, const BidGrid& grid,
                      const WorkBound& bound = {});

// Turns a probe failure into a verified misreport. The agent's true row is
// the lower-probability bid row, truncated after the probed item; when the
// earlier bids were varied, the probed item's utility is raised until the
// extra probability outweighs the losses on earlier items. Returns nullopt
// when no candidate verifies.
std::optional<Deviation> construct_deviation(const Mechanism& mech,
                                             const ProbeFailure& failure,
                                             const WorkBound& bound = {});

struct ClassifyOptions {
  std::vector<Rational> grid_extra;
  WorkBound bound;
  // Skip the grid searches and rely on probes and constructions only.
  bool probes_only = false;
};

struct Classification {
  std::string mechanism;
  std::size_t instances = 0;
  bool step = true;
  bool memoryless = true;
  std::optional<ProbeFailure> step_failure;
  std::optional<ProbeFailure> memoryless_failure;
  std::optional<Deviation> sp_deviation;
  std::optional<Deviation> osp_deviation;
  std::optional<Deviation> constructed;
  // Probes and searches agree with: SP iff memoryless step.
  bool sp_consistent = true;
  // Probes and searches agree with: OSP iff step.
  bool osp_consistent = true;
};

Classification classify(const Mechanism& mech, const Suite& suite,
                        const ClassifyOptions& options = {});

}  // namespace fairdiv

#endif  // FAIRDIV_STRATEGIC_HPP_
