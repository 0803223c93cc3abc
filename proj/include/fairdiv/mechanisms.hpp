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

// Sequential online allocation: for each arriving item a feasibility rule
// picks a set of agents and the item goes to one of them uniformly at random.
// The engine expands the whole randomization tree exactly.

#ifndef FAIRDIV_MECHANISMS_HPP_
#define FAIRDIV_MECHANISMS_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/core.hpp"

namespace fairdiv {

// Agents eligible for the current item (0-based, ascending).
using FeasibleSet = std::vector<int>;

// A rule bound to one bid profile. `prefix` holds the owners of items
// 0..item-1 in the current branch. Only called for items that have at least
// one positive bidder.
using BoundRule =
    std::function<FeasibleSet(std::size_t item, std::span<const int> prefix)>;

class FeasibilityRule {
 public:
  enum class Kind { kOnlineSerialDictator, kParetoLike, kLike, kBalancedLike,
                    kMaximumLike };

  // First agent in `sigma` bidding positively.
  static FeasibilityRule osd(PriorityOrder sigma);
  // Same, with the natural order 1,2,...,n of whatever profile it is run on.
  static FeasibilityRule osd_natural();
  static FeasibilityRule like();
  static FeasibilityRule balanced_like();
  static FeasibilityRule maximum_like();
  // Agents whose extension of the branch is Pareto efficient over the items
  // so far and can still be completed to a Pareto efficient allocation of
  // every bid item. The second clause only matters on profiles where
  // efficient prefixes can have no efficient extension; elsewhere it is
  // implied by the first.
  static FeasibilityRule pareto_like();

  Kind kind() const { return kind_; }
  std::string name() const;
  const std::optional<PriorityOrder>& sigma() const { return sigma_; }

  // Precomputes any per-profile state (ParetoLike builds reachable utility
  // sets, bounded by `bound`).
  BoundRule bind(const BidProfile& bids, const WorkBound& bound = {}) const;

 private:
  FeasibilityRule(Kind kind, std::optional<PriorityOrder> sigma)
      : kind_(kind), sigma_(std::move(sigma)) {}

  Kind kind_;
  std::optional<PriorityOrder> sigma_;
};

// Expands the randomization tree of `rule` on `bids`. Items without a positive
// bidder are discarded. Throws std::logic_error if the rule returns an empty
// set (or a non-bidder) for an item that has a positive bidder.
AllocationDistribution allocate(const FeasibilityRule& rule,
                                const BidProfile& bids,
                                const WorkBound& bound = {});

// Uniform mixture of OSD over all n! priority orders.
AllocationDistribution orp_distribution(const BidProfile& bids,
                                        const WorkBound& bound = {});

// A mechanism as a black box from bids to an exact distribution.
class Mechanism {
 public:
  using Fn = std::function<AllocationDistribution(const BidProfile&,
                                                  const WorkBound&)>;

  Mechanism(std::string name, Fn fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const { return name_; }
  AllocationDistribution operator()(const BidProfile& bids,
                                    const WorkBound& bound = {}) const {
    return fn_(bids, bound);
  }

 private:
  std::string name_;
  Fn fn_;
};

Mechanism rule_mechanism(const FeasibilityRule& rule);
Mechanism online_random_priority();

// CLI names: osd, orp, like, balanced-like, maximum-like, pareto-like.
// osd uses `sigma` when given, the natural order otherwise.
Mechanism mechanism_by_name(std::string_view name,
                            std::optional<PriorityOrder> sigma = std::nullopt);
std::vector<std::string> mechanism_names();

// The six built-ins in table order: orp, osd, maximum-like, pareto-like,
// like, balanced-like (osd with the natural order).
std::vector<Mechanism> builtin_mechanisms();

}  // namespace fairdiv

#endif  // FAIRDIV_MECHANISMS_HPP_
