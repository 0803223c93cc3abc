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

#include "fairdiv/mechanisms.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

namespace fairdiv {

namespace {

using UtilityPoint = std::vector<Rational>;

bool improves_on(const UtilityPoint& a, const UtilityPoint& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = a[i] <=> b[i];
    if (c < 0) return false;
    if (c > 0) strict = true;
  }
  return strict;
}

std::vector<UtilityPoint> undominated(std::vector<UtilityPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<UtilityPoint> out;
  for (const auto& p : points) {
    bool dominated = std::any_of(points.begin(), points.end(),
                                 [&](const UtilityPoint& q) {
                                   return improves_on(q, p);
                                 });
    if (!dominated) out.push_back(p);
  }
  return out;
}

// Per-profile state for ParetoLike. suffix[j] holds every utility vector
// reachable by allocating items j..m-1 among their positive bidders, and
// frontier the undominated vectors over all items. An extension of the
// current branch is feasible when some frontier vector is still reachable
// from it.
struct ParetoState {
  std::vector<std::set<UtilityPoint>> suffix;
  std::vector<UtilityPoint> frontier;
};

ParetoState pareto_state(const BidProfile& bids, const WorkBound& bound) {
  const std::size_t n = bids.agents();
  const std::size_t m = bids.items();
  ParetoState state;
  state.suffix.resize(m + 1);
  state.suffix[m].insert(UtilityPoint(n));
  long double work = 0;
  for (std::size_t j = m; j > 0; --j) {
    const std::size_t item = j - 1;
    auto bidders = bids.positive_bidders(item);
    if (bidders.empty()) {
      state.suffix[item] = state.suffix[j];
      continue;
    }
    work += static_cast<long double>(state.suffix[j].size()) * bidders.size();
    bound.require(work, "pareto-like reachable set");
    for (const auto& point : state.suffix[j]) {
      for (int i : bidders) {
        UtilityPoint extended = point;
        extended[static_cast<std::size_t>(i)] += bids.bid(i, item);
        state.suffix[item].insert(std::move(extended));
      }
    }
  }
  state.frontier = undominated({state.suffix[0].begin(), state.suffix[0].end()});
  return state;
}

BoundRule bind_osd(const PriorityOrder& sigma, const BidProfile& bids) {
  if (sigma.size() != bids.agents()) {
    throw std::invalid_argument("priority order has " +
                                std::to_string(sigma.size()) +
                                " agents, bid profile has " +
                                std::to_string(bids.agents()));
  }
  return [order = sigma.order(), &bids](std::size_t item,
                                        std::span<const int>) -> FeasibleSet {
    for (int i : order) {
      if (bids.bid(i, item).is_positive()) return {i};
    }
    return {};
  };
}

}  // namespace

FeasibilityRule FeasibilityRule::osd(PriorityOrder sigma) {
  return FeasibilityRule(Kind::kOnlineSerialDictator, std::move(sigma));
}
FeasibilityRule FeasibilityRule::osd_natural() {
  return FeasibilityRule(Kind::kOnlineSerialDictator, std::nullopt);
}
FeasibilityRule FeasibilityRule::like() {
  return FeasibilityRule(Kind::kLike, std::nullopt);
}
FeasibilityRule FeasibilityRule::balanced_like() {
  return FeasibilityRule(Kind::kBalancedLike, std::nullopt);
}
FeasibilityRule FeasibilityRule::maximum_like() {
  return FeasibilityRule(Kind::kMaximumLike, std::nullopt);
}
FeasibilityRule FeasibilityRule::pareto_like() {
  return FeasibilityRule(Kind::kParetoLike, std::nullopt);
}

std::string FeasibilityRule::name() const {
  switch (kind_) {
    case Kind::kOnlineSerialDictator:
      return sigma_ ? "osd[" + sigma_->to_string() + "]" : "osd";
    case Kind::kParetoLike:
      return "pareto-like";
    case Kind::kLike:
      return "like";
    case Kind::kBalancedLike:
      return "balanced-like";
    case Kind::kMaximumLike:
      return "maximum-like";
  }
  return "?";
}

// The returned closures reference `bids`; they must not outlive it.
BoundRule FeasibilityRule::bind(const BidProfile& bids,
                                const WorkBound& bound) const {
  switch (kind_) {
    case Kind::kOnlineSerialDictator:
      return bind_osd(sigma_ ? *sigma_ : PriorityOrder::identity(bids.agents()),
                      bids);
    case Kind::kLike:
      return [&bids](std::size_t item, std::span<const int>) {
        return bids.positive_bidders(item);
      };
    case Kind::kBalancedLike:
      return [&bids](std::size_t item, std::span<const int> prefix) {
        std::vector<std::size_t> held(bids.agents(), 0);
        for (int o : prefix) {
          if (o != kDiscarded) ++held[static_cast<std::size_t>(o)];
        }
        FeasibleSet bidders = bids.positive_bidders(item);
        std::size_t fewest = held.size() + prefix.size();
        for (int i : bidders) fewest = std::min(fewest, held[i]);
        std::erase_if(bidders, [&](int i) { return held[i] != fewest; });
        return bidders;
      };
    case Kind::kMaximumLike:
      return [&bids](std::size_t item, std::span<const int>) {
        Rational best;
        for (std::size_t i = 0; i < bids.agents(); ++i) {
          best = max(best, bids.bid(i, item));
        }
        FeasibleSet out;
        if (!best.is_positive()) return out;
        for (std::size_t i = 0; i < bids.agents(); ++i) {
          if (bids.bid(i, item) == best) out.push_back(static_cast<int>(i));
        }
        return out;
      };
    case Kind::kParetoLike: {
      auto state = std::make_shared<const ParetoState>(pareto_state(bids, bound));
      return [&bids, state](std::size_t item, std::span<const int> prefix) {
        UtilityPoint held(bids.agents());
        for (std::size_t h = 0; h < prefix.size(); ++h) {
          if (prefix[h] != kDiscarded) {
            held[static_cast<std::size_t>(prefix[h])] += bids.bid(prefix[h], h);
          }
        }
        const auto& rest = state->suffix[item + 1];
        FeasibleSet out;
        UtilityPoint gap(bids.agents());
        for (int i : bids.positive_bidders(item)) {
          UtilityPoint extended = held;
          extended[static_cast<std::size_t>(i)] += bids.bid(i, item);
          bool reachable = std::any_of(
              state->frontier.begin(), state->frontier.end(),
              [&](const UtilityPoint& f) {
                for (std::size_t k = 0; k < f.size(); ++k) {
                  gap[k] = f[k];
                  gap[k] -= extended[k];
                  if (gap[k].sign() < 0) return false;
                }
                return rest.count(gap) != 0;
              });
          if (reachable) out.push_back(i);
        }
        return out;
      };
    }
  }
  throw std::logic_error("unknown feasibility rule");
}

namespace {

class TreeExpander {
 public:
  TreeExpander(const FeasibilityRule& rule, const BidProfile& bids,
               const WorkBound& bound)
      : rule_(rule),
        bids_(bids),
        bound_(bound),
        bound_rule_(rule.bind(bids, bound)),
        owners_(bids.items(), kDiscarded) {}

  AllocationDistribution run() {
    expand(0, Rational(1));
    return AllocationDistribution(bids_.agents(), bids_.items(),
                                  std::move(leaves_));
  }

 private:
  void expand(std::size_t item, const Rational& prob) {
    if (++nodes_ > bound_.max_nodes) {
      bound_.require(static_cast<long double>(nodes_),
                     rule_.name() + " expansion");
    }
    if (item == bids_.items()) {
      leaves_[Allocation(owners_)] += prob;
      return;
    }
    if (!bids_.has_positive_bidder(item)) {
      owners_[item] = kDiscarded;
      expand(item + 1, prob);
      return;
    }
    FeasibleSet feasible =
        bound_rule_(item, std::span<const int>(owners_.data(), item));
    if (feasible.empty()) {
      throw std::logic_error(rule_.name() +
                             " returned no feasible agent for item o" +
                             std::to_string(item + 1));
    }
    for (int i : feasible) {
      if (i < 0 || static_cast<std::size_t>(i) >= bids_.agents() ||
          !bids_.bid(i, item).is_positive()) {
        throw std::logic_error(rule_.name() +
                               " selected an agent that does not bid for o" +
                               std::to_string(item + 1));
      }
    }
    Rational share = prob / Rational(static_cast<std::int64_t>(feasible.size()));
    for (int i : feasible) {
      owners_[item] = i;
      expand(item + 1, share);
    }
    owners_[item] = kDiscarded;
  }

  const FeasibilityRule& rule_;
  const BidProfile& bids_;
  const WorkBound& bound_;
  BoundRule bound_rule_;
  std::vector<int> owners_;
  AllocationDistribution::Support leaves_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

AllocationDistribution allocate(const FeasibilityRule& rule,
                                const BidProfile& bids,
                                const WorkBound& bound) {
  return TreeExpander(rule, bids, bound).run();
}

AllocationDistribution orp_distribution(const BidProfile& bids,
                                        const WorkBound& bound) {
  std::size_t n = bids.agents();
  if (n > static_cast<std::size_t>(bound.max_orp_agents)) {
    throw WorkBoundExceeded("orp enumerates n! priority orders; n = " +
                            std::to_string(n) + " exceeds the limit of " +
                            std::to_string(bound.max_orp_agents));
  }
  auto orders = PriorityOrder::all(n);
  Rational weight(1, static_cast<std::int64_t>(orders.size()));
  AllocationDistribution::Support support;
  for (const auto& sigma : orders) {
    auto dist = allocate(FeasibilityRule::osd(sigma), bids, bound);
    for (const auto& [allocation, prob] : dist.support()) {
      support[allocation] += weight * prob;
    }
  }
  return AllocationDistribution(n, bids.items(), std::move(support));
}

Mechanism rule_mechanism(const FeasibilityRule& rule) {
  return Mechanism(rule.name(),
                   [rule](const BidProfile& bids, const WorkBound& bound) {
                     return allocate(rule, bids, bound);
                   });
}

Mechanism online_random_priority() {
  return Mechanism("orp", [](const BidProfile& bids, const WorkBound& bound) {
    return orp_distribution(bids, bound);
  });
}

Mechanism mechanism_by_name(std::string_view name,
                            std::optional<PriorityOrder> sigma) {
  if (name == "osd") {
    return rule_mechanism(sigma ? FeasibilityRule::osd(std::move(*sigma))
                                : FeasibilityRule::osd_natural());
  }
  if (name == "orp") return online_random_priority();
  if (name == "like") return rule_mechanism(FeasibilityRule::like());
  if (name == "balanced-like") {
    return rule_mechanism(FeasibilityRule::balanced_like());
  }
  if (name == "maximum-like") {
    return rule_mechanism(FeasibilityRule::maximum_like());
  }
  if (name == "pareto-like") {
    return rule_mechanism(FeasibilityRule::pareto_like());
  }
  throw std::invalid_argument("unknown mechanism '" + std::string(name) + "'");
}

std::vector<std::string> mechanism_names() {
  return {"orp", "osd", "maximum-like", "pareto-like", "like", "balanced-like"};
}

std::vector<Mechanism> builtin_mechanisms() {
  std::vector<Mechanism> out;
  for (const auto& name : mechanism_names()) out.push_back(mechanism_by_name(name));
  return out;
}

}  // namespace fairdiv
