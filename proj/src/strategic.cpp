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

#include "fairdiv/strategic.hpp"

#include <algorithm>
#include <set>

namespace fairdiv {

namespace {

std::vector<Rational> row_of(const Matrix& m, std::size_t r) {
  return {m.row(r).begin(), m.row(r).end()};
}

// Agent's expected utility when only its row is replaced by `row`.
Rational utility_with_row(const Mechanism& mech, const Instance& instance,
                          std::size_t agent, const std::vector<Rational>& row,
                          const WorkBound& bound) {
  BidProfile bids = BidProfile::sincere(instance).with_row(agent, row);
  return expected_own_utility(mech(bids, bound), agent, instance.utilities());
}

// Online comparison: instance truncated after `item`, only that bid changed.
Rational online_utility(const Mechanism& mech, const Instance& instance,
                        std::size_t agent, std::size_t item, const Rational& bid,
                        const WorkBound& bound) {
  Instance prefix = instance.prefix(item + 1);
  BidProfile bids = BidProfile::sincere(prefix).with_bid(agent, item, bid);
  return expected_own_utility(mech(bids, bound), agent, prefix.utilities());
}

Rational probability(const Mechanism& mech, const Instance& instance,
                     std::size_t agent, std::size_t item,
                     const std::vector<Rational>& row, const WorkBound& bound) {
  BidProfile bids = BidProfile::sincere(instance).with_row(agent, row);
  return marginals(mech(bids, bound)).p.at(agent, item);
}

// Calls visit(row) for every grid row of `agent` over items [0, count),
// lexicographically, with later items taken from `tail`. Stops early when
// visit returns true.
template <typename Visit>
bool for_each_grid_row(const BidGrid& grid, std::size_t agent, std::size_t count,
                       std::vector<Rational> row, Visit visit) {
  std::vector<std::size_t> digit(count, 0);
  for (std::size_t h = 0; h < count; ++h) row[h] = grid.values(agent, h)[0];
  for (;;) {
    if (visit(row)) return true;
    std::size_t h = count;
    for (;;) {
      if (h == 0) return false;
      --h;
      const auto& values = grid.values(agent, h);
      if (++digit[h] < values.size()) {
        row[h] = values[digit[h]];
        break;
      }
      digit[h] = 0;
      row[h] = values[0];
    }
  }
}

long double grid_rows(const BidGrid& grid, std::size_t agent, std::size_t count) {
  long double rows = 1;
  for (std::size_t h = 0; h < count; ++h) rows *= grid.values(agent, h).size();
  return rows;
}

// Keeps the rows giving the smallest and largest probability seen.
class Spread {
 public:
  void offer(const Rational& p, const std::vector<Rational>& row) {
    if (!seen_ || p < low_) {
      low_ = p;
      low_row_ = row;
    }
    if (!seen_ || high_ < p) {
      high_ = p;
      high_row_ = row;
    }
    seen_ = true;
  }

  std::optional<ProbeFailure> failure(const Instance& instance, std::size_t agent,
                                      std::size_t item) const {
    if (!seen_ || low_ == high_) return std::nullopt;
    return ProbeFailure{instance, agent, item, low_row_, high_row_, low_, high_};
  }

 private:
  bool seen_ = false;
  Rational low_, high_;
  std::vector<Rational> low_row_, high_row_;
};

bool columns_liked(const Matrix& u) {
  for (std::size_t j = 0; j < u.cols(); ++j) {
    bool liked = false;
    for (std::size_t i = 0; i < u.rows() && !liked; ++i) liked = u.at(i, j).is_positive();
    if (!liked) return false;
  }
  return true;
}

// Builds the instance with `agent`'s row replaced and checks the deviation.
std::optional<Deviation> try_deviation(const Mechanism& mech, const Matrix& base,
                                       std::size_t agent,
                                       const std::vector<Rational>& truth,
                                       const std::vector<Rational>& lie,
                                       std::optional<std::size_t> item,
                                       const WorkBound& bound) {
  Matrix u = base;
  for (std::size_t h = 0; h < u.cols(); ++h) u.at(agent, h) = truth[h];
  if (!columns_liked(u)) return std::nullopt;
  Deviation d{Instance(std::move(u)), agent, item, lie, Rational(), Rational()};
  d.sincere = utility_with_row(mech, d.instance, agent, truth, bound);
  d.deviant = utility_with_row(mech, d.instance, agent, lie, bound);
  if (d.sincere < d.deviant) return d;
  return std::nullopt;
}

}  // namespace

BidGrid BidGrid::build(const Instance& instance, const std::vector<Rational>& extra) {
  const Matrix& u = instance.utilities();
  BidGrid grid;
  grid.agents_ = u.rows();
  grid.items_ = u.cols();
  Rational min_positive, max_value;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (const auto& v : u.row(i)) {
      if (v.is_positive() && (min_positive.is_zero() || v < min_positive)) min_positive = v;
      if (max_value < v) max_value = v;
    }
  }
  for (const auto& v : extra) {
    if (v.sign() < 0) throw std::invalid_argument("grid values must be nonnegative");
  }
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = 0; j < u.cols(); ++j) {
      std::set<Rational> cell(extra.begin(), extra.end());
      cell.insert(Rational(0));
      for (std::size_t k = 0; k < u.rows(); ++k) cell.insert(u.at(k, j));
      for (const auto& v : u.row(i)) cell.insert(v);
      if (min_positive.is_positive()) {
        cell.insert(min_positive / Rational(2));
        cell.insert(max_value * Rational(2));
      } else {
        cell.insert(Rational(1));
      }
      grid.cells_.emplace_back(cell.begin(), cell.end());
    }
  }
  return grid;
}

std::optional<Deviation> sp_falsify(const Mechanism& mech, const Instance& instance,
                                    const BidGrid& grid, const WorkBound& bound) {
  const std::size_t n = instance.agents();
  const std::size_t m = instance.items();
  long double work = 0;
  for (std::size_t i = 0; i < n; ++i) work += grid_rows(grid, i, m);
  bound.require(work, "strategy-proofness search");

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> truth = row_of(instance.utilities(), i);
    Rational sincere = utility_with_row(mech, instance, i, truth, bound);
    std::optional<Deviation> found;
    for_each_grid_row(grid, i, m, truth, [&](const std::vector<Rational>& row) {
      Rational value = utility_with_row(mech, instance, i, row, bound);
      if (!(sincere < value)) return false;
      found = Deviation{instance, i, std::nullopt, row, sincere, value};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Deviation> osp_falsify(const Mechanism& mech, const Instance& instance,
                                     const BidGrid& grid, const WorkBound& bound) {
  long double work = 0;
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    for (std::size_t j = 0; j < instance.items(); ++j) work += grid.values(i, j).size();
  }
  bound.require(work, "online strategy-proofness search");

  for (std::size_t i = 0; i < instance.agents(); ++i) {
    for (std::size_t j = 0; j < instance.items(); ++j) {
      const Rational& truth = instance.utility(i, j);
      Rational sincere = online_utility(mech, instance, i, j, truth, bound);
      for (const auto& bid : grid.values(i, j)) {
        if (bid == truth) continue;
        Rational value = online_utility(mech, instance, i, j, bid, bound);
        if (sincere < value) {
          std::vector<Rational> row = row_of(instance.utilities(), i);
          row[j] = bid;
          return Deviation{instance, i, j, row, sincere, value};
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_deviation(const Mechanism& mech, const Deviation& d,
                      const WorkBound& bound) {
  const Instance& instance = d.instance;
  if (d.agent >= instance.agents() || d.bids.size() != instance.items()) return false;
  Rational sincere, deviant;
  if (d.item) {
    const std::size_t j = *d.item;
    if (j >= instance.items()) return false;
    for (std::size_t h = 0; h < instance.items(); ++h) {
      if (h != j && d.bids[h] != instance.utility(d.agent, h)) return false;
    }
    sincere = online_utility(mech, instance, d.agent, j, instance.utility(d.agent, j), bound);
    deviant = online_utility(mech, instance, d.agent, j, d.bids[j], bound);
  } else {
    sincere = utility_with_row(mech, instance, d.agent,
                               row_of(instance.utilities(), d.agent), bound);
    deviant = utility_with_row(mech, instance, d.agent, d.bids, bound);
  }
  return sincere == d.sincere && deviant == d.deviant && sincere < deviant;
}

std::optional<ProbeFailure> step_probe_detail(const Mechanism& mech,
                                              const Instance& instance,
                                              std::size_t agent, std::size_t item,
                                              const BidGrid& grid,
                                              const WorkBound& bound) {
  std::vector<Rational> row = row_of(instance.utilities(), agent);
  Spread positive;
  for (const auto& bid : grid.values(agent, item)) {
    row[item] = bid;
    Rational p = probability(mech, instance, agent, item, row, bound);
    if (bid.is_zero()) {
      if (!p.is_zero()) {
        // Non-wasteful violation: a zero bid still wins the item.
        std::vector<Rational> other = row;
        other[item] = grid.values(agent, item).back();
        return ProbeFailure{instance, agent, item, other, row,
                            probability(mech, instance, agent, item, other, bound), p};
      }
      continue;
    }
    positive.offer(p, row);
  }
  return positive.failure(instance, agent, item);
}

bool step_probe(const Mechanism& mech, const Instance& instance, std::size_t agent,
                std::size_t item, const BidGrid& grid, const WorkBound& bound) {
  return !step_probe_detail(mech, instance, agent, item, grid, bound);
}

std::optional<ProbeFailure> memoryless_probe_detail(const Mechanism& mech,
                                                    const Instance& instance,
                                                    std::size_t agent,
                                                    std::size_t item,
                                                    const BidGrid& grid,
                                                    const WorkBound& bound) {
  bound.require(grid_rows(grid, agent, item), "memoryless probe");
  Spread spread;
  for_each_grid_row(grid, agent, item, row_of(instance.utilities(), agent),
                    [&](const std::vector<Rational>& row) {
                      spread.offer(probability(mech, instance, agent, item, row, bound),
                                   row);
                      return false;
                    });
  return spread.failure(instance, agent, item);
}

bool memoryless_probe(const Mechanism& mech, const Instance& instance,
                      std::size_t agent, std::size_t item, const BidGrid& grid,
                      const WorkBound& bound) {
  return !memoryless_probe_detail(mech, instance, agent, item, grid, bound);
}

std::optional<Deviation> construct_deviation(const Mechanism& mech,
                                             const ProbeFailure& f,
                                             const WorkBound& bound) {
  const std::size_t j = f.item;
  const Matrix& full = f.instance.utilities();
  const Matrix truncated = full.prefix_columns(j + 1);
  auto cut = [j](const std::vector<Rational>& row) {
    return std::vector<Rational>(row.begin(), row.begin() + static_cast<long>(j) + 1);
  };

  // Only the probed bid differs: the lower-probability bid is the truth and
  // the item is last, so the gain is (high - low) * truth.
  bool single_bid = true;
  for (std::size_t h = 0; h < f.low_bids.size(); ++h) {
    if (h != j && f.low_bids[h] != f.high_bids[h]) single_bid = false;
  }
  if (single_bid) {
    if (!f.low_bids[j].is_positive()) return std::nullopt;
    if (auto d = try_deviation(mech, truncated, f.agent, cut(f.low_bids),
                               cut(f.high_bids), j, bound)) {
      return d;
    }
    return try_deviation(mech, full, f.agent, f.low_bids, f.high_bids, std::nullopt,
                         bound);
  }

  // Earlier bids differ: weight the probed item heavily. The weight starts at
  // the item's position and doubles until the gain is strict.
  Rational weight(static_cast<std::int64_t>(j + 1));
  for (int attempt = 0; attempt < 24; ++attempt, weight *= Rational(2)) {
    auto truth = cut(f.low_bids);
    auto lie = cut(f.high_bids);
    truth[j] = weight;
    lie[j] = weight;
    if (auto d = try_deviation(mech, truncated, f.agent, truth, lie, std::nullopt,
                               bound)) {
      return d;
    }
    auto truth_full = f.low_bids;
    auto lie_full = f.high_bids;
    truth_full[j] = weight;
    lie_full[j] = weight;
    if (auto d = try_deviation(mech, full, f.agent, truth_full, lie_full,
                               std::nullopt, bound)) {
      return d;
    }
  }
  return std::nullopt;
}

Classification classify(const Mechanism& mech, const Suite& suite,
                        const ClassifyOptions& options) {
  Classification c;
  c.mechanism = mech.name();
  const WorkBound& bound = options.bound;
  for (const auto& entry : suite) {
    const Instance& instance = entry.instance;
    BidGrid grid = BidGrid::build(instance, options.grid_extra);
    for (std::size_t i = 0; i < instance.agents(); ++i) {
      for (std::size_t j = 0; j < instance.items(); ++j) {
        if (!c.step_failure) {
          c.step_failure = step_probe_detail(mech, instance, i, j, grid, bound);
        }
        if (!c.memoryless_failure) {
          c.memoryless_failure = memoryless_probe_detail(mech, instance, i, j, grid, bound);
        }
      }
    }
    if (!options.probes_only) {
      if (!c.sp_deviation) c.sp_deviation = sp_falsify(mech, instance, grid, bound);
      if (!c.osp_deviation) c.osp_deviation = osp_falsify(mech, instance, grid, bound);
    }
    ++c.instances;
  }
  c.step = !c.step_failure;
  c.memoryless = !c.memoryless_failure;
  if (c.step_failure) {
    c.constructed = construct_deviation(mech, *c.step_failure, bound);
  } else if (c.memoryless_failure) {
    c.constructed = construct_deviation(mech, *c.memoryless_failure, bound);
  }

  if (c.step && c.memoryless) {
    c.sp_consistent = !c.sp_deviation;
  } else {
    c.sp_consistent = c.sp_deviation.has_value() || c.constructed.has_value();
  }
  if (c.step) {
    c.osp_consistent = !c.osp_deviation;
  } else {
    c.osp_consistent = c.osp_deviation.has_value() ||
                       (c.constructed && c.constructed->item.has_value());
  }
  return c;
}

}  // namespace fairdiv
