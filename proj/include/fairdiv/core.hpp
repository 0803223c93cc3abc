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

// Domain types shared by every module: utility/bid matrices, allocations,
// distributions over allocations and the derived marginal and expected
// utility matrices. Agents and items are 0-based here; text I/O is 1-based.

#ifndef FAIRDIV_CORE_HPP_
#define FAIRDIV_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

// Raised when an exponential computation would exceed its configured budget.
class WorkBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WorkBound {
  std::uint64_t max_nodes = 1'000'000;
  int max_orp_agents = 6;

  // Throws WorkBoundExceeded when `work` > max_nodes.
  void require(long double work, const std::string& what) const;
};

// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  // First `cols` columns.
  Matrix prefix_columns(std::size_t cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// n agents, m ordered items, nonnegative utilities; every item is valued
// positively by at least one agent.
class Instance {
 public:
  explicit Instance(Matrix utilities);
  Instance(std::initializer_list<std::initializer_list<Rational>> rows)
      : Instance(Matrix(rows)) {}

  std::size_t agents() const { return utilities_.rows(); }
  std::size_t items() const { return utilities_.cols(); }
  const Matrix& utilities() const { return utilities_; }
  const Rational& utility(std::size_t agent, std::size_t item) const {
    return utilities_.at(agent, item);
  }

  // The instance restricted to its first `items` items.
  Instance prefix(std::size_t items) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Matrix utilities_;
};

// Reported bids. Unlike utilities, a column may be entirely zero.
class BidProfile {
 public:
  explicit BidProfile(Matrix bids);
  static BidProfile sincere(const Instance& instance) {
    return BidProfile(instance.utilities());
  }

  std::size_t agents() const { return bids_.rows(); }
  std::size_t items() const { return bids_.cols(); }
  const Matrix& values() const { return bids_; }
  const Rational& bid(std::size_t agent, std::size_t item) const {
    return bids_.at(agent, item);
  }

  bool has_positive_bidder(std::size_t item) const;
  std::vector<int> positive_bidders(std::size_t item) const;

  BidProfile prefix(std::size_t items) const;
  BidProfile with_row(std::size_t agent, std::span<const Rational> row) const;
  BidProfile with_bid(std::size_t agent, std::size_t item,
                      const Rational& bid) const;

  friend bool operator==(const BidProfile&, const BidProfile&) = default;

 private:
  Matrix bids_;
};

inline constexpr int kDiscarded = -1;

// owner[j] is the agent holding item j, or kDiscarded.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<int> owner) : owner_(std::move(owner)) {}

  std::size_t items() const { return owner_.size(); }
  int owner(std::size_t item) const { return owner_[item]; }
  const std::vector<int>& owners() const { return owner_; }
  std::vector<std::size_t> bundle(int agent) const;

  // Throws std::invalid_argument unless every owner is in [0, agents) or
  // discarded.
  void validate(std::size_t agents) const;

  // Bundle rendering, e.g. "({o1,o2},{})".
  std::string to_string(std::size_t agents) const;

  friend auto operator<=>(const Allocation&, const Allocation&) = default;

 private:
  std::vector<int> owner_;
};

// Exact finite distribution over allocations of the same items. Support is
// kept sorted lexicographically by owner vector.
class AllocationDistribution {
 public:
  using Support = std::map<Allocation, Rational>;

  // Validates: probabilities positive, summing to exactly 1, every allocation
  // covering `items` items with owners below `agents`.
  AllocationDistribution(std::size_t agents, std::size_t items,
                         Support support);

  static AllocationDistribution degenerate(std::size_t agents,
                                           Allocation allocation);

  std::size_t agents() const { return agents_; }
  std::size_t items() const { return items_; }
  const Support& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  bool contains(const Allocation& allocation) const {
    return support_.count(allocation) != 0;
  }
  Rational probability(const Allocation& allocation) const;

  // Distribution of the first `items` items.
  AllocationDistribution marginalize_prefix(std::size_t items) const;

  friend bool operator==(const AllocationDistribution&,
                         const AllocationDistribution&) = default;

 private:
  std::size_t agents_;
  std::size_t items_;
  Support support_;
};

// Weighted mixture; weights must be positive and sum to 1.
AllocationDistribution mix(
    const std::vector<std::pair<Rational, AllocationDistribution>>& parts);

// p(i, j): probability that agent i receives item j.
struct AssignmentMatrix {
  Matrix p;
  friend bool operator==(const AssignmentMatrix&,
                         const AssignmentMatrix&) = default;
};

// ubar(i, k): agent i's expected utility for agent k's expected bundle.
struct ExpectedUtilityMatrix {
  Matrix ubar;
  const Rational& own(std::size_t agent) const {
    return ubar.at(agent, agent);
  }
  std::vector<Rational> diagonal() const;
};

class PriorityOrder {
 public:
  explicit PriorityOrder(std::vector<int> order);
  static PriorityOrder identity(std::size_t agents);
  // "1,3,2" (1-based).
  static PriorityOrder parse(const std::string& text);
  // All n! orders in lexicographic order.
  static std::vector<PriorityOrder> all(std::size_t agents);

  std::size_t size() const { return order_.size(); }
  const std::vector<int>& order() const { return order_; }
  std::string to_string() const;

 private:
  std::vector<int> order_;
};

// Agent i's utility for agent k's bundle under `values` (utilities or bids).
Rational bundle_utility(const Allocation& allocation, std::size_t i,
                        std::size_t k, const Matrix& values);

// Own-bundle utility of every agent.
std::vector<Rational> utility_vector(const Allocation& allocation,
                                     const Matrix& values);

AssignmentMatrix marginals(const AllocationDistribution& distribution);

ExpectedUtilityMatrix expected_utilities(const AssignmentMatrix& assignment,
                                         const Matrix& utilities);

// sum_j p(agent, j) * utilities(agent, j) without building the full matrix.
Rational expected_own_utility(const AllocationDistribution& distribution,
                              std::size_t agent, const Matrix& utilities);

}  // namespace fairdiv

#endif  // FAIRDIV_CORE_HPP_
