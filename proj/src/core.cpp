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

#include "fairdiv/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fairdiv {

void WorkBound::require(long double work, const std::string& what) const {
  if (work > static_cast<long double>(max_nodes)) {
    std::ostringstream msg;
    msg << what << " needs about " << static_cast<double>(work)
        << " units of work, above the bound of " << max_nodes
        << " (raise --max-nodes or FAIRDIV_MAX_NODES)";
    throw WorkBoundExceeded(msg.str());
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::prefix_columns(std::size_t cols) const {
  if (cols > cols_) throw std::out_of_range("prefix longer than matrix");
  Matrix out(rows_, cols);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = at(r, c);
  }
  return out;
}

namespace {

void require_nonnegative(const Matrix& m, const char* what) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const Rational& v : m.row(r)) {
      if (v.sign() < 0) {
        throw std::invalid_argument(std::string(what) + " must be nonnegative");
      }
    }
  }
}

}  // namespace

Instance::Instance(Matrix utilities) : utilities_(std::move(utilities)) {
  if (utilities_.rows() == 0) {
    throw std::invalid_argument("instance needs at least one agent");
  }
  require_nonnegative(utilities_, "utilities");
  for (std::size_t j = 0; j < utilities_.cols(); ++j) {
    bool liked = false;
    for (std::size_t i = 0; i < utilities_.rows() && !liked; ++i) {
      liked = utilities_.at(i, j).is_positive();
    }
    if (!liked) {
      throw std::invalid_argument("item o" + std::to_string(j + 1) +
                                  " has no agent with positive utility");
    }
  }
}

Instance Instance::prefix(std::size_t items) const {
  return Instance(utilities_.prefix_columns(items));
}

BidProfile::BidProfile(Matrix bids) : bids_(std::move(bids)) {
  if (bids_.rows() == 0) {
    throw std::invalid_argument("bid profile needs at least one agent");
  }
  require_nonnegative(bids_, "bids");
}

bool BidProfile::has_positive_bidder(std::size_t item) const {
  for (std::size_t i = 0; i < agents(); ++i) {
    if (bids_.at(i, item).is_positive()) return true;
  }
  return false;
}

std::vector<int> BidProfile::positive_bidders(std::size_t item) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < agents(); ++i) {
    if (bids_.at(i, item).is_positive()) out.push_back(static_cast<int>(i));
  }
  return out;
}

BidProfile BidProfile::prefix(std::size_t items) const {
  return BidProfile(bids_.prefix_columns(items));
}

BidProfile BidProfile::with_row(std::size_t agent,
                                std::span<const Rational> row) const {
  if (row.size() != items()) throw std::invalid_argument("bid row length");
  Matrix m = bids_;
  for (std::size_t j = 0; j < row.size(); ++j) m.at(agent, j) = row[j];
  return BidProfile(std::move(m));
}

BidProfile BidProfile::with_bid(std::size_t agent, std::size_t item,
                                const Rational& bid) const {
  Matrix m = bids_;
  m.at(agent, item) = bid;
  return BidProfile(std::move(m));
}

std::vector<std::size_t> Allocation::bundle(int agent) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < owner_.size(); ++j) {
    if (owner_[j] == agent) out.push_back(j);
  }
  return out;
}

void Allocation::validate(std::size_t agents) const {
  for (int o : owner_) {
    if (o != kDiscarded && (o < 0 || static_cast<std::size_t>(o) >= agents)) {
      throw std::invalid_argument("allocation owner out of range");
    }
  }
}

std::string Allocation::to_string(std::size_t agents) const {
  std::string out = "(";
  for (std::size_t i = 0; i < agents; ++i) {
    if (i) out += ",";
    out += "{";
    bool first = true;
    for (std::size_t j : bundle(static_cast<int>(i))) {
      if (!first) out += ",";
      out += "o" + std::to_string(j + 1);
      first = false;
    }
    out += "}";
  }
  out += ")";
  auto discarded = bundle(kDiscarded);
  if (!discarded.empty()) {
    out += " discarded {";
    for (std::size_t k = 0; k < discarded.size(); ++k) {
      if (k) out += ",";
      out += "o" + std::to_string(discarded[k] + 1);
    }
    out += "}";
  }
  return out;
}

AllocationDistribution::AllocationDistribution(std::size_t agents,
                                               std::size_t items,
                                               Support support)
    : agents_(agents), items_(items), support_(std::move(support)) {
  if (support_.empty()) throw std::invalid_argument("empty distribution");
  Rational total;
  for (const auto& [allocation, prob] : support_) {
    if (allocation.items() != items_) {
      throw std::invalid_argument("allocation covers the wrong items");
    }
    allocation.validate(agents_);
    if (!prob.is_positive()) {
      throw std::invalid_argument("support probability must be positive");
    }
    total += prob;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("probabilities sum to " + total.to_string() +
                                ", not 1");
  }
}

AllocationDistribution AllocationDistribution::degenerate(
    std::size_t agents, Allocation allocation) {
  std::size_t items = allocation.items();
  Support support;
  support.emplace(std::move(allocation), Rational(1));
  return AllocationDistribution(agents, items, std::move(support));
}

Rational AllocationDistribution::probability(
    const Allocation& allocation) const {
  auto it = support_.find(allocation);
  return it == support_.end() ? Rational(0) : it->second;
}

AllocationDistribution AllocationDistribution::marginalize_prefix(
    std::size_t items) const {
  if (items > items_) throw std::out_of_range("prefix longer than items");
  Support out;
  for (const auto& [allocation, prob] : support_) {
    std::vector<int> owners(allocation.owners().begin(),
                            allocation.owners().begin() +
                                static_cast<std::ptrdiff_t>(items));
    out[Allocation(std::move(owners))] += prob;
  }
  return AllocationDistribution(agents_, items, std::move(out));
}

AllocationDistribution mix(
    const std::vector<std::pair<Rational, AllocationDistribution>>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty mixture");
  AllocationDistribution::Support out;
  std::size_t agents = parts.front().second.agents();
  std::size_t items = parts.front().second.items();
  for (const auto& [weight, dist] : parts) {
    if (dist.agents() != agents || dist.items() != items) {
      throw std::invalid_argument("mixture of differently shaped distributions");
    }
    for (const auto& [allocation, prob] : dist.support()) {
      out[allocation] += weight * prob;
    }
  }
  return AllocationDistribution(agents, items, std::move(out));
}

std::vector<Rational> ExpectedUtilityMatrix::diagonal() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < ubar.rows(); ++i) out.push_back(ubar.at(i, i));
  return out;
}

PriorityOrder::PriorityOrder(std::vector<int> order)
    : order_(std::move(order)) {
  std::vector<int> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) {
      throw std::invalid_argument("priority order is not a permutation");
    }
  }
}

PriorityOrder PriorityOrder::identity(std::size_t agents) {
  std::vector<int> order(agents);
  std::iota(order.begin(), order.end(), 0);
  return PriorityOrder(std::move(order));
}

PriorityOrder PriorityOrder::parse(const std::string& text) {
  std::vector<int> order;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      int agent = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      order.push_back(agent - 1);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad priority order '" + text + "'");
    }
  }
  return PriorityOrder(std::move(order));
}

std::vector<PriorityOrder> PriorityOrder::all(std::size_t agents) {
  std::vector<int> order(agents);
  std::iota(order.begin(), order.end(), 0);
  std::vector<PriorityOrder> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::string PriorityOrder::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < order_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(order_[k] + 1);
  }
  return out;
}

Rational bundle_utility(const Allocation& allocation, std::size_t i,
                        std::size_t k, const Matrix& values) {
  if (i >= values.rows() || k >= values.rows()) {
    throw std::out_of_range("agent index out of range");
  }
  if (allocation.items() > values.cols()) {
    throw std::out_of_range("allocation has more items than the matrix");
  }
  Rational total;
  for (std::size_t j = 0; j < allocation.items(); ++j) {
    if (allocation.owner(j) == static_cast<int>(k)) total += values.at(i, j);
  }
  return total;
}

std::vector<Rational> utility_vector(const Allocation& allocation,
                                     const Matrix& values) {
  std::vector<Rational> out(values.rows());
  for (std::size_t j = 0; j < allocation.items(); ++j) {
    int o = allocation.owner(j);
    if (o != kDiscarded) out[static_cast<std::size_t>(o)] += values.at(o, j);
  }
  return out;
}

AssignmentMatrix marginals(const AllocationDistribution& distribution) {
  Matrix p(distribution.agents(), distribution.items());
  for (const auto& [allocation, prob] : distribution.support()) {
    for (std::size_t j = 0; j < allocation.items(); ++j) {
      int o = allocation.owner(j);
      if (o != kDiscarded) p.at(static_cast<std::size_t>(o), j) += prob;
    }
  }
  return {std::move(p)};
}

ExpectedUtilityMatrix expected_utilities(const AssignmentMatrix& assignment,
                                         const Matrix& utilities) {
  const Matrix& p = assignment.p;
  if (p.rows() != utilities.rows() || p.cols() > utilities.cols()) {
    throw std::invalid_argument("assignment/utility shape mismatch");
  }
  std::size_t n = p.rows();
  Matrix ubar(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Rational sum;
      for (std::size_t h = 0; h < p.cols(); ++h) {
        if (!p.at(k, h).is_zero() && !utilities.at(i, h).is_zero()) {
          sum += p.at(k, h) * utilities.at(i, h);
        }
      }
      ubar.at(i, k) = std::move(sum);
    }
  }
  return {std::move(ubar)};
}

Rational expected_own_utility(const AllocationDistribution& distribution,
                              std::size_t agent, const Matrix& utilities) {
  Rational total;
  int a = static_cast<int>(agent);
  for (const auto& [allocation, prob] : distribution.support()) {
    Rational own;
    for (std::size_t j = 0; j < allocation.items(); ++j) {
      if (allocation.owner(j) == a) own += utilities.at(agent, j);
    }
    if (!own.is_zero()) total += prob * own;
  }
  return total;
}

}  // namespace fairdiv
