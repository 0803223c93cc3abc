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

#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "fairdiv/lp.hpp"

namespace fairdiv {

namespace {

Rational total(const UtilityVector& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

std::vector<Allocation> enumerate_allocations(const Matrix& values,
                                              const WorkBound& bound) {
  const std::size_t m = values.cols();
  std::vector<std::vector<int>> choices(m);
  long double count = 1;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < values.rows(); ++i) {
      if (values.at(i, j).is_positive()) {
        choices[j].push_back(static_cast<int>(i));
      }
    }
    if (choices[j].empty()) choices[j].push_back(kDiscarded);
    count *= static_cast<long double>(choices[j].size());
  }
  bound.require(count, "allocation enumeration");

  std::vector<Allocation> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> digit(m, 0);
  std::vector<int> owners(m);
  for (;;) {
    for (std::size_t j = 0; j < m; ++j) owners[j] = choices[j][digit[j]];
    out.emplace_back(owners);
    std::size_t j = m;
    while (j > 0) {
      --j;
      if (++digit[j] < choices[j].size()) break;
      digit[j] = 0;
      if (j == 0) return out;
    }
    if (m == 0) return out;
  }
}

bool pareto_dominates(const UtilityVector& a, const UtilityVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (b[i] < a[i]) strict = true;
  }
  return strict;
}

bool pareto_dominates(const Allocation& a, const Allocation& b,
                      const Matrix& values) {
  return pareto_dominates(utility_vector(a, values), utility_vector(b, values));
}

std::optional<Allocation> find_dominator(const Allocation& allocation,
                                         const Matrix& values,
                                         const WorkBound& bound) {
  const UtilityVector own = utility_vector(allocation, values);
  const Rational own_total = total(own);
  std::optional<Allocation> best;
  Rational best_gain;
  for (const auto& other : enumerate_allocations(values, bound)) {
    UtilityVector v = utility_vector(other, values);
    if (!pareto_dominates(v, own)) continue;
    Rational gain = total(v) - own_total;
    if (!best || best_gain < gain) {
      best = other;
      best_gain = std::move(gain);
    }
  }
  return best;
}

bool is_pep(const Allocation& allocation, const Matrix& values,
            const WorkBound& bound) {
  const UtilityVector own = utility_vector(allocation, values);
  for (const auto& other : enumerate_allocations(values, bound)) {
    if (pareto_dominates(utility_vector(other, values), own)) return false;
  }
  return true;
}

std::vector<Allocation> pareto_frontier(const Matrix& values,
                                        const WorkBound& bound) {
  auto allocations = enumerate_allocations(values, bound);
  std::vector<UtilityVector> vectors;
  vectors.reserve(allocations.size());
  for (const auto& a : allocations) vectors.push_back(utility_vector(a, values));

  // Distinct vectors, by decreasing total: a vector can only be dominated by
  // one with a strictly larger total.
  std::vector<UtilityVector> distinct = vectors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Rational> totals;
  for (const auto& v : distinct) totals.push_back(total(v));
  std::vector<std::size_t> order(distinct.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return totals[y] < totals[x];
  });
  std::vector<char> efficient(distinct.size(), 1);
  for (std::size_t a = 0; a < order.size(); ++a) {
    const std::size_t v = order[a];
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t w = order[b];
      if (!(totals[v] < totals[w])) continue;
      if (pareto_dominates(distinct[w], distinct[v])) {
        efficient[v] = 0;
        break;
      }
    }
  }

  std::vector<Allocation> out;
  for (std::size_t k = 0; k < allocations.size(); ++k) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), vectors[k]);
    if (efficient[static_cast<std::size_t>(it - distinct.begin())]) {
      out.push_back(allocations[k]);
    }
  }
  return out;
}

LpSolution pea_lp(const UtilityVector& target, const Matrix& values,
                  const WorkBound& bound) {
  const std::size_t n = values.rows();
  if (target.size() != n) throw std::invalid_argument("target size mismatch");

  // One column per distinct utility vector; equal vectors are interchangeable.
  std::map<UtilityVector, Allocation> columns;
  for (const auto& a : enumerate_allocations(values, bound)) {
    columns.emplace(utility_vector(a, values), a);
  }
  const std::size_t k = columns.size();

  // Variables: q (k), eps (n), surplus (n).
  LinearProgram lp;
  const std::size_t vars = k + 2 * n;
  lp.c.assign(vars, Rational(0));
  for (std::size_t i = 0; i < n; ++i) lp.c[k + i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(vars);
    std::size_t col = 0;
    for (const auto& entry : columns) row[col++] = entry.first[i];
    row[k + i] = -1;
    row[k + n + i] = -1;
    lp.a.push_back(std::move(row));
    lp.b.push_back(target[i]);
  }
  std::vector<Rational> simplex_row(vars);
  for (std::size_t col = 0; col < k; ++col) simplex_row[col] = 1;
  lp.a.push_back(std::move(simplex_row));
  lp.b.push_back(1);

  LpResult result = solve_lp(lp);
  if (result.status == LpStatus::kInfeasible) {
    throw std::invalid_argument(
        "target utilities are not achievable by any distribution");
  }
  if (result.status == LpStatus::kUnbounded) {
    throw std::logic_error("pea lp reported unbounded");
  }

  LpSolution out;
  out.objective = result.objective;
  out.point.assign(n, Rational(0));
  std::size_t col = 0;
  for (const auto& [vec, allocation] : columns) {
    const Rational& q = result.x[col++];
    if (q.is_zero()) continue;
    out.weights.emplace(allocation, q);
    for (std::size_t i = 0; i < n; ++i) out.point[i] += q * vec[i];
  }
  return out;
}

bool is_pea(const UtilityVector& target, const Matrix& values,
            const WorkBound& bound) {
  return pea_lp(target, values, bound).objective.is_zero();
}

}  // namespace fairdiv
