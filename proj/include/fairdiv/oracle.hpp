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

// Brute-force ground truth for Pareto efficiency. Every function takes the
// matrix it judges by as `values`: pass bids for the mechanism's view and
// utilities for an auditor's view. Enumeration is over non-wasteful
// allocations with respect to the same matrix.

#ifndef FAIRDIV_ORACLE_HPP_
#define FAIRDIV_ORACLE_HPP_

#include <map>
#include <optional>
#include <vector>

#include "fairdiv/core.hpp"

namespace fairdiv {

using UtilityVector = std::vector<Rational>;

// Every assignment of each item to one of its positive bidders (or to
// kDiscarded when the column is all zero). Lexicographic order.
std::vector<Allocation> enumerate_allocations(const Matrix& values,
                                              const WorkBound& bound = {});

// a Pareto dominates b under `values`.
bool pareto_dominates(const Allocation& a, const Allocation& b,
                      const Matrix& values);
bool pareto_dominates(const UtilityVector& a, const UtilityVector& b);

bool is_pep(const Allocation& allocation, const Matrix& values,
            const WorkBound& bound = {});

// An enumerated allocation dominating `allocation`, preferring the largest
// total improvement (first in enumeration order among ties).
std::optional<Allocation> find_dominator(const Allocation& allocation,
                                         const Matrix& values,
                                         const WorkBound& bound = {});

std::vector<Allocation> pareto_frontier(const Matrix& values,
                                        const WorkBound& bound = {});

struct LpSolution {
  // Optimal sum of slack gains; zero iff the target is Pareto efficient ex
  // ante.
  Rational objective;
  // Weights of the optimal mixture, one representative allocation per
  // distinct utility vector.
  std::map<Allocation, Rational> weights;
  // Expected utility vector the mixture achieves.
  UtilityVector point;
};

// Solves  max sum(eps)  s.t.  sum_pi q_pi u_i(pi) >= target_i + eps_i,
// eps >= 0, q a distribution over enumerate_allocations(values).
// Throws std::invalid_argument if the target is not achievable at all.
LpSolution pea_lp(const UtilityVector& target, const Matrix& values,
                  const WorkBound& bound = {});

bool is_pea(const UtilityVector& target, const Matrix& values,
            const WorkBound& bound = {});

}  // namespace fairdiv

#endif  // FAIRDIV_ORACLE_HPP_
