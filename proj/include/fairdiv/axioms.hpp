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

// Fairness and efficiency checks on a given distribution. Checkers audit
// distributions rather than mechanisms so that hand-built distributions can
// be checked the same way.

#ifndef FAIRDIV_AXIOMS_HPP_
#define FAIRDIV_AXIOMS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/core.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/oracle.hpp"

namespace fairdiv {

struct Witness {
  std::optional<Allocation> allocation;
  std::optional<Allocation> dominator;
  // (envious agent, envied agent), 0-based.
  std::optional<std::pair<std::size_t, std::size_t>> agents;
  // Dominating expected utility vector and its mixture (ex ante checks).
  std::optional<UtilityVector> point;
  std::map<Allocation, Rational> mixture;
};

struct AxiomVerdict {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;
  // Zero when the property holds; otherwise the largest violation.
  Rational margin;
};

AxiomVerdict check_efp(const AllocationDistribution& dist, const Matrix& u);
AxiomVerdict check_efa(const AllocationDistribution& dist, const Matrix& u);
AxiomVerdict check_sefp(const AllocationDistribution& dist, const Matrix& u);
AxiomVerdict check_sefa(const AllocationDistribution& dist, const Matrix& u);

// Requires a 0/1 matrix; throws std::invalid_argument otherwise.
AxiomVerdict check_befp(const AllocationDistribution& dist, const Matrix& u);

// u_ii(pi) + 1 >= u_ik(pi) on every support allocation, for any utilities.
// Coincides with check_befp on 0/1 matrices.
AxiomVerdict check_unit_envy_bound(const AllocationDistribution& dist,
                                   const Matrix& u);

AxiomVerdict check_pep(const AllocationDistribution& dist, const Matrix& u,
                       const WorkBound& bound = {});
AxiomVerdict check_pea(const AllocationDistribution& dist, const Matrix& u,
                       const WorkBound& bound = {});

bool is_binary(const Matrix& u);

// Shared-envy quantities.
Rational sefp_utility(const Allocation& allocation, std::size_t i,
                      std::size_t k, const Matrix& u);
Rational sefa_utility(const AssignmentMatrix& assignment, std::size_t i,
                      std::size_t k, const Matrix& u);

bool ex_ante_equivalent(const AllocationDistribution& a,
                        const AllocationDistribution& b);
bool ex_post_equivalent(const AllocationDistribution& a,
                        const AllocationDistribution& b);
bool ex_ante_equivalent(const Mechanism& a, const Mechanism& b,
                        const BidProfile& bids, const WorkBound& bound = {});
bool ex_post_equivalent(const Mechanism& a, const Mechanism& b,
                        const BidProfile& bids, const WorkBound& bound = {});

// Range of each p(i, j) over all assignment matrices that are non-wasteful,
// have unit columns and are envy-free ex ante on every item prefix (which an
// online mechanism cannot avoid: it must be envy-free on the instance that
// stops after any item). Solved exactly with one LP per bound.
struct MarginalRange {
  Matrix low;
  Matrix high;
  bool feasible = false;
};
MarginalRange online_efa_marginal_range(const Matrix& u);

}  // namespace fairdiv

#endif  // FAIRDIV_AXIOMS_HPP_
