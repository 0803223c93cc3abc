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

#include "fairdiv/axioms.hpp"

#include <set>

#include "fairdiv/lp.hpp"

namespace fairdiv {

namespace {

void require_shape(const AllocationDistribution& dist, const Matrix& u) {
  if (dist.agents() != u.rows() || dist.items() != u.cols()) {
    throw std::invalid_argument("distribution and utility matrix differ in shape");
  }
}

// value[i][k] = u_ik(pi).
std::vector<std::vector<Rational>> bundle_values(const Allocation& allocation,
                                                 const Matrix& u) {
  const std::size_t n = u.rows();
  std::vector<std::vector<Rational>> value(n, std::vector<Rational>(n));
  for (std::size_t h = 0; h < allocation.items(); ++h) {
    int k = allocation.owner(h);
    if (k == kDiscarded) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!u.at(i, h).is_zero()) value[i][static_cast<std::size_t>(k)] += u.at(i, h);
    }
  }
  return value;
}

// Records the largest violation; earlier candidates win ties.
class ViolationTracker {
 public:
  explicit ViolationTracker(std::string property) {
    verdict_.property = std::move(property);
  }

  void offer(const Rational& excess, Witness witness) {
    if (!excess.is_positive()) return;
    if (verdict_.holds || verdict_.margin < excess) {
      verdict_.holds = false;
      verdict_.margin = excess;
      verdict_.witness = std::move(witness);
    }
  }

  AxiomVerdict take() { return std::move(verdict_); }

 private:
  AxiomVerdict verdict_;
};

Witness pair_witness(std::size_t i, std::size_t k,
                     std::optional<Allocation> allocation = std::nullopt) {
  Witness w;
  w.agents = std::make_pair(i, k);
  w.allocation = std::move(allocation);
  return w;
}

// Ex post envy-style check: excess(values, allocation, i, k) > 0 violates.
template <typename Excess>
AxiomVerdict ex_post_check(std::string property,
                           const AllocationDistribution& dist, const Matrix& u,
                           Excess excess) {
  require_shape(dist, u);
  ViolationTracker tracker(std::move(property));
  for (const auto& [allocation, prob] : dist.support()) {
    auto value = bundle_values(allocation, u);
    for (std::size_t i = 0; i < u.rows(); ++i) {
      for (std::size_t k = 0; k < u.rows(); ++k) {
        if (i == k) continue;
        tracker.offer(excess(value, allocation, i, k),
                      pair_witness(i, k, allocation));
      }
    }
  }
  return tracker.take();
}

}  // namespace

bool is_binary(const Matrix& u) {
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (const auto& v : u.row(i)) {
      if (!v.is_zero() && v != Rational(1)) return false;
    }
  }
  return true;
}

Rational sefp_utility(const Allocation& allocation, std::size_t i,
                      std::size_t k, const Matrix& u) {
  Rational sum;
  for (std::size_t h = 0; h < allocation.items(); ++h) {
    if (allocation.owner(h) == static_cast<int>(i) && u.at(k, h).is_positive()) {
      sum += u.at(i, h);
    }
  }
  return sum;
}

Rational sefa_utility(const AssignmentMatrix& assignment, std::size_t i,
                      std::size_t k, const Matrix& u) {
  Rational sum;
  for (std::size_t h = 0; h < assignment.p.cols(); ++h) {
    if (u.at(k, h).is_positive() && !assignment.p.at(i, h).is_zero()) {
      sum += assignment.p.at(i, h) * u.at(i, h);
    }
  }
  return sum;
}

AxiomVerdict check_efp(const AllocationDistribution& dist, const Matrix& u) {
  return ex_post_check("EFP", dist, u,
                       [](const auto& value, const Allocation&, std::size_t i,
                          std::size_t k) { return value[i][k] - value[i][i]; });
}

AxiomVerdict check_sefp(const AllocationDistribution& dist, const Matrix& u) {
  return ex_post_check(
      "SEFP", dist, u,
      [&u](const auto& value, const Allocation& allocation, std::size_t i,
           std::size_t k) {
        return value[i][k] - sefp_utility(allocation, i, k, u);
      });
}

AxiomVerdict check_unit_envy_bound(const AllocationDistribution& dist,
                                   const Matrix& u) {
  return ex_post_check("BEFP", dist, u,
                       [](const auto& value, const Allocation&, std::size_t i,
                          std::size_t k) {
                         return value[i][k] - value[i][i] - Rational(1);
                       });
}

AxiomVerdict check_befp(const AllocationDistribution& dist, const Matrix& u) {
  if (!is_binary(u)) {
    throw std::invalid_argument("BEFP is only defined for 0/1 utilities");
  }
  return check_unit_envy_bound(dist, u);
}

AxiomVerdict check_efa(const AllocationDistribution& dist, const Matrix& u) {
  require_shape(dist, u);
  auto ubar = expected_utilities(marginals(dist), u).ubar;
  ViolationTracker tracker("EFA");
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t k = 0; k < u.rows(); ++k) {
      if (i != k) tracker.offer(ubar.at(i, k) - ubar.at(i, i), pair_witness(i, k));
    }
  }
  return tracker.take();
}

AxiomVerdict check_sefa(const AllocationDistribution& dist, const Matrix& u) {
  require_shape(dist, u);
  auto assignment = marginals(dist);
  auto ubar = expected_utilities(assignment, u).ubar;
  ViolationTracker tracker("SEFA");
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t k = 0; k < u.rows(); ++k) {
      if (i == k) continue;
      tracker.offer(ubar.at(i, k) - sefa_utility(assignment, i, k, u),
                    pair_witness(i, k));
    }
  }
  return tracker.take();
}

AxiomVerdict check_pep(const AllocationDistribution& dist, const Matrix& u,
                       const WorkBound& bound) {
  require_shape(dist, u);
  auto frontier = pareto_frontier(u, bound);
  std::set<Allocation> efficient(frontier.begin(), frontier.end());
  ViolationTracker tracker("PEP");
  for (const auto& [allocation, prob] : dist.support()) {
    if (efficient.count(allocation)) continue;
    auto dominator = find_dominator(allocation, u, bound);
    if (!dominator) continue;
    Rational gain;
    auto better = utility_vector(*dominator, u);
    auto own = utility_vector(allocation, u);
    for (std::size_t i = 0; i < own.size(); ++i) gain += better[i] - own[i];
    Witness w;
    w.allocation = allocation;
    w.dominator = *dominator;
    tracker.offer(gain, std::move(w));
  }
  return tracker.take();
}

AxiomVerdict check_pea(const AllocationDistribution& dist, const Matrix& u,
                       const WorkBound& bound) {
  require_shape(dist, u);
  auto own = expected_utilities(marginals(dist), u).diagonal();
  LpSolution solution = pea_lp(own, u, bound);
  ViolationTracker tracker("PEA");
  Witness w;
  w.point = solution.point;
  w.mixture = solution.weights;
  tracker.offer(solution.objective, std::move(w));
  return tracker.take();
}

bool ex_ante_equivalent(const AllocationDistribution& a,
                        const AllocationDistribution& b) {
  return marginals(a) == marginals(b);
}

bool ex_post_equivalent(const AllocationDistribution& a,
                        const AllocationDistribution& b) {
  return a == b;
}

bool ex_ante_equivalent(const Mechanism& a, const Mechanism& b,
                        const BidProfile& bids, const WorkBound& bound) {
  return ex_ante_equivalent(a(bids, bound), b(bids, bound));
}

bool ex_post_equivalent(const Mechanism& a, const Mechanism& b,
                        const BidProfile& bids, const WorkBound& bound) {
  return ex_post_equivalent(a(bids, bound), b(bids, bound));
}

MarginalRange online_efa_marginal_range(const Matrix& u) {
  const std::size_t n = u.rows();
  const std::size_t m = u.cols();
  // One variable per (agent, item) the agent likes.
  std::vector<std::vector<int>> var(n, std::vector<int>(m, -1));
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (u.at(i, j).is_positive()) var[i][j] = static_cast<int>(count++);
    }
  }
  const std::size_t pairs = n * (n - 1);
  const std::size_t surplus = m * pairs;
  const std::size_t width = count + surplus;

  LinearProgram lp;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rational> row(width);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (var[i][j] >= 0) {
        row[static_cast<std::size_t>(var[i][j])] = 1;
        any = true;
      }
    }
    if (!any) continue;
    lp.a.push_back(std::move(row));
    lp.b.push_back(1);
  }
  // Prefix t, pair (i,k): sum_{h<=t} (p_ih - p_kh) u_ih - s = 0.
  std::size_t s = count;
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == k) continue;
        std::vector<Rational> row(width);
        for (std::size_t h = 0; h <= t; ++h) {
          if (var[i][h] >= 0) row[static_cast<std::size_t>(var[i][h])] += u.at(i, h);
          if (var[k][h] >= 0) row[static_cast<std::size_t>(var[k][h])] -= u.at(i, h);
        }
        row[s++] = -1;
        lp.a.push_back(std::move(row));
        lp.b.push_back(0);
      }
    }
  }

  MarginalRange range{Matrix(n, m), Matrix(n, m), false};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (var[i][j] < 0) continue;
      for (int direction : {1, -1}) {
        lp.c.assign(width, Rational(0));
        lp.c[static_cast<std::size_t>(var[i][j])] = direction;
        LpResult r = solve_lp(lp);
        if (r.status != LpStatus::kOptimal) return range;
        Rational value = r.x[static_cast<std::size_t>(var[i][j])];
        (direction > 0 ? range.high : range.low).at(i, j) = value;
      }
    }
  }
  range.feasible = true;
  return range;
}

}  // namespace fairdiv
