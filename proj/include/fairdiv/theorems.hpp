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

// Scripted checks of the characterization results at desk scale.
//
// Each check evaluates both sides of a biconditional for a set of mechanisms
// over a finite suite and passes when the two sides agree for every
// mechanism. Agreement on a suite is evidence, not proof: a property that
// holds "on the suite" only means no counterexample was found in it.

#ifndef FAIRDIV_THEOREMS_HPP_
#define FAIRDIV_THEOREMS_HPP_

#include <string>
#include <vector>

#include "fairdiv/instances.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

struct TheoremResult {
  // "theorem-3", "corollary-1", ...
  std::string id;
  std::string claim;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  // One line per mechanism or sub-check, in evaluation order.
  std::vector<std::string> findings;
  // First disagreement; empty when passed.
  std::string failure;
  double seconds = 0;
};

struct TheoremReport {
  std::vector<TheoremResult> results;

  bool passed() const;
  // 0 all pass, 1 any failure, 2 a check saw no cases.
  int exit_code() const;
};

struct TheoremOptions {
  WorkBound bound;
  std::vector<Rational> grid_extra;
  // Random instances in the small suite.
  std::size_t suite_count = 40;
  // Exhaustive suites: n in [2, max_agents], m in [1, max_items], values
  // 0..max_value with every item liked.
  std::size_t exhaustive_agents = 3;
  std::size_t exhaustive_items = 3;
  int exhaustive_max_value = 3;
};

// The built-in mechanisms plus the two hand-built ones (a non-strategyproof
// envy-free mechanism and an ex ante efficient but ex post inefficient one).
std::vector<Mechanism> theorem_mechanisms();

// The step/memoryless classification of the built-ins, and agreement of the
// probes with the SP and OSP grid searches.
TheoremResult check_classification(const Suite& suite, const TheoremOptions& options);

// SP and EFA iff ex ante equivalent to Like.
TheoremResult check_theorem3(const std::vector<Mechanism>& mechanisms,
                             const Suite& suite, const TheoremOptions& options);
// Non-zero utilities: EFA on every prefix iff Like marginals on every prefix.
TheoremResult check_theorem4(const std::vector<Mechanism>& mechanisms,
                             const Suite& suite, const TheoremOptions& options);
// SEFA on every prefix iff Like marginals on every prefix.
TheoremResult check_theorem5(const std::vector<Mechanism>& mechanisms,
                             const Suite& suite, const TheoremOptions& options);
// ParetoLike's support equals the Pareto frontier on exhaustive suites.
TheoremResult check_theorem6(const TheoremOptions& options);
// SP and PEP iff the distributions are one fixed mixture of serial
// dictatorships (per agent count) across the suite.
TheoremResult check_theorem7(const std::vector<Mechanism>& mechanisms,
                             const Suite& suite, const TheoremOptions& options);
// SP, PEP and PEA iff the distributions equal a single serial dictatorship
// (per agent count) across the suite.
TheoremResult check_theorem8(const std::vector<Mechanism>& mechanisms,
                             const Suite& suite, const TheoremOptions& options);
// On the first example, envy-freeness ex ante forces every marginal to 1/2,
// and the resulting utilities are not ex ante efficient.
TheoremResult check_theorem9(const TheoremOptions& options);
// BalancedLike meets the unit envy bound on exhaustive 0/1 suites.
TheoremResult check_corollary1(const TheoremOptions& options);
// SP, PEP and EFA iff ex post equivalent to ORP.
TheoremResult check_corollary2(const std::vector<Mechanism>& mechanisms,
                               const Suite& suite, const TheoremOptions& options);

// All of the above on the built-in small suite.
TheoremReport run_theorems(const TheoremOptions& options = {});

}  // namespace fairdiv

#endif  // FAIRDIV_THEOREMS_HPP_
