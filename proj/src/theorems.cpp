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

#include "fairdiv/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "fairdiv/axioms.hpp"
#include "fairdiv/lp.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/strategic.hpp"

namespace fairdiv {

namespace {

const char* yes_no(bool value) { return value ? "yes" : "no"; }

// Runs `body` and records its wall time on the result.
TheoremResult timed(std::string id, std::string claim,
                    const std::function<void(TheoremResult&)>& body) {
  TheoremResult result;
  result.id = std::move(id);
  result.claim = std::move(claim);
  auto start = std::chrono::steady_clock::now();
  body(result);
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void fail(TheoremResult& result, const std::string& message) {
  if (result.passed) result.failure = message;
  result.passed = false;
}

// A mechanism's sincere distributions over a suite, skipping instances that
// exceed the work bound.
struct Runs {
  std::vector<const SuiteEntry*> entries;
  std::vector<AllocationDistribution> dists;
  std::size_t skipped = 0;
};

Runs run_suite(const Mechanism& mech, const Suite& suite, const WorkBound& bound) {
  Runs runs;
  for (const auto& entry : suite) {
    try {
      runs.dists.push_back(mech(BidProfile::sincere(entry.instance), bound));
      runs.entries.push_back(&entry);
    } catch (const WorkBoundExceeded&) {
      ++runs.skipped;
    }
  }
  return runs;
}

// No deviation found by search or construction, and both probes pass.
bool sp_clean(const Mechanism& mech, const Suite& suite, const TheoremOptions& options) {
  ClassifyOptions copts;
  copts.bound = options.bound;
  copts.grid_extra = options.grid_extra;
  Classification c = classify(mech, suite, copts);
  return c.step && c.memoryless && !c.sp_deviation && !c.constructed;
}

// First entry label where `pred` fails, if any.
std::optional<std::string> first_failure(
    const Runs& runs,
    const std::function<bool(const Instance&, const AllocationDistribution&)>& pred) {
  for (std::size_t k = 0; k < runs.dists.size(); ++k) {
    if (!pred(runs.entries[k]->instance, runs.dists[k])) return runs.entries[k]->label;
  }
  return std::nullopt;
}

bool holds_on(const Runs& runs,
              const std::function<bool(const Instance&, const AllocationDistribution&)>& pred) {
  return !first_failure(runs, pred).has_value();
}

const Mechanism& like_mechanism() {
  static const Mechanism like = mechanism_by_name("like");
  return like;
}

bool like_marginals(const Instance& instance, const AllocationDistribution& dist,
                    const WorkBound& bound) {
  return marginals(dist) == marginals(like_mechanism()(BidProfile::sincere(instance), bound));
}

// Property holds on every prefix o1..oj of the instance.
bool on_prefixes(const Instance& instance, const AllocationDistribution& dist,
                 const std::function<bool(const Instance&, const AllocationDistribution&)>& pred) {
  for (std::size_t j = 1; j <= instance.items(); ++j) {
    if (!pred(instance.prefix(j), dist.marginalize_prefix(j))) return false;
  }
  return true;
}

// Agent counts present in the runs, each with the indices of its instances.
std::map<std::size_t, std::vector<std::size_t>> by_agents(const Runs& runs) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < runs.entries.size(); ++k) {
    groups[runs.entries[k]->instance.agents()].push_back(k);
  }
  return groups;
}

// Deterministic serial dictatorship outcome for every order, per instance.
std::vector<std::vector<Allocation>> dictator_outcomes(
    const Runs& runs, const std::vector<std::size_t>& group,
    const std::vector<PriorityOrder>& orders, const WorkBound& bound) {
  std::vector<std::vector<Allocation>> out;
  for (std::size_t k : group) {
    BidProfile bids = BidProfile::sincere(runs.entries[k]->instance);
    std::vector<Allocation> row;
    for (const auto& sigma : orders) {
      row.push_back(allocate(FeasibilityRule::osd(sigma), bids, bound).support().begin()->first);
    }
    out.push_back(std::move(row));
  }
  return out;
}

// One weight vector over orders reproducing every distribution in the group.
bool dictator_mixture_exists(const Runs& runs, const std::vector<std::size_t>& group,
                             std::size_t agents, const WorkBound& bound) {
  auto orders = PriorityOrder::all(agents);
  auto outcomes = dictator_outcomes(runs, group, orders, bound);
  LinearProgram lp;
  lp.c.assign(orders.size(), Rational(0));
  lp.a.push_back(std::vector<Rational>(orders.size(), Rational(1)));
  lp.b.push_back(Rational(1));
  for (std::size_t g = 0; g < group.size(); ++g) {
    std::set<Allocation> rows;
    for (const auto& [allocation, p] : runs.dists[group[g]].support()) rows.insert(allocation);
    for (const auto& allocation : outcomes[g]) rows.insert(allocation);
    for (const auto& allocation : rows) {
      std::vector<Rational> row(orders.size(), Rational(0));
      for (std::size_t s = 0; s < orders.size(); ++s) {
        if (outcomes[g][s] == allocation) row[s] = Rational(1);
      }
      lp.a.push_back(std::move(row));
      lp.b.push_back(runs.dists[group[g]].probability(allocation));
    }
  }
  return solve_lp(lp).status == LpStatus::kOptimal;
}

// A single order whose dictatorship matches every distribution in the group.
std::optional<PriorityOrder> matching_dictator(const Runs& runs,
                                               const std::vector<std::size_t>& group,
                                               std::size_t agents, const WorkBound& bound) {
  auto orders = PriorityOrder::all(agents);
  auto outcomes = dictator_outcomes(runs, group, orders, bound);
  for (std::size_t s = 0; s < orders.size(); ++s) {
    bool all = true;
    for (std::size_t g = 0; g < group.size() && all; ++g) {
      all = runs.dists[group[g]] ==
            AllocationDistribution::degenerate(agents, outcomes[g][s]);
    }
    if (all) return orders[s];
  }
  return std::nullopt;
}

using Pred = std::function<bool(const Instance&, const AllocationDistribution&)>;

// Shared shape of the per-mechanism biconditional checks.
void compare_sides(TheoremResult& result, const std::vector<Mechanism>& mechanisms,
                   const Suite& suite, const TheoremOptions& options,
                   const std::function<bool(const Mechanism&, const Runs&)>& lhs,
                   const std::function<bool(const Mechanism&, const Runs&)>& rhs,
                   const std::string& lhs_name, const std::string& rhs_name) {
  for (const auto& mech : mechanisms) {
    Runs runs = run_suite(mech, suite, options.bound);
    result.cases += runs.dists.size();
    result.skipped += runs.skipped;
    bool left = lhs(mech, runs);
    bool right = rhs(mech, runs);
    result.findings.push_back(mech.name() + ": " + lhs_name + "=" + yes_no(left) + " " +
                              rhs_name + "=" + yes_no(right));
    if (left != right) {
      fail(result, mech.name() + ": " + lhs_name + " is " + yes_no(left) + " but " +
                       rhs_name + " is " + yes_no(right));
    }
  }
}

Suite small_suite(const TheoremOptions& options) {
  Suite suite = parse_manifest(builtin_manifest("small-suite", options.suite_count), options.bound);
  return suite;
}

}  // namespace

bool TheoremReport::passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

int TheoremReport::exit_code() const {
  if (!passed()) return 1;
  for (const auto& r : results) {
    if (r.cases == 0) return 2;
  }
  return 0;
}

std::vector<Mechanism> theorem_mechanisms() {
  std::vector<Mechanism> out;
  for (const auto& name : mechanism_names()) out.push_back(mechanism_by_name(name));
  out.push_back(worked_example(2).mechanism->mechanism());
  out.push_back(worked_example(4).mechanism->mechanism());
  return out;
}

TheoremResult check_classification(const Suite& suite, const TheoremOptions& options) {
  return timed(
      "theorems-1-2",
      "SP iff memoryless step; OSP iff step; probes agree with the searches",
      [&](TheoremResult& result) {
        struct Expected {
          const char* name;
          bool step;
          bool memoryless;
        };
        const Expected expected[] = {{"osd", true, true},          {"orp", true, true},
                                     {"like", true, true},         {"balanced-like", true, false},
                                     {"maximum-like", false, true}, {"pareto-like", false, false}};
        ClassifyOptions copts;
        copts.bound = options.bound;
        copts.grid_extra = options.grid_extra;
        for (const auto& e : expected) {
          Classification c = classify(mechanism_by_name(e.name), suite, copts);
          result.cases += c.instances;
          bool sp_found = c.sp_deviation || c.constructed;
          bool osp_found = c.osp_deviation || (c.constructed && c.constructed->item);
          std::ostringstream line;
          line << e.name << ": step=" << yes_no(c.step) << " memoryless=" << yes_no(c.memoryless)
               << " sp-deviation=" << yes_no(sp_found) << " osp-deviation=" << yes_no(osp_found);
          result.findings.push_back(line.str());
          if (c.step != e.step || c.memoryless != e.memoryless) {
            fail(result, std::string(e.name) + ": probe classification differs");
          }
          if (!c.sp_consistent || !c.osp_consistent) {
            fail(result, std::string(e.name) + ": probes and searches disagree");
          }
        }
      });
}

TheoremResult check_theorem3(const std::vector<Mechanism>& mechanisms, const Suite& suite,
                             const TheoremOptions& options) {
  return timed("theorem-3", "SP and EFA iff ex ante equivalent to Like",
               [&](TheoremResult& result) {
                 compare_sides(
                     result, mechanisms, suite, options,
                     [&](const Mechanism& mech, const Runs& runs) {
                       return holds_on(runs,
                                       [](const Instance& i, const AllocationDistribution& d) {
                                         return check_efa(d, i.utilities()).holds;
                                       }) &&
                              sp_clean(mech, suite, options);
                     },
                     [&](const Mechanism&, const Runs& runs) {
                       return holds_on(runs, [&](const Instance& i,
                                                 const AllocationDistribution& d) {
                         return like_marginals(i, d, options.bound);
                       });
                     },
                     "sp-and-efa", "like-ex-ante");
               });
}

namespace {

TheoremResult prefix_characterization(std::string id, std::string claim,
                                      const std::vector<Mechanism>& mechanisms,
                                      const Suite& suite, const TheoremOptions& options,
                                      bool shared) {
  return timed(std::move(id), std::move(claim), [&](TheoremResult& result) {
    Pred envy_free = [shared](const Instance& i, const AllocationDistribution& d) {
      return shared ? check_sefa(d, i.utilities()).holds : check_efa(d, i.utilities()).holds;
    };
    Pred like = [&](const Instance& i, const AllocationDistribution& d) {
      return like_marginals(i, d, options.bound);
    };
    // Per (mechanism, instance), since the induction runs on one instance.
    for (const auto& mech : mechanisms) {
      Runs runs = run_suite(mech, suite, options.bound);
      result.skipped += runs.skipped;
      std::size_t agree = 0;
      std::size_t envy_free_count = 0;
      for (std::size_t k = 0; k < runs.dists.size(); ++k) {
        const Instance& instance = runs.entries[k]->instance;
        bool left = on_prefixes(instance, runs.dists[k], envy_free);
        bool right = on_prefixes(instance, runs.dists[k], like);
        ++result.cases;
        envy_free_count += left;
        if (left == right) {
          ++agree;
        } else {
          fail(result, mech.name() + " on " + runs.entries[k]->label + ": " +
                           (shared ? "sefa" : "efa") + " is " + yes_no(left) +
                           " but like-ex-ante is " + yes_no(right));
        }
      }
      result.findings.push_back(mech.name() + ": " + std::to_string(agree) + "/" +
                                std::to_string(runs.dists.size()) + " agree, " +
                                std::to_string(envy_free_count) + " envy-free");
    }
  });
}

}  // namespace

TheoremResult check_theorem4(const std::vector<Mechanism>& mechanisms, const Suite& suite,
                             const TheoremOptions& options) {
  Suite nonzero;
  for (const auto& entry : suite) {
    if (satisfies_domain(entry.instance.utilities(), Domain::kNonZero)) nonzero.push_back(entry);
  }
  return prefix_characterization(
      "theorem-4", "non-zero utilities: EFA on every prefix iff Like marginals on every prefix",
      mechanisms, nonzero, options, false);
}

TheoremResult check_theorem5(const std::vector<Mechanism>& mechanisms, const Suite& suite,
                             const TheoremOptions& options) {
  return prefix_characterization(
      "theorem-5", "SEFA on every prefix iff Like marginals on every prefix", mechanisms,
      suite, options, true);
}

TheoremResult check_theorem6(const TheoremOptions& options) {
  return timed(
      "theorem-6", "ParetoLike returns exactly the Pareto efficient allocations",
      [&](TheoremResult& result) {
        Mechanism pareto = mechanism_by_name("pareto-like");
        for (std::size_t n = 2; n <= options.exhaustive_agents; ++n) {
          for (std::size_t m = 1; m <= options.exhaustive_items; ++m) {
            std::size_t before = result.cases;
            // Both sides commute with relabelling agents, so one profile per
            // multiset of rows suffices.
            for_each_exhaustive(n, m, options.exhaustive_max_value, true,
                                [&](const Instance& instance) {
                                  ++result.cases;
                                  if (!result.passed) return;
                                  try {
                                    auto dist = pareto(BidProfile::sincere(instance), options.bound);
                                    auto frontier =
                                        pareto_frontier(instance.utilities(), options.bound);
                                    std::set<Allocation> want(frontier.begin(), frontier.end());
                                    std::set<Allocation> got;
                                    for (const auto& [a, p] : dist.support()) got.insert(a);
                                    if (got != want) {
                                      fail(result, "support differs from frontier on " +
                                                       serialize_instance(instance));
                                    }
                                  } catch (const WorkBoundExceeded&) {
                                    ++result.skipped;
                                  }
                                });
            result.findings.push_back(std::to_string(n) + "x" + std::to_string(m) + ": " +
                                      std::to_string(result.cases - before) + " instances");
          }
        }
      });
}

TheoremResult check_theorem7(const std::vector<Mechanism>& mechanisms, const Suite& suite,
                             const TheoremOptions& options) {
  return timed("theorem-7", "SP and PEP iff a fixed mixture of serial dictatorships",
               [&](TheoremResult& result) {
                 compare_sides(
                     result, mechanisms, suite, options,
                     [&](const Mechanism& mech, const Runs& runs) {
                       return holds_on(runs,
                                       [&](const Instance& i, const AllocationDistribution& d) {
                                         return check_pep(d, i.utilities(), options.bound).holds;
                                       }) &&
                              sp_clean(mech, suite, options);
                     },
                     [&](const Mechanism&, const Runs& runs) {
                       for (const auto& [n, group] : by_agents(runs)) {
                         if (!dictator_mixture_exists(runs, group, n, options.bound)) return false;
                       }
                       return true;
                     },
                     "sp-and-pep", "dictator-mixture");
               });
}

TheoremResult check_theorem8(const std::vector<Mechanism>& mechanisms, const Suite& suite,
                             const TheoremOptions& options) {
  return timed("theorem-8", "SP, PEP and PEA iff a single serial dictatorship",
               [&](TheoremResult& result) {
                 compare_sides(
                     result, mechanisms, suite, options,
                     [&](const Mechanism& mech, const Runs& runs) {
                       return holds_on(runs,
                                       [&](const Instance& i, const AllocationDistribution& d) {
                                         return check_pep(d, i.utilities(), options.bound).holds &&
                                                check_pea(d, i.utilities(), options.bound).holds;
                                       }) &&
                              sp_clean(mech, suite, options);
                     },
                     [&](const Mechanism&, const Runs& runs) {
                       for (const auto& [n, group] : by_agents(runs)) {
                         if (!matching_dictator(runs, group, n, options.bound)) return false;
                       }
                       return true;
                     },
                     "sp-pep-pea", "single-dictator");
               });
}

TheoremResult check_theorem9(const TheoremOptions& options) {
  return timed(
      "theorem-9", "no mechanism is both EFA and PEA on the first example",
      [&](TheoremResult& result) {
        const Matrix u = worked_example(1).instance.utilities();
        result.cases = 1;
        MarginalRange range = online_efa_marginal_range(u);
        Matrix half(u.rows(), u.cols());
        for (std::size_t i = 0; i < u.rows(); ++i) {
          for (std::size_t j = 0; j < u.cols(); ++j) half.at(i, j) = Rational(1, 2);
        }
        bool forced = range.feasible && range.low == half && range.high == half;
        result.findings.push_back(std::string("marginals forced to 1/2: ") + yes_no(forced));
        if (!forced) fail(result, "envy-free marginals are not forced to 1/2");

        auto ubar = expected_utilities(AssignmentMatrix{half}, u).diagonal();
        LpSolution lp = pea_lp(ubar, u, options.bound);
        std::ostringstream line;
        line << "expected utilities (" << ubar[0] << "," << ubar[1] << "), dominated by ("
             << lp.point[0] << "," << lp.point[1] << ")";
        result.findings.push_back(line.str());
        if (is_pea(ubar, u, options.bound)) fail(result, "forced utilities are PEA");
      });
}

TheoremResult check_corollary1(const TheoremOptions& options) {
  return timed("corollary-1", "BalancedLike is BEFP under 0/1 utilities",
               [&](TheoremResult& result) {
                 Mechanism balanced = mechanism_by_name("balanced-like");
                 for (std::size_t n = 2; n <= options.exhaustive_agents; ++n) {
                   for (std::size_t m = 1; m <= std::max<std::size_t>(options.exhaustive_items, 4); ++m) {
                     for_each_exhaustive(n, m, 1, false, [&](const Instance& instance) {
                       ++result.cases;
                       if (!result.passed) return;
                       try {
                         auto dist = balanced(BidProfile::sincere(instance), options.bound);
                         if (!check_befp(dist, instance.utilities()).holds) {
                           fail(result, "unit envy bound broken on " +
                                            serialize_instance(instance));
                         }
                       } catch (const WorkBoundExceeded&) {
                         ++result.skipped;
                       }
                     });
                   }
                 }
                 result.findings.push_back(std::to_string(result.cases) + " binary instances");
               });
}

TheoremResult check_corollary2(const std::vector<Mechanism>& mechanisms, const Suite& suite,
                               const TheoremOptions& options) {
  return timed("corollary-2", "SP, PEP and EFA iff ex post equivalent to ORP",
               [&](TheoremResult& result) {
                 Mechanism orp = mechanism_by_name("orp");
                 compare_sides(
                     result, mechanisms, suite, options,
                     [&](const Mechanism& mech, const Runs& runs) {
                       return holds_on(runs,
                                       [&](const Instance& i, const AllocationDistribution& d) {
                                         return check_pep(d, i.utilities(), options.bound).holds &&
                                                check_efa(d, i.utilities()).holds;
                                       }) &&
                              sp_clean(mech, suite, options);
                     },
                     [&](const Mechanism&, const Runs& runs) {
                       return holds_on(runs, [&](const Instance& i,
                                                 const AllocationDistribution& d) {
                         return d == orp(BidProfile::sincere(i), options.bound);
                       });
                     },
                     "sp-pep-efa", "orp-ex-post");
               });
}

TheoremReport run_theorems(const TheoremOptions& options) {
  TheoremReport report;
  Suite suite = small_suite(options);
  auto mechanisms = theorem_mechanisms();
  report.results.push_back(check_classification(suite, options));
  report.results.push_back(check_theorem3(mechanisms, suite, options));
  report.results.push_back(check_theorem4(mechanisms, suite, options));
  report.results.push_back(check_theorem5(mechanisms, suite, options));
  report.results.push_back(check_theorem6(options));
  report.results.push_back(check_theorem7(mechanisms, suite, options));
  report.results.push_back(check_theorem8(mechanisms, suite, options));
  report.results.push_back(check_theorem9(options));
  report.results.push_back(check_corollary1(options));
  report.results.push_back(check_corollary2(mechanisms, suite, options));
  return report;
}

}  // namespace fairdiv
