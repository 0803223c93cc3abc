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

// Slow, independent reference implementations used to cross-check the
// library. Everything here is plain brute force over mpq_class values and
// shares no code with src/.

#ifndef FAIRDIV_TESTS_REFERENCE_HPP_
#define FAIRDIV_TESTS_REFERENCE_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fairdiv/core.hpp"

namespace ref {

using Q = mpq_class;
using Table = std::vector<std::vector<Q>>;  // agents x items
using Alloc = std::vector<int>;             // owner per item, -1 discarded
using Dist = std::map<Alloc, Q>;

inline Table from(const fairdiv::Matrix& m) {
  Table t(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = m.at(i, j).to_mpq();
  }
  return t;
}

inline std::size_t agents(const Table& t) { return t.size(); }
inline std::size_t items(const Table& t) { return t.empty() ? 0 : t[0].size(); }

// Every non-wasteful allocation: each item goes to someone who values it.
inline std::vector<Alloc> allocations(const Table& u) {
  std::vector<Alloc> out{Alloc{}};
  for (std::size_t j = 0; j < items(u); ++j) {
    std::vector<Alloc> next;
    std::vector<int> likers;
    for (std::size_t i = 0; i < agents(u); ++i) {
      if (u[i][j] > 0) likers.push_back(static_cast<int>(i));
    }
    if (likers.empty()) likers.push_back(-1);
    for (const auto& a : out) {
      for (int i : likers) {
        Alloc b = a;
        b.push_back(i);
        next.push_back(b);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Q> utilities(const Alloc& a, const Table& u) {
  std::vector<Q> out(agents(u), 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] >= 0) out[a[j]] += u[a[j]][j];
  }
  return out;
}

inline bool dominates(const std::vector<Q>& a, const std::vector<Q>& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

inline std::set<Alloc> frontier(const Table& u) {
  auto all = allocations(u);
  std::set<Alloc> out;
  for (const auto& a : all) {
    bool dominated = false;
    for (const auto& b : all) {
      if (dominates(utilities(b, u), utilities(a, u))) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(a);
  }
  return out;
}

// Feasible agents for item j given the allocation of items 0..j-1.
using Rule = std::function<std::vector<int>(const Table& bids, const Alloc& prefix)>;

inline std::vector<int> bidders(const Table& bids, std::size_t j) {
  std::vector<int> out;
  for (std::size_t i = 0; i < agents(bids); ++i) {
    if (bids[i][j] > 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

inline Rule like() {
  return [](const Table& bids, const Alloc& prefix) { return bidders(bids, prefix.size()); };
}

inline Rule balanced() {
  return [](const Table& bids, const Alloc& prefix) {
    auto b = bidders(bids, prefix.size());
    if (b.empty()) return b;
    auto held = [&](int i) { return std::count(prefix.begin(), prefix.end(), i); };
    long fewest = held(b[0]);
    for (int i : b) fewest = std::min(fewest, static_cast<long>(held(i)));
    std::vector<int> out;
    for (int i : b) {
      if (held(i) == fewest) out.push_back(i);
    }
    return out;
  };
}

inline Rule maximum() {
  return [](const Table& bids, const Alloc& prefix) {
    std::size_t j = prefix.size();
    auto b = bidders(bids, j);
    if (b.empty()) return b;
    Q best = 0;
    for (int i : b) best = std::max(best, bids[i][j]);
    std::vector<int> out;
    for (int i : b) {
      if (bids[i][j] == best) out.push_back(i);
    }
    return out;
  };
}

inline Rule dictator(std::vector<int> order) {
  return [order](const Table& bids, const Alloc& prefix) {
    std::size_t j = prefix.size();
    for (int i : order) {
      if (bids[i][j] > 0) return std::vector<int>{i};
    }
    return std::vector<int>{};
  };
}

// Agent i is feasible iff some efficient allocation of all items extends the
// prefix with item j given to i.
inline Rule pareto() {
  return [](const Table& bids, const Alloc& prefix) {
    std::size_t j = prefix.size();
    std::set<int> out;
    for (const auto& f : frontier(bids)) {
      if (std::equal(prefix.begin(), prefix.end(), f.begin()) && f[j] >= 0) out.insert(f[j]);
    }
    return std::vector<int>(out.begin(), out.end());
  };
}

inline void expand(const Table& bids, const Rule& rule, Alloc& prefix, const Q& p, Dist& out) {
  if (prefix.size() == items(bids)) {
    out[prefix] += p;
    return;
  }
  auto feasible = rule(bids, prefix);
  if (feasible.empty()) feasible.push_back(-1);
  Q share = p / static_cast<long>(feasible.size());
  for (int i : feasible) {
    prefix.push_back(i);
    expand(bids, rule, prefix, share, out);
    prefix.pop_back();
  }
}

inline Dist simulate(const Table& bids, const Rule& rule) {
  Dist out;
  Alloc prefix;
  expand(bids, rule, prefix, Q(1), out);
  return out;
}

inline Dist random_priority(const Table& bids) {
  std::vector<int> order(agents(bids));
  std::iota(order.begin(), order.end(), 0);
  Dist out;
  long count = 0;
  do {
    for (const auto& [a, p] : simulate(bids, dictator(order))) out[a] += p;
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& [a, p] : out) p /= count;
  return out;
}

inline Table marginals(const Dist& d, std::size_t n, std::size_t m) {
  Table p(n, std::vector<Q>(m, 0));
  for (const auto& [a, q] : d) {
    for (std::size_t j = 0; j < m; ++j) {
      if (a[j] >= 0) p[a[j]][j] += q;
    }
  }
  return p;
}

// Expected value to agent i of agent k's bundle.
inline Q expected(const Table& p, const Table& u, std::size_t i, std::size_t k) {
  Q total = 0;
  for (std::size_t j = 0; j < items(u); ++j) total += p[k][j] * u[i][j];
  return total;
}

// Expected value to agent i of its own bundle, counting only items k likes.
inline Q expected_shared(const Table& p, const Table& u, std::size_t i, std::size_t k) {
  Q total = 0;
  for (std::size_t j = 0; j < items(u); ++j) {
    if (u[k][j] > 0) total += p[i][j] * u[i][j];
  }
  return total;
}

inline bool efa(const Dist& d, const Table& u) {
  auto p = marginals(d, agents(u), items(u));
  for (std::size_t i = 0; i < agents(u); ++i) {
    for (std::size_t k = 0; k < agents(u); ++k) {
      if (expected(p, u, i, i) < expected(p, u, i, k)) return false;
    }
  }
  return true;
}

inline bool sefa(const Dist& d, const Table& u) {
  auto p = marginals(d, agents(u), items(u));
  for (std::size_t i = 0; i < agents(u); ++i) {
    for (std::size_t k = 0; k < agents(u); ++k) {
      if (expected_shared(p, u, i, k) < expected(p, u, i, k)) return false;
    }
  }
  return true;
}

// Agent i's value for agent k's bundle.
inline Q bundle_value(const Alloc& a, const Table& u, std::size_t i, std::size_t k) {
  Q total = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == static_cast<int>(k)) total += u[i][j];
  }
  return total;
}

// Agent i's value for its own bundle over the items agent k likes.
inline Q shared_value(const Alloc& a, const Table& u, std::size_t i, std::size_t k) {
  Q total = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == static_cast<int>(i) && u[k][j] > 0) total += u[i][j];
  }
  return total;
}

inline bool efp(const Dist& d, const Table& u) {
  for (const auto& [a, q] : d) {
    for (std::size_t i = 0; i < agents(u); ++i) {
      for (std::size_t k = 0; k < agents(u); ++k) {
        if (bundle_value(a, u, i, i) < bundle_value(a, u, i, k)) return false;
      }
    }
  }
  return true;
}

inline bool sefp(const Dist& d, const Table& u) {
  for (const auto& [a, q] : d) {
    for (std::size_t i = 0; i < agents(u); ++i) {
      for (std::size_t k = 0; k < agents(u); ++k) {
        if (shared_value(a, u, i, k) < bundle_value(a, u, i, k)) return false;
      }
    }
  }
  return true;
}

// 0/1 utilities: realized envy is at most one unit.
inline bool befp(const Dist& d, const Table& u) {
  for (const auto& [a, q] : d) {
    for (std::size_t i = 0; i < agents(u); ++i) {
      for (std::size_t k = 0; k < agents(u); ++k) {
        if (bundle_value(a, u, i, i) + 1 < bundle_value(a, u, i, k)) return false;
      }
    }
  }
  return true;
}

inline bool pep(const Dist& d, const Table& u) {
  auto f = frontier(u);
  for (const auto& [a, q] : d) {
    if (!f.count(a)) return false;
  }
  return true;
}

// Two agents only: the target is dominated iff some point on a segment
// between two achievable utility vectors weakly improves every coordinate
// and strictly improves one.
inline bool pea_two_agents(const std::vector<Q>& target, const Table& u) {
  std::set<std::vector<Q>> points;
  for (const auto& a : allocations(u)) points.insert(utilities(a, u));
  std::vector<std::vector<Q>> v(points.begin(), points.end());
  for (const auto& a : v) {
    for (const auto& b : v) {
      // x(l) = b + l (a - b), l in [lo, hi] after x >= target.
      Q lo = 0, hi = 1;
      bool empty = false;
      for (int k = 0; k < 2 && !empty; ++k) {
        Q slope = a[k] - b[k];
        Q need = target[k] - b[k];
        if (slope == 0) {
          empty = need > 0;
        } else if (slope > 0) {
          lo = std::max(lo, Q(need / slope));
        } else {
          hi = std::min(hi, Q(need / slope));
        }
      }
      if (empty || lo > hi) continue;
      for (const Q& l : {lo, hi}) {
        std::vector<Q> x = {b[0] + l * (a[0] - b[0]), b[1] + l * (a[1] - b[1])};
        if (dominates(x, target)) return false;
      }
    }
  }
  return true;
}

// Library distribution in reference form.
inline Dist from(const fairdiv::AllocationDistribution& d) {
  Dist out;
  for (const auto& [a, p] : d.support()) out[a.owners()] = p.to_mpq();
  return out;
}

}  // namespace ref

#endif  // FAIRDIV_TESTS_REFERENCE_HPP_
