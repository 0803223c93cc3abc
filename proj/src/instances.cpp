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

#include "fairdiv/instances.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace fairdiv {

namespace {

// mt19937_64 output is fully specified, unlike the standard distributions,
// so draws go through these helpers to keep instances identical everywhere.
class Draw {
 public:
  explicit Draw(const DomainSpec& spec) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed),
                      static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(spec.domain),
                      static_cast<std::uint32_t>(spec.agents),
                      static_cast<std::uint32_t>(spec.items)};
    rng_.seed(seq);
  }

  // Uniform-ish in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) {
      std::swap(v[k - 1], v[static_cast<std::size_t>(between(0, k - 1))]);
    }
  }

 private:
  std::mt19937_64 rng_;
};

void ensure_liked_columns(Matrix& u, Draw& draw, std::int64_t lo,
                          std::int64_t hi, std::int64_t den) {
  for (std::size_t j = 0; j < u.cols(); ++j) {
    bool liked = false;
    for (std::size_t i = 0; i < u.rows() && !liked; ++i) {
      liked = u.at(i, j).is_positive();
    }
    if (!liked) {
      auto i = static_cast<std::size_t>(draw.between(0, u.rows() - 1));
      u.at(i, j) = Rational(draw.between(lo, hi), den);
    }
  }
}

bool columns_liked(const Matrix& u) {
  for (std::size_t j = 0; j < u.cols(); ++j) {
    bool liked = false;
    for (std::size_t i = 0; i < u.rows(); ++i) liked |= u.at(i, j).is_positive();
    if (!liked) return false;
  }
  return true;
}

bool nonnegative(const Matrix& u) {
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (const auto& v : u.row(i)) {
      if (v.sign() < 0) return false;
    }
  }
  return true;
}

bool rows_are_permutations_of(const Matrix& u, std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < u.rows(); ++i) {
    std::vector<Rational> row(u.row(i).begin(), u.row(i).end());
    std::sort(row.begin(), row.end());
    if (row != values) return false;
  }
  return true;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

std::size_t parse_count(const std::string& token, const char* what) {
  std::size_t used = 0;
  long long value = -1;
  try {
    value = std::stoll(token, &used);
  } catch (const std::logic_error&) {
  }
  if (used != token.size() || value < 0) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + token + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

std::string domain_name(Domain domain) {
  switch (domain) {
    case Domain::kGeneral: return "general";
    case Domain::kNonZero: return "nonzero";
    case Domain::kBinary: return "binary";
    case Domain::kIdenticalCardinal: return "identical-cardinal";
    case Domain::kIdenticalOrdinal: return "identical-ordinal";
    case Domain::kBorda: return "borda";
    case Domain::kLexicographic: return "lexicographic";
  }
  return "?";
}

std::vector<Domain> all_domains() {
  return {Domain::kGeneral,           Domain::kNonZero,
          Domain::kBinary,            Domain::kIdenticalCardinal,
          Domain::kIdenticalOrdinal,  Domain::kBorda,
          Domain::kLexicographic};
}

Domain parse_domain(std::string_view name) {
  for (Domain d : all_domains()) {
    if (domain_name(d) == name) return d;
  }
  throw std::invalid_argument("unknown domain '" + std::string(name) + "'");
}

Instance generate(const DomainSpec& spec) {
  const std::size_t n = spec.agents;
  const std::size_t m = spec.items;
  if (n == 0) throw std::invalid_argument("domain spec needs at least one agent");
  if (spec.value_bound < 1 || spec.denominator < 1) {
    throw std::invalid_argument("value bound and denominator must be positive");
  }
  const std::int64_t d = spec.denominator;
  const std::int64_t top = spec.value_bound * d;
  Draw draw(spec);
  Matrix u(n, m);

  switch (spec.domain) {
    case Domain::kGeneral:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) u.at(i, j) = Rational(draw.between(0, top), d);
      }
      ensure_liked_columns(u, draw, 1, top, d);
      break;
    case Domain::kNonZero:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) u.at(i, j) = Rational(draw.between(1, top), d);
      }
      break;
    case Domain::kBinary:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) u.at(i, j) = draw.between(0, 1);
      }
      ensure_liked_columns(u, draw, 1, 1, 1);
      break;
    case Domain::kIdenticalCardinal:
      for (std::size_t j = 0; j < m; ++j) {
        Rational v(draw.between(1, top), d);
        for (std::size_t i = 0; i < n; ++i) u.at(i, j) = v;
      }
      break;
    case Domain::kIdenticalOrdinal: {
      if (static_cast<std::uint64_t>(top) < m) {
        throw std::invalid_argument(
            "identical-ordinal needs value_bound*denominator >= items");
      }
      std::vector<std::size_t> ranking(m);
      for (std::size_t j = 0; j < m; ++j) ranking[j] = j;
      draw.shuffle(ranking);
      for (std::size_t i = 0; i < n; ++i) {
        std::set<std::int64_t> picked;
        while (picked.size() < m) picked.insert(draw.between(1, top));
        std::vector<std::int64_t> values(picked.rbegin(), picked.rend());
        for (std::size_t r = 0; r < m; ++r) u.at(i, ranking[r]) = Rational(values[r], d);
      }
      break;
    }
    case Domain::kBorda:
    case Domain::kLexicographic:
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row;
        for (std::size_t r = 0; r < m; ++r) {
          row.emplace_back(spec.domain == Domain::kBorda
                               ? static_cast<std::int64_t>(r + 1)
                               : std::int64_t{1} << r);
        }
        draw.shuffle(row);
        for (std::size_t j = 0; j < m; ++j) u.at(i, j) = row[j];
      }
      break;
  }
  return Instance(std::move(u));
}

bool satisfies_domain(const Matrix& u, Domain domain) {
  if (u.rows() == 0 || !nonnegative(u) || !columns_liked(u)) return false;
  const std::size_t n = u.rows();
  const std::size_t m = u.cols();
  switch (domain) {
    case Domain::kGeneral:
      return true;
    case Domain::kNonZero:
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& v : u.row(i)) {
          if (!v.is_positive()) return false;
        }
      }
      return true;
    case Domain::kBinary:
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& v : u.row(i)) {
          if (!v.is_zero() && v != Rational(1)) return false;
        }
      }
      return true;
    case Domain::kIdenticalCardinal:
      for (std::size_t i = 1; i < n; ++i) {
        if (!std::equal(u.row(i).begin(), u.row(i).end(), u.row(0).begin())) {
          return false;
        }
      }
      return true;
    case Domain::kIdenticalOrdinal:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < m; ++a) {
          if (!u.at(i, a).is_positive()) return false;
          for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            if ((u.at(i, a) <=> u.at(i, b)) != (u.at(0, a) <=> u.at(0, b)) ||
                u.at(i, a) == u.at(i, b)) {
              return false;
            }
          }
        }
      }
      return true;
    case Domain::kBorda: {
      std::vector<Rational> values;
      for (std::size_t r = 0; r < m; ++r) values.emplace_back(static_cast<std::int64_t>(r + 1));
      return rows_are_permutations_of(u, values);
    }
    case Domain::kLexicographic: {
      std::vector<Rational> values;
      for (std::size_t r = 0; r < m; ++r) values.emplace_back(std::int64_t{1} << r);
      return rows_are_permutations_of(u, values);
    }
  }
  return false;
}

ConstructedMechanism::ConstructedMechanism(std::string name, Mechanism base,
                                           std::vector<Override> overrides)
    : name_(std::move(name)), base_(std::move(base)), overrides_(std::move(overrides)) {
  for (const auto& o : overrides_) {
    if (o.distribution.agents() != o.bids.agents() ||
        o.distribution.items() != o.bids.items()) {
      throw std::invalid_argument("override distribution does not match its bids");
    }
  }
}

AllocationDistribution ConstructedMechanism::from_assignment(
    const AssignmentMatrix& assignment) {
  const Matrix& p = assignment.p;
  AllocationDistribution::Support support{{Allocation(std::vector<int>{}), Rational(1)}};
  for (std::size_t j = 0; j < p.cols(); ++j) {
    Rational column;
    std::vector<std::pair<int, Rational>> options;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      if (p.at(i, j).sign() < 0) throw std::invalid_argument("negative probability");
      if (p.at(i, j).is_positive()) {
        options.emplace_back(static_cast<int>(i), p.at(i, j));
        column += p.at(i, j);
      }
    }
    if (options.empty()) {
      options.emplace_back(kDiscarded, Rational(1));
    } else if (column != Rational(1)) {
      throw std::invalid_argument("assignment column o" + std::to_string(j + 1) +
                                  " sums to " + column.to_string());
    }
    AllocationDistribution::Support next;
    for (const auto& [allocation, prob] : support) {
      for (const auto& [agent, q] : options) {
        std::vector<int> owners = allocation.owners();
        owners.push_back(agent);
        next[Allocation(std::move(owners))] += prob * q;
      }
    }
    support = std::move(next);
  }
  return AllocationDistribution(p.rows(), p.cols(), std::move(support));
}

Mechanism ConstructedMechanism::mechanism() const {
  return Mechanism(name_, [base = base_, overrides = overrides_](
                              const BidProfile& bids, const WorkBound& bound) {
    for (const auto& o : overrides) {
      if (o.bids == bids) return o.distribution;
    }
    return base(bids, bound);
  });
}

WorkedExample worked_example(int id, const Rational& example2_probability,
                           const Rational& example4_epsilon) {
  switch (id) {
    case 1:
      return {1, Instance{{1, 2}, {2, 1}}, std::nullopt};
    case 2: {
      const Rational& q = example2_probability;
      if (!(Rational(1, 2) < q) || Rational(1) < q) {
        throw std::invalid_argument("example 2 probability must lie in (1/2, 1]");
      }
      Instance instance{{1, 1}, {0, 1}};
      AllocationDistribution::Support support;
      support.emplace(Allocation({0, 1}), q);
      if (q != Rational(1)) support.emplace(Allocation({0, 0}), Rational(1) - q);
      ConstructedMechanism mech(
          "example2", rule_mechanism(FeasibilityRule::like()),
          {{BidProfile::sincere(instance),
            AllocationDistribution(2, 2, std::move(support))}});
      return {2, instance, std::move(mech)};
    }
    case 3:
      return {3, Instance{{1, 4}, {2, 3}}, std::nullopt};
    case 4: {
      const Rational& eps = example4_epsilon;
      if (!eps.is_positive() || !(eps < Rational(1))) {
        throw std::invalid_argument("example 4 epsilon must lie in (0, 1)");
      }
      Instance instance{{1, 2}, {2, 1}};
      AllocationDistribution::Support support;
      support.emplace(Allocation({0, 0}), Rational(1) - eps);
      support.emplace(Allocation({0, 1}), eps);
      ConstructedMechanism mech(
          "example4", rule_mechanism(FeasibilityRule::maximum_like()),
          {{BidProfile::sincere(instance),
            AllocationDistribution(2, 2, std::move(support))}});
      return {4, instance, std::move(mech)};
    }
    default:
      throw std::invalid_argument("unknown worked example " + std::to_string(id));
  }
}

Matrix parse_matrix(std::string_view text) {
  auto lines = lines_of(text);
  if (lines.empty()) throw std::invalid_argument("empty matrix file");
  auto header = tokens_of(lines[0]);
  if (header.size() != 2) {
    throw std::invalid_argument("first line must be 'n m'");
  }
  std::size_t n = parse_count(header[0], "agent count");
  std::size_t m = parse_count(header[1], "item count");
  std::size_t expected_rows = m == 0 ? 0 : n;
  if (lines.size() - 1 != expected_rows) {
    throw std::invalid_argument("expected " + std::to_string(expected_rows) +
                                " rows, found " + std::to_string(lines.size() - 1));
  }
  Matrix u(n, m);
  for (std::size_t i = 0; i < expected_rows; ++i) {
    auto tokens = tokens_of(lines[i + 1]);
    if (tokens.size() != m) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has " +
                                  std::to_string(tokens.size()) + " entries, expected " +
                                  std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) u.at(i, j) = Rational::parse(tokens[j]);
  }
  return u;
}

Instance parse_instance(std::string_view text) { return Instance(parse_matrix(text)); }

BidProfile parse_bids(std::string_view text) { return BidProfile(parse_matrix(text)); }

std::string serialize_matrix(const Matrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  if (m.cols() == 0) return out.str();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::uint64_t for_each_exhaustive(std::size_t agents, std::size_t items,
                                  int max_value, bool agent_symmetric,
                                  const std::function<void(const Instance&)>& visit) {
  if (agents == 0 || max_value < 1) {
    throw std::invalid_argument("exhaustive suite needs agents >= 1 and max_value >= 1");
  }
  const auto base = static_cast<std::uint64_t>(max_value) + 1;
  std::uint64_t row_count = 1;
  for (std::size_t j = 0; j < items; ++j) row_count *= base;

  // Row r encodes item values most-significant first, so numeric order is
  // lexicographic order of rows.
  std::vector<std::vector<Rational>> rows(row_count, std::vector<Rational>(items));
  for (std::uint64_t r = 0; r < row_count; ++r) {
    std::uint64_t code = r;
    for (std::size_t j = items; j > 0; --j) {
      rows[r][j - 1] = static_cast<std::int64_t>(code % base);
      code /= base;
    }
  }

  std::vector<std::uint64_t> pick(agents, 0);
  std::uint64_t visited = 0;
  Matrix u(agents, items);
  for (;;) {
    bool liked = true;
    for (std::size_t j = 0; j < items && liked; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < agents && !any; ++i) any = rows[pick[i]][j].is_positive();
      liked = any;
    }
    if (liked) {
      for (std::size_t i = 0; i < agents; ++i) {
        for (std::size_t j = 0; j < items; ++j) u.at(i, j) = rows[pick[i]][j];
      }
      visit(Instance(u));
      ++visited;
    }
    // Advance the odometer (last agent fastest).
    std::size_t i = agents;
    for (;;) {
      if (i == 0) return visited;
      --i;
      if (++pick[i] < row_count) break;
      pick[i] = 0;
    }
    if (agent_symmetric) {
      for (std::size_t k = i + 1; k < agents; ++k) pick[k] = pick[i];
    }
  }
}

Suite parse_manifest(std::string_view text, const WorkBound& bound) {
  Suite suite;
  for (const auto& line : lines_of(text)) {
    auto t = tokens_of(line);
    if (t[0] == "example") {
      if (t.size() != 2) throw std::invalid_argument("usage: example <id>");
      int id = static_cast<int>(parse_count(t[1], "example id"));
      suite.push_back({"example" + std::to_string(id), worked_example(id).instance});
    } else if (t[0] == "instance") {
      if (t.size() < 3) throw std::invalid_argument("usage: instance <n> <m> <values...>");
      std::size_t n = parse_count(t[1], "agent count");
      std::size_t m = parse_count(t[2], "item count");
      if (t.size() != 3 + n * m) {
        throw std::invalid_argument("instance line needs " + std::to_string(n * m) +
                                    " values");
      }
      Matrix u(n, m);
      for (std::size_t k = 0; k < n * m; ++k) u.at(k / m, k % m) = Rational::parse(t[3 + k]);
      std::string label = "instance";
      for (std::size_t k = 1; k < t.size(); ++k) label += " " + t[k];
      suite.push_back({label, Instance(std::move(u))});
    } else if (t[0] == "exhaustive") {
      if (t.size() != 4) throw std::invalid_argument("usage: exhaustive <n> <m> <max>");
      std::size_t n = parse_count(t[1], "agent count");
      std::size_t m = parse_count(t[2], "item count");
      int max_value = static_cast<int>(parse_count(t[3], "max value"));
      long double rough = 1;
      for (std::size_t k = 0; k < n * m; ++k) rough *= max_value + 1;
      bound.require(rough, "exhaustive suite");
      std::size_t index = 0;
      for_each_exhaustive(n, m, max_value, false, [&](const Instance& instance) {
        suite.push_back({"exhaustive " + std::to_string(n) + "x" + std::to_string(m) +
                             " #" + std::to_string(index++),
                         instance});
      });
    } else {
      if (t.size() < 5 || t.size() > 7) {
        throw std::invalid_argument(
            "usage: <domain> <n> <m> <seed> <count> [value_bound] [denominator]");
      }
      DomainSpec spec;
      spec.domain = parse_domain(t[0]);
      spec.agents = parse_count(t[1], "agent count");
      spec.items = parse_count(t[2], "item count");
      std::uint64_t seed = parse_count(t[3], "seed");
      std::size_t count = parse_count(t[4], "count");
      if (t.size() > 5) spec.value_bound = static_cast<std::int64_t>(parse_count(t[5], "value bound"));
      if (t.size() > 6) spec.denominator = static_cast<std::int64_t>(parse_count(t[6], "denominator"));
      for (std::size_t k = 0; k < count; ++k) {
        spec.seed = seed + k;
        std::ostringstream label;
        label << t[0] << ' ' << spec.agents << 'x' << spec.items << " seed=" << spec.seed;
        suite.push_back({label.str(), generate(spec)});
      }
    }
  }
  return suite;
}

std::vector<std::string> builtin_suite_names() {
  return {"general", "identical", "binary", "small-suite"};
}

std::string builtin_manifest(std::string_view name, std::size_t count) {
  // Splits `count` over `lines` as evenly as possible.
  auto spread = [count](const std::vector<std::string>& lines) {
    std::ostringstream out;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      std::size_t share = count / lines.size() + (k < count % lines.size() ? 1 : 0);
      if (share == 0) continue;
      std::istringstream in(lines[k]);
      std::string domain, n, m, seed, rest;
      in >> domain >> n >> m >> seed;
      std::getline(in, rest);
      out << domain << ' ' << n << ' ' << m << ' ' << seed << ' ' << share << rest << '\n';
    }
    return out.str();
  };
  if (name == "general") {
    return "example 1\nexample 2\nexample 3\n" +
           spread({"general 2 2 1000 3 1", "general 2 3 2000 3 1",
                   "general 3 2 3000 3 1", "general 3 3 4000 2 1",
                   "general 2 3 5000 2 2", "nonzero 2 3 6000 3 1",
                   "borda 2 3 7000", "lexicographic 3 3 8000",
                   "identical-ordinal 2 3 9000 3 1", "binary 3 3 10000"});
  }
  if (name == "identical") {
    return spread({"identical-cardinal 2 2 11000 5 1",
                   "identical-cardinal 2 3 12000 5 1",
                   "identical-cardinal 3 2 13000 5 1",
                   "identical-cardinal 3 3 14000 5 1",
                   "identical-cardinal 2 4 15000 3 2"});
  }
  if (name == "binary") {
    return "example 2\n" +
           spread({"binary 2 2 16000", "binary 2 3 17000", "binary 3 3 18000",
                   "binary 2 4 19000", "binary 3 4 20000"});
  }
  if (name == "small-suite") {
    return "example 1\nexample 2\nexample 3\n" +
           spread({"general 2 2 21000 3 1", "general 2 3 22000 3 1",
                   "general 3 2 23000 2 1", "binary 2 3 24000",
                   "nonzero 2 2 25000 2 2"});
  }
  throw std::invalid_argument("unknown built-in suite '" + std::string(name) + "'");
}

}  // namespace fairdiv
