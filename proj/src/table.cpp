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

#include "fairdiv/table.hpp"

#include <chrono>
#include <sstream>

namespace fairdiv {

namespace {

AxiomVerdict check_axiom(Axiom axiom, const AllocationDistribution& dist,
                         const Matrix& u, const CheckOptions& options) {
  switch (axiom) {
    case Axiom::kEFA: return check_efa(dist, u);
    case Axiom::kSEFA: return check_sefa(dist, u);
    case Axiom::kEFP: return check_efp(dist, u);
    case Axiom::kSEFP: return check_sefp(dist, u);
    case Axiom::kBEFP:
      return options.strict_befp ? check_befp(dist, u) : check_unit_envy_bound(dist, u);
    case Axiom::kPEA: return check_pea(dist, u, options.bound);
    case Axiom::kPEP: return check_pep(dist, u, options.bound);
    case Axiom::kSP:
    case Axiom::kOSP:
      break;
  }
  throw std::logic_error("not a distribution axiom");
}

// SP/OSP on one instance: grid search first, then probes. A probe failure
// only counts once it has been turned into a verified deviation.
struct IncentiveOutcome {
  std::optional<Deviation> deviation;
  std::size_t probes = 0;
  bool unexplained_probe_failure = false;
};

IncentiveOutcome check_incentives(const Mechanism& mech, Axiom axiom,
                                  const Instance& instance,
                                  const CheckOptions& options) {
  IncentiveOutcome out;
  BidGrid grid = BidGrid::build(instance, options.grid_extra);
  out.deviation = axiom == Axiom::kSP
                      ? sp_falsify(mech, instance, grid, options.bound)
                      : osp_falsify(mech, instance, grid, options.bound);
  if (out.deviation || !options.probes) return out;
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    for (std::size_t j = 0; j < instance.items(); ++j) {
      std::optional<ProbeFailure> failure =
          step_probe_detail(mech, instance, i, j, grid, options.bound);
      ++out.probes;
      if (!failure && axiom == Axiom::kSP) {
        failure = memoryless_probe_detail(mech, instance, i, j, grid, options.bound);
        ++out.probes;
      }
      if (failure) {
        out.deviation = construct_deviation(mech, *failure, options.bound);
        out.unexplained_probe_failure = !out.deviation;
        return out;
      }
    }
  }
  return out;
}

struct Row {
  Block block;
  const char* mechanism;
  // Nine verdicts in axiom order: '+' holds, '-' fails, '*' marks prior work.
  const char* verdicts;
};

constexpr Row kRows[] = {
    {Block::kGeneral, "orp", "+ + + + - - - - +"},
    {Block::kGeneral, "osd", "+ + - - - - - + +"},
    {Block::kGeneral, "maximum-like", "- - - - - - - + +"},
    {Block::kGeneral, "pareto-like", "- - - - - - - - +"},
    {Block::kGeneral, "like", "+* + +* + -* - -* - -"},
    {Block::kGeneral, "balanced-like", "-* + -* - -* - -* - -"},
    {Block::kIdentical, "like", "+* + +* + -* - - + +"},
    {Block::kIdentical, "balanced-like", "- + + + -* - - + +"},
    {Block::kBinary, "like", "+* + +* + -* - -* + +"},
    {Block::kBinary, "balanced-like", "-* + +* - -* - +* + +"},
};

std::vector<ExpectedCell> build_reference() {
  std::vector<ExpectedCell> cells;
  for (const Row& row : kRows) {
    std::istringstream in(row.verdicts);
    std::string token;
    std::size_t k = 0;
    while (in >> token) {
      cells.push_back({row.block, row.mechanism, all_axioms().at(k++), token[0] == '+',
                       token.size() > 1 && token[1] == '*'});
    }
    if (k != all_axioms().size()) throw std::logic_error("malformed reference row");
  }
  return cells;
}

}  // namespace

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kSP: return "sp";
    case Axiom::kOSP: return "osp";
    case Axiom::kEFA: return "efa";
    case Axiom::kSEFA: return "sefa";
    case Axiom::kEFP: return "efp";
    case Axiom::kSEFP: return "sefp";
    case Axiom::kBEFP: return "befp";
    case Axiom::kPEA: return "pea";
    case Axiom::kPEP: return "pep";
  }
  return "?";
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms = {
      Axiom::kSP,   Axiom::kOSP,  Axiom::kEFA, Axiom::kSEFA, Axiom::kEFP,
      Axiom::kSEFP, Axiom::kBEFP, Axiom::kPEA, Axiom::kPEP};
  return axioms;
}

Axiom parse_axiom(std::string_view name) {
  for (Axiom a : all_axioms()) {
    if (axiom_name(a) == name) return a;
  }
  throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
}

std::string block_name(Block block) {
  switch (block) {
    case Block::kGeneral: return "general";
    case Block::kIdentical: return "identical";
    case Block::kBinary: return "binary";
  }
  return "?";
}

const std::vector<Block>& all_blocks() {
  static const std::vector<Block> blocks = {Block::kGeneral, Block::kIdentical,
                                            Block::kBinary};
  return blocks;
}

std::string observation_name(Observation observation) {
  switch (observation) {
    case Observation::kHolds: return "holds";
    case Observation::kViolated: return "violated";
    case Observation::kInconclusive: return "inconclusive";
  }
  return "?";
}

SuiteCheck check_suite(const Mechanism& mech, Axiom axiom, const Suite& suite,
                       const CheckOptions& options) {
  SuiteCheck result;
  for (const auto& entry : suite) {
    const Instance& instance = entry.instance;
    try {
      if (axiom == Axiom::kSP || axiom == Axiom::kOSP) {
        IncentiveOutcome outcome = check_incentives(mech, axiom, instance, options);
        result.probes += outcome.probes;
        ++result.instances;
        if (outcome.deviation) {
          result.observed = Observation::kViolated;
          result.witness = Evidence{entry.label, instance, std::nullopt, outcome.deviation};
          return result;
        }
        if (outcome.unexplained_probe_failure) {
          result.observed = Observation::kInconclusive;
          result.note = "probe failed on " + entry.label +
                        " but no deviation could be constructed";
          return result;
        }
        continue;
      }
      AxiomVerdict verdict = check_axiom(
          axiom, mech(BidProfile::sincere(instance), options.bound),
          instance.utilities(), options);
      ++result.instances;
      if (!verdict.holds) {
        result.observed = Observation::kViolated;
        result.witness = Evidence{entry.label, instance, std::move(verdict), std::nullopt};
        return result;
      }
    } catch (const WorkBoundExceeded& e) {
      ++result.skipped;
      if (result.note.empty()) result.note = e.what();
    }
  }
  if (result.instances == 0) result.observed = Observation::kInconclusive;
  return result;
}

const std::vector<ExpectedCell>& reference_table() {
  static const std::vector<ExpectedCell> cells = build_reference();
  return cells;
}

bool CellResult::matches() const {
  return check.observed ==
         (expected.holds ? Observation::kHolds : Observation::kViolated);
}

bool CellResult::inconclusive() const {
  return !matches() &&
         !(expected.holds && check.observed == Observation::kViolated);
}

std::size_t TableReport::mismatches() const {
  std::size_t count = 0;
  for (const auto& cell : cells) count += !cell.matches() && !cell.inconclusive();
  for (const auto& eq : equivalences) count += eq.observed != eq.expected;
  return count;
}

std::size_t TableReport::inconclusive() const {
  std::size_t count = 0;
  for (const auto& cell : cells) count += cell.inconclusive();
  return count;
}

int TableReport::exit_code() const {
  if (mismatches() > 0) return 1;
  if (inconclusive() > 0) return 2;
  return 0;
}

Suite block_suite(Block block, std::size_t count, const WorkBound& bound) {
  return parse_manifest(builtin_manifest(block_name(block), count), bound);
}

std::map<Block, Suite> parse_table_manifest(std::string_view text,
                                            const WorkBound& bound) {
  std::map<Block, std::string> sections;
  std::optional<Block> current;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '[') {
      auto close = line.find(']', first);
      if (close == std::string::npos) throw std::invalid_argument("bad section: " + line);
      std::string name = line.substr(first + 1, close - first - 1);
      current.reset();
      for (Block b : all_blocks()) {
        if (block_name(b) == name) current = b;
      }
      if (!current) throw std::invalid_argument("unknown section '" + name + "'");
      sections[*current];
      continue;
    }
    if (first == std::string::npos || line[first] == '#') continue;
    if (!current) throw std::invalid_argument("manifest line outside a section: " + line);
    sections[*current] += line + "\n";
  }
  std::map<Block, Suite> suites;
  for (const auto& [block, body] : sections) suites[block] = parse_manifest(body, bound);
  return suites;
}

TableReport run_table(const TableOptions& options) {
  TableReport report;
  for (const auto& [block, suite] : options.suites) report.suite_sizes[block] = suite.size();

  for (const ExpectedCell& expected : reference_table()) {
    auto it = options.suites.find(expected.block);
    static const Suite kEmpty;
    const Suite& suite = it == options.suites.end() ? kEmpty : it->second;
    CheckOptions check;
    check.bound = options.bound;
    check.grid_extra = options.grid_extra;
    check.strict_befp = expected.block == Block::kBinary;
    check.probes = expected.holds;
    auto start = std::chrono::steady_clock::now();
    CellResult cell{expected,
                    check_suite(mechanism_by_name(expected.mechanism), expected.axiom,
                                suite, check),
                    0};
    cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                       .count();
    report.cells.push_back(std::move(cell));
  }

  // With identical utilities every non-wasteful allocation has the same
  // utilitarian welfare, so both rules reduce to Like.
  auto identical = options.suites.find(Block::kIdentical);
  if (identical != options.suites.end()) {
    Mechanism like = mechanism_by_name("like");
    for (const char* name : {"maximum-like", "pareto-like"}) {
      Mechanism mech = mechanism_by_name(name);
      EquivalenceResult eq{name, "like", true, true, true, 0, std::nullopt};
      for (const auto& entry : identical->second) {
        try {
          BidProfile bids = BidProfile::sincere(entry.instance);
          ++eq.instances;
          if (!ex_post_equivalent(mech, like, bids, options.bound)) {
            eq.observed = false;
            eq.counterexample = entry.label;
            break;
          }
        } catch (const WorkBoundExceeded&) {
          --eq.instances;
        }
      }
      report.equivalences.push_back(std::move(eq));
    }
  }
  return report;
}

}  // namespace fairdiv
