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

#include "fairdiv/report.hpp"

#include <iomanip>
#include <sstream>

namespace fairdiv {

namespace {

Json rationals(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

std::string join(std::span<const Rational> values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += " ";
    out += values[k].to_string();
  }
  return out;
}

Json witness_json(const Witness& w, std::size_t agents) {
  Json out = Json::object();
  if (w.agents) out["agents"] = {w.agents->first + 1, w.agents->second + 1};
  if (w.allocation) out["allocation"] = to_json(*w.allocation, agents);
  if (w.dominator) out["dominator"] = to_json(*w.dominator, agents);
  if (w.point) out["point"] = rationals(*w.point);
  if (!w.mixture.empty()) {
    Json mixture = Json::array();
    for (const auto& [allocation, weight] : w.mixture) {
      mixture.push_back({{"allocation", to_json(allocation, agents)},
                         {"weight", weight.to_string()}});
    }
    out["mixture"] = std::move(mixture);
  }
  return out;
}

Json evidence_json(const Evidence& e) {
  Json out = {{"label", e.label}, {"instance", to_json(e.instance.utilities())}};
  if (e.verdict) out["verdict"] = to_json(*e.verdict, e.instance.agents());
  if (e.deviation) out["deviation"] = to_json(*e.deviation);
  return out;
}

std::string pad(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

}  // namespace

Json to_json(const Rational& value) { return value.to_string(); }

Json to_json(const Matrix& matrix) {
  Json out = Json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) out.push_back(rationals(matrix.row(r)));
  return out;
}

Json to_json(const Allocation& allocation, std::size_t agents) {
  Json owners = Json::array();
  for (int o : allocation.owners()) {
    if (o == kDiscarded) {
      owners.push_back(nullptr);
    } else {
      owners.push_back(o + 1);
    }
  }
  return {{"owners", std::move(owners)}, {"bundles", allocation.to_string(agents)}};
}

Json to_json(const AllocationDistribution& dist) {
  Json support = Json::array();
  for (const auto& [allocation, p] : dist.support()) {
    Json entry = to_json(allocation, dist.agents());
    entry["probability"] = p.to_string();
    support.push_back(std::move(entry));
  }
  return {{"agents", dist.agents()},
          {"items", dist.items()},
          {"support", std::move(support)},
          {"assignment", to_json(marginals(dist).p)}};
}

Json to_json(const AxiomVerdict& verdict, std::size_t agents) {
  Json out = {{"property", verdict.property},
              {"holds", verdict.holds},
              {"margin", verdict.margin.to_string()}};
  if (verdict.witness) out["witness"] = witness_json(*verdict.witness, agents);
  return out;
}

Json to_json(const Deviation& d) {
  Json out = {{"instance", to_json(d.instance.utilities())}, {"agent", d.agent + 1}};
  out["item"] = d.item ? Json(*d.item + 1) : Json(nullptr);
  out["bids"] = rationals(d.bids);
  out["sincere_utility"] = d.sincere.to_string();
  out["deviant_utility"] = d.deviant.to_string();
  out["gain"] = d.gain().to_string();
  return out;
}

Json to_json(const ProbeFailure& f) {
  return {{"instance", to_json(f.instance.utilities())},
          {"agent", f.agent + 1},
          {"item", f.item + 1},
          {"low_bids", rationals(f.low_bids)},
          {"high_bids", rationals(f.high_bids)},
          {"low_probability", f.low.to_string()},
          {"high_probability", f.high.to_string()}};
}

Json to_json(const Classification& c) {
  auto optional = [](const auto& value) {
    return value ? to_json(*value) : Json(nullptr);
  };
  return {{"mechanism", c.mechanism},
          {"instances", c.instances},
          {"step", c.step},
          {"memoryless", c.memoryless},
          {"step_failure", optional(c.step_failure)},
          {"memoryless_failure", optional(c.memoryless_failure)},
          {"sp_deviation", optional(c.sp_deviation)},
          {"osp_deviation", optional(c.osp_deviation)},
          {"constructed_deviation", optional(c.constructed)},
          {"sp_consistent", c.sp_consistent},
          {"osp_consistent", c.osp_consistent}};
}

Json to_json(const SuiteCheck& check) {
  Json out = {{"observed", observation_name(check.observed)},
              {"instances", check.instances},
              {"skipped", check.skipped},
              {"probes", check.probes}};
  out["witness"] = check.witness ? evidence_json(*check.witness) : Json(nullptr);
  if (!check.note.empty()) out["note"] = check.note;
  return out;
}

Json to_json(const TableReport& report, bool with_timing) {
  Json suites = Json::object();
  for (const auto& [block, size] : report.suite_sizes) suites[block_name(block)] = size;
  Json cells = Json::array();
  for (const auto& cell : report.cells) {
    Json entry = {{"block", block_name(cell.expected.block)},
                  {"mechanism", cell.expected.mechanism},
                  {"axiom", axiom_name(cell.expected.axiom)},
                  {"expected", cell.expected.holds ? "holds" : "violated"},
                  {"provenance", cell.expected.prior_work ? "prior work" : "reference"},
                  {"reproduced", cell.matches()}};
    Json check = to_json(cell.check);
    for (auto& [key, value] : check.items()) entry[key] = value;
    if (with_timing) entry["seconds"] = cell.seconds;
    cells.push_back(std::move(entry));
  }
  Json equivalences = Json::array();
  for (const auto& eq : report.equivalences) {
    equivalences.push_back({{"block", "identical"},
                            {"mechanism", eq.mechanism},
                            {"reference", eq.reference},
                            {"relation", eq.ex_post ? "ex post" : "ex ante"},
                            {"expected", eq.expected},
                            {"observed", eq.observed},
                            {"instances", eq.instances},
                            {"counterexample", eq.counterexample ? Json(*eq.counterexample)
                                                                 : Json(nullptr)}});
  }
  return {{"suites", std::move(suites)},
          {"cells", std::move(cells)},
          {"equivalences", std::move(equivalences)},
          {"mismatches", report.mismatches()},
          {"inconclusive", report.inconclusive()},
          {"exit_code", report.exit_code()}};
}

Json to_json(const TheoremReport& report, bool with_timing) {
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json entry = {{"id", r.id},
                  {"claim", r.claim},
                  {"passed", r.passed},
                  {"cases", r.cases},
                  {"skipped", r.skipped},
                  {"findings", r.findings},
                  {"failure", r.failure.empty() ? Json(nullptr) : Json(r.failure)}};
    if (with_timing) entry["seconds"] = r.seconds;
    results.push_back(std::move(entry));
  }
  return {{"results", std::move(results)},
          {"passed", report.passed()},
          {"exit_code", report.exit_code()}};
}

Json envelope(const std::string& command, const Json& body) {
  Json out = {{"schema", kReportSchemaVersion}, {"command", command}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

std::string render_matrix(const Matrix& matrix) {
  std::vector<std::size_t> width(matrix.cols(), 0);
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      width[c] = std::max(width[c], matrix.at(r, c).to_string().size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    out << "  ";
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c]))
          << matrix.at(r, c).to_string();
    }
    out << "\n";
  }
  return out.str();
}

std::string render_distribution(const AllocationDistribution& dist) {
  std::ostringstream out;
  out << "support (" << dist.size() << " allocations):\n";
  for (const auto& [allocation, p] : dist.support()) {
    out << "  " << pad(p.to_string(), 6) << " " << allocation.to_string(dist.agents()) << "\n";
  }
  out << "assignment matrix (agents x items):\n" << render_matrix(marginals(dist).p);
  return out.str();
}

std::string render_verdict(const AxiomVerdict& verdict, std::size_t agents) {
  std::ostringstream out;
  out << verdict.property << ": " << (verdict.holds ? "holds" : "violated");
  if (!verdict.holds) out << " (margin " << verdict.margin << ")";
  out << "\n";
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    if (w.agents) {
      out << "  agent " << w.agents->first + 1 << " envies agent " << w.agents->second + 1
          << "\n";
    }
    if (w.allocation) out << "  allocation " << w.allocation->to_string(agents) << "\n";
    if (w.dominator) out << "  dominated by " << w.dominator->to_string(agents) << "\n";
    if (w.point) out << "  dominating utilities (" << join(*w.point) << ")\n";
    for (const auto& [allocation, weight] : w.mixture) {
      out << "    " << pad(weight.to_string(), 6) << " " << allocation.to_string(agents) << "\n";
    }
  }
  return out.str();
}

std::string render_deviation(const Deviation& d) {
  std::ostringstream out;
  out << "agent " << d.agent + 1;
  if (d.item) out << " on item o" << *d.item + 1;
  out << " reports (" << join(d.bids) << ")\n";
  out << "  utilities:\n" << render_matrix(d.instance.utilities());
  out << "  expected utility " << d.sincere << " -> " << d.deviant << " (gain " << d.gain()
      << ")\n";
  return out.str();
}

std::string render_table(const TableReport& report) {
  std::ostringstream out;
  out << "suites:";
  for (const auto& [block, size] : report.suite_sizes) {
    out << " " << block_name(block) << "=" << size;
  }
  out << "\n";
  out << "legend: + holds, x violated, * prior work, ! mismatch, ? inconclusive\n\n";
  out << pad("block", 10) << pad("mechanism", 15);
  for (Axiom a : all_axioms()) out << pad(axiom_name(a), 6);
  out << "\n";
  std::string row_key;
  for (std::size_t k = 0; k < report.cells.size(); ++k) {
    const CellResult& cell = report.cells[k];
    std::string key = block_name(cell.expected.block) + "/" + cell.expected.mechanism;
    if (key != row_key) {
      if (!row_key.empty()) out << "\n";
      out << pad(block_name(cell.expected.block), 10) << pad(cell.expected.mechanism, 15);
      row_key = key;
    }
    std::string mark = cell.expected.holds ? "+" : "x";
    if (cell.expected.prior_work) mark += "*";
    if (cell.inconclusive()) {
      mark += "?";
    } else if (!cell.matches()) {
      mark += "!";
    }
    out << pad(mark, 6);
  }
  out << "\n\nwitnesses:\n";
  for (const auto& cell : report.cells) {
    if (!cell.check.witness) continue;
    out << "  " << pad(block_name(cell.expected.block) + " " + cell.expected.mechanism + " " +
                           axiom_name(cell.expected.axiom),
                       32)
        << cell.check.witness->label << "\n";
  }
  for (const auto& eq : report.equivalences) {
    out << "\nidentical: " << eq.mechanism << " ex post equivalent to " << eq.reference << ": "
        << (eq.observed ? "yes" : "no") << " over " << eq.instances << " instances";
    if (eq.counterexample) out << " (differs on " << *eq.counterexample << ")";
  }
  out << "\n\nmismatches " << report.mismatches() << ", inconclusive " << report.inconclusive()
      << "\n";
  return out.str();
}

std::string render_theorems(const TheoremReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS " : "FAIL ") << pad(r.id, 14) << r.claim << " [" << r.cases
        << " cases";
    if (r.skipped) out << ", " << r.skipped << " skipped";
    out << "]\n";
    for (const auto& f : r.findings) out << "       " << f << "\n";
    if (!r.passed) out << "       failure: " << r.failure << "\n";
  }
  return out.str();
}

}  // namespace fairdiv
