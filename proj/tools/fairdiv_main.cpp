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

// fairdiv: run online fair-division mechanisms and audit their properties.
//
// Exit codes: 0 success (or every expected verdict reproduced), 1 a property
// failed or a verdict disagreed, 2 inconclusive (work bound hit, witness not
// found), 3 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fairdiv/report.hpp"

namespace {

using namespace fairdiv;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::uint64_t max_nodes = WorkBound{}.max_nodes;
  std::size_t max_agents = 4;
  std::size_t max_items = 6;
  std::string grid_extra;
  std::string sigma;
  std::size_t trials = 200;

  bool json() const { return format == "json"; }

  WorkBound bound() const {
    WorkBound b;
    b.max_nodes = max_nodes;
    return b;
  }

  std::vector<Rational> extra() const {
    std::vector<Rational> out;
    std::string token;
    std::istringstream in(grid_extra);
    while (std::getline(in, token, ',')) {
      if (!token.empty()) out.push_back(Rational::parse(token));
    }
    return out;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// An instance file starts with an "n m" header; anything else is a manifest.
bool looks_like_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string a, b, c;
    tokens >> a >> b;
    bool numeric = !a.empty() && !b.empty() &&
                   a.find_first_not_of("0123456789") == std::string::npos &&
                   b.find_first_not_of("0123456789") == std::string::npos;
    return numeric && !(tokens >> c);
  }
  return false;
}

// exampleN, a built-in suite name, an instance file or a manifest file.
Suite load_target(const std::string& target, const Globals& g) {
  Suite suite;
  if (target.rfind("example", 0) == 0 && target.size() > 7 &&
      target.find_first_not_of("0123456789", 7) == std::string::npos) {
    suite.push_back({target, worked_example(std::stoi(target.substr(7))).instance});
  } else {
    bool builtin = false;
    for (const auto& name : builtin_suite_names()) builtin = builtin || name == target;
    if (builtin) {
      suite = parse_manifest(builtin_manifest(target, g.trials), g.bound());
    } else {
      std::string text = read_file(target);
      if (looks_like_instance(text)) {
        suite.push_back({target, parse_instance(text)});
      } else {
        suite = parse_manifest(text, g.bound());
      }
    }
  }
  for (const auto& entry : suite) {
    if (entry.instance.agents() > g.max_agents || entry.instance.items() > g.max_items) {
      throw WorkBoundExceeded(entry.label + " has " + std::to_string(entry.instance.agents()) +
                              " agents and " + std::to_string(entry.instance.items()) +
                              " items; limits are --max-agents " +
                              std::to_string(g.max_agents) + " --max-items " +
                              std::to_string(g.max_items));
    }
  }
  return suite;
}

// Built-in names plus the two hand-built example mechanisms.
Mechanism load_mechanism(const std::string& name, const Globals& g) {
  if (name == "example2" || name == "example4") {
    return worked_example(name == "example2" ? 2 : 4).mechanism->mechanism();
  }
  std::optional<PriorityOrder> sigma;
  if (!g.sigma.empty()) {
    if (name != "osd") throw UsageError("--sigma only applies to osd");
    sigma = PriorityOrder::parse(g.sigma);
  }
  return mechanism_by_name(name, sigma);
}

void print(const Globals& g, const std::string& command, const Json& body,
           const std::string& text) {
  if (g.json()) {
    std::cout << envelope(command, body).dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_run(const Globals& g, const std::string& mechanism, const std::string& target,
            const std::string& bids_file) {
  Mechanism mech = load_mechanism(mechanism, g);
  Suite suite = load_target(target, g);
  if (suite.size() != 1) throw UsageError("run takes a single instance");
  const Instance& instance = suite.front().instance;
  BidProfile bids = bids_file.empty() ? BidProfile::sincere(instance)
                                      : parse_bids(read_file(bids_file));
  if (bids.agents() != instance.agents() || bids.items() != instance.items()) {
    throw UsageError("bids and instance have different shapes");
  }
  AllocationDistribution dist = mech(bids, g.bound());
  Json body = {{"mechanism", mech.name()},
               {"target", suite.front().label},
               {"instance", to_json(instance.utilities())}};
  if (!bids_file.empty()) body["bids"] = to_json(bids.values());
  body["distribution"] = to_json(dist);
  body["expected_utilities"] = to_json(expected_utilities(marginals(dist), instance.utilities()).ubar);
  std::string text = mech.name() + " on " + suite.front().label + "\n" + render_distribution(dist) +
                     "expected utility matrix (agent i for bundle k):\n" +
                     render_matrix(expected_utilities(marginals(dist), instance.utilities()).ubar);
  print(g, "run", body, text);
  return kExitOk;
}

int observation_exit(Observation observed) {
  switch (observed) {
    case Observation::kHolds: return kExitOk;
    case Observation::kViolated: return kExitFailed;
    case Observation::kInconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_check(const Globals& g, const std::string& axiom_text, const std::string& mechanism,
              const std::string& target) {
  Axiom axiom = parse_axiom(axiom_text);
  Mechanism mech = load_mechanism(mechanism, g);
  Suite suite = load_target(target, g);
  CheckOptions options;
  options.bound = g.bound();
  options.grid_extra = g.extra();
  options.probes = axiom == Axiom::kSP || axiom == Axiom::kOSP;
  SuiteCheck check = check_suite(mech, axiom, suite, options);
  Json body = {{"axiom", axiom_name(axiom)},
               {"mechanism", mech.name()},
               {"target", target},
               {"suite_size", suite.size()},
               {"result", to_json(check)}};
  std::ostringstream text;
  text << axiom_name(axiom) << " for " << mech.name() << " on " << target << ": "
       << observation_name(check.observed) << " (" << check.instances << " checked";
  if (check.skipped) text << ", " << check.skipped << " skipped";
  text << ")\n";
  if (check.witness) {
    const Evidence& e = *check.witness;
    text << "witness " << e.label << ":\n" << render_matrix(e.instance.utilities());
    if (e.verdict) text << render_verdict(*e.verdict, e.instance.agents());
    if (e.deviation) text << render_deviation(*e.deviation);
  }
  if (!check.note.empty()) text << "note: " << check.note << "\n";
  print(g, "check", body, text.str());
  return observation_exit(check.observed);
}

int cmd_falsify(const Globals& g, const std::string& kind, const std::string& mechanism,
                const std::string& target) {
  if (kind != "sp" && kind != "osp") throw UsageError("falsify takes sp or osp");
  Mechanism mech = load_mechanism(mechanism, g);
  Suite suite = load_target(target, g);
  std::optional<Deviation> deviation;
  std::string label;
  std::size_t searched = 0;
  std::size_t skipped = 0;
  for (const auto& entry : suite) {
    try {
      BidGrid grid = BidGrid::build(entry.instance, g.extra());
      deviation = kind == "sp" ? sp_falsify(mech, entry.instance, grid, g.bound())
                               : osp_falsify(mech, entry.instance, grid, g.bound());
      ++searched;
    } catch (const WorkBoundExceeded&) {
      ++skipped;
      continue;
    }
    if (deviation) {
      label = entry.label;
      break;
    }
  }
  Json body = {{"kind", kind},
               {"mechanism", mech.name()},
               {"target", target},
               {"searched", searched},
               {"skipped", skipped},
               {"deviation", deviation ? to_json(*deviation) : Json(nullptr)}};
  if (deviation) body["label"] = label;
  std::ostringstream text;
  if (deviation) {
    text << kind << " deviation for " << mech.name() << " on " << label << ":\n"
         << render_deviation(*deviation);
  } else {
    text << "none in grid (" << searched << " instances searched";
    if (skipped) text << ", " << skipped << " skipped";
    text << ")\n";
  }
  print(g, "falsify", body, text.str());
  if (deviation) return kExitFailed;
  return searched == 0 ? kExitInconclusive : kExitOk;
}

int cmd_table(const Globals& g, const std::string& manifest, bool timing) {
  TableOptions options;
  options.bound = g.bound();
  options.grid_extra = g.extra();
  if (manifest.empty()) {
    for (Block b : all_blocks()) options.suites[b] = block_suite(b, g.trials, g.bound());
  } else {
    options.suites = parse_table_manifest(read_file(manifest), g.bound());
  }
  TableReport report = run_table(options);
  print(g, "table", to_json(report, timing), render_table(report));
  return report.exit_code();
}

int cmd_theorems(const Globals& g, std::size_t exhaustive_items, bool timing) {
  TheoremOptions options;
  options.bound = g.bound();
  options.grid_extra = g.extra();
  options.suite_count = g.trials;
  options.exhaustive_items = exhaustive_items;
  TheoremReport report = run_theorems(options);
  print(g, "theorems", to_json(report, timing), render_theorems(report));
  return report.exit_code();
}

int cmd_gen(const Globals& g, const std::string& domain, std::size_t agents, std::size_t items,
            std::uint64_t seed, std::int64_t value_bound, std::int64_t denominator) {
  DomainSpec spec;
  spec.domain = parse_domain(domain);
  spec.agents = agents;
  spec.items = items;
  spec.seed = seed;
  spec.value_bound = value_bound;
  spec.denominator = denominator;
  Instance instance = generate(spec);
  Json body = {{"domain", domain_name(spec.domain)},
               {"seed", seed},
               {"instance", to_json(instance.utilities())}};
  print(g, "gen", body, serialize_instance(instance));
  return kExitOk;
}

int cmd_examples(const Globals& g, int only) {
  Json examples = Json::array();
  std::ostringstream text;
  for (int id = 1; id <= 4; ++id) {
    if (only != 0 && id != only) continue;
    WorkedExample example = worked_example(id);
    BidProfile bids = BidProfile::sincere(example.instance);
    Json entry = {{"id", id}, {"instance", to_json(example.instance.utilities())}};
    text << "example" << id << "\n" << render_matrix(example.instance.utilities());
    Json dists = Json::object();
    std::vector<Mechanism> mechanisms = builtin_mechanisms();
    if (example.mechanism) mechanisms.push_back(example.mechanism->mechanism());
    for (const auto& mech : mechanisms) {
      AllocationDistribution dist = mech(bids, g.bound());
      dists[mech.name()] = to_json(dist);
      text << mech.name() << ":\n";
      for (const auto& [allocation, p] : dist.support()) {
        text << "  " << p << "  " << allocation.to_string(dist.agents()) << "\n";
      }
    }
    entry["distributions"] = std::move(dists);
    examples.push_back(std::move(entry));
    text << "\n";
  }
  print(g, "examples", {{"examples", std::move(examples)}}, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online fair division: mechanisms, axiom checks and reference verdicts"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-nodes", g.max_nodes, "Work bound on enumeration nodes")
      ->envname("FAIRDIV_MAX_NODES")
      ->capture_default_str();
  app.add_option("--max-agents", g.max_agents, "Largest accepted agent count")
      ->capture_default_str();
  app.add_option("--max-items", g.max_items, "Largest accepted item count")
      ->capture_default_str();
  app.add_option("--grid-extra", g.grid_extra, "Extra bid values, comma separated (e.g. 1/3,5)");
  app.add_option("--sigma", g.sigma, "Priority order for osd, e.g. 2,1,3");
  app.add_option("--trials", g.trials, "Random instances per built-in suite")
      ->capture_default_str();

  std::string mechanism, target, bids_file, axiom, kind, manifest, domain;
  auto* run = app.add_subcommand("run", "Print a mechanism's allocation distribution");
  run->add_option("mechanism", mechanism)->required();
  run->add_option("target", target, "exampleN or instance file")->required();
  run->add_option("--bids", bids_file, "Bid matrix file (default: sincere)");

  auto* check = app.add_subcommand("check", "Check one axiom on an instance or suite");
  check->add_option("axiom", axiom, "sp, osp, efa, sefa, efp, sefp, befp, pea, pep")
      ->required();
  check->add_option("mechanism", mechanism)->required();
  check->add_option("target", target, "exampleN, suite name, instance or manifest file")
      ->required();

  auto* falsify = app.add_subcommand("falsify", "Search the bid grid for a profitable misreport");
  falsify->add_option("kind", kind, "sp or osp")->required();
  falsify->add_option("mechanism", mechanism)->required();
  falsify->add_option("target", target)->required();

  bool timing = false;
  auto* table = app.add_subcommand("table", "Reproduce the reference verdict table");
  table->add_option("--suite", manifest, "Sectioned manifest ([general], [identical], [binary])");
  table->add_flag("--timing", timing, "Include wall times in JSON");

  std::size_t exhaustive_items = 3;
  auto* theorems = app.add_subcommand("theorems", "Run the scripted characterization checks");
  theorems->add_option("--exhaustive-items", exhaustive_items,
                       "Largest item count in exhaustive suites")
      ->capture_default_str();
  theorems->add_flag("--timing", timing, "Include wall times in JSON");

  std::size_t agents = 2, items = 3;
  std::uint64_t seed = 0;
  std::int64_t value_bound = 3, denominator = 6;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("domain", domain,
                  "general, nonzero, binary, identical-cardinal, identical-ordinal, borda, "
                  "lexicographic")
      ->required();
  gen->add_option("--agents", agents)->capture_default_str();
  gen->add_option("--items", items)->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--value-bound", value_bound)->capture_default_str();
  gen->add_option("--denominator", denominator)->capture_default_str();

  int example_id = 0;
  auto* examples = app.add_subcommand("examples", "Dump the worked examples");
  examples->add_option("id", example_id, "1-4 (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(g, mechanism, target, bids_file);
    if (*check) return cmd_check(g, axiom, mechanism, target);
    if (*falsify) return cmd_falsify(g, kind, mechanism, target);
    if (*table) return cmd_table(g, manifest, timing);
    if (*theorems) return cmd_theorems(g, exhaustive_items, timing);
    if (*gen) return cmd_gen(g, domain, agents, items, seed, value_bound, denominator);
    if (*examples) return cmd_examples(g, example_id);
  } catch (const WorkBoundExceeded& e) {
    std::cerr << "fairdiv: work bound: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const UsageError& e) {
    std::cerr << "fairdiv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "fairdiv: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
