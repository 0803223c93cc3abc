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

// JSON and text rendering of results. Numbers are exact "p/q" strings,
// agents and items are 1-based, and object keys keep insertion order so
// equal inputs give byte-identical JSON. docs/report-schema.md describes the
// JSON layout.

#ifndef FAIRDIV_REPORT_HPP_
#define FAIRDIV_REPORT_HPP_

#include <string>

#include "json.hpp"

#include "fairdiv/axioms.hpp"
#include "fairdiv/strategic.hpp"
#include "fairdiv/table.hpp"
#include "fairdiv/theorems.hpp"

namespace fairdiv {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

Json to_json(const Rational& value);
Json to_json(const Matrix& matrix);
Json to_json(const Allocation& allocation, std::size_t agents);
Json to_json(const AllocationDistribution& dist);
Json to_json(const AxiomVerdict& verdict, std::size_t agents);
Json to_json(const Deviation& deviation);
Json to_json(const ProbeFailure& failure);
Json to_json(const Classification& classification);
Json to_json(const SuiteCheck& check);
// Wall times are left out unless asked for, so reruns compare equal.
Json to_json(const TableReport& report, bool with_timing = false);
Json to_json(const TheoremReport& report, bool with_timing = false);

// Top-level document: {"schema": 1, "command": ..., <body fields>}.
Json envelope(const std::string& command, const Json& body);

std::string render_matrix(const Matrix& matrix);
std::string render_distribution(const AllocationDistribution& dist);
std::string render_verdict(const AxiomVerdict& verdict, std::size_t agents);
std::string render_deviation(const Deviation& deviation);
std::string render_table(const TableReport& report);
std::string render_theorems(const TheoremReport& report);

}  // namespace fairdiv

#endif  // FAIRDIV_REPORT_HPP_
