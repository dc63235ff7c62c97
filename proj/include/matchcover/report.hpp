/*
 * Copyright (C) 2026 The matchcover Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"
#include "matchcover/generators.hpp"
#include "matchcover/matching.hpp"
#include "matchcover/multigraph.hpp"

namespace matchcover {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

struct AnalysisOptions {
  bool decompose = false;
  bool oracle_check = false;
  std::size_t budget = kDefaultEnumerationBudget;
};

/// FNV-1a of the graph's text form, as 16 hex digits.
std::string fingerprint(const MultiGraph& g);

/// The analysis report. Vertex and edge numbers are the 1-based numbers of
/// the text format; arrays are sorted. Graphs that are not matching covered
/// get the flags and a witness only.
Json analysis_report(const MultiGraph& g, const AnalysisOptions& options = {});

/// Enumeration cross-check of matchability, admissibility and the classes.
/// Throws CapabilityError past the budget.
Json oracle_check(const MultiGraph& g, std::size_t budget);

/// File names are G0.g, J1.g, G1.g, ...; edge sets use the numbering of the
/// graph they are listed under.
Json trace_report(const ConstructionTrace& t, const TraceReport* verification);

/// key: value lines for terminals.
std::string render_text(const Json& report);

}  // namespace matchcover
