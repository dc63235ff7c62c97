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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "matchcover/multigraph.hpp"

namespace matchcover {

enum class PropertySuite { Bounds, Uniqueness, Merging, Structure };

std::optional<PropertySuite> parse_suite(std::string_view name);
const char* to_string(PropertySuite suite);

struct PropertyResult {
  /// False when the graph is outside the suite's scope (not matching covered).
  bool applicable = true;
  bool passed = true;
  /// First violation, or a short summary.
  std::string detail;
};

/// ε ≤ 1 + c4 (bipartite), ε ≤ 2b + c4 and, without even 2-cuts, ε ≤ 2b.
PropertyResult check_bounds(const MultiGraph& g);
/// Five cut-choice strategies give the same multiset of leaf forms.
PropertyResult check_uniqueness(const MultiGraph& g, std::uint64_t seed = 0);
/// Across every nontrivial tight cut: dependence inside a contraction is
/// dependence in g; the cross-cut dependence and class-merging
/// characterisations agree with g's own dependence relation; a class that
/// avoids the cut and enters a brace contraction does so in one edge of a
/// 4-cycle.
PropertyResult check_merging(const MultiGraph& g);
/// Maximal barriers, removable classes of size at most two, brick classes
/// with their bipartite witness, 3-connectivity of bricks and braces,
/// bipartite ⇔ b = 0, and even 2-cuts ⇔ a 4-cycle leaf carrying one.
PropertyResult check_structure(const MultiGraph& g);

PropertyResult run_suite(PropertySuite suite, const MultiGraph& g, std::uint64_t seed = 0);

}  // namespace matchcover
