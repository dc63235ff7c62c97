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
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "matchcover/canonical.hpp"
#include "matchcover/dependence.hpp"
#include "matchcover/matching.hpp"
#include "matchcover/multigraph.hpp"

namespace matchcover {

/// Largest order for which cuts are searched by exhaustive shore scans.
inline constexpr std::size_t kExhaustiveCutLimit = 24;

/// |M ∩ C| = 1 for every perfect matching M. Even cuts are never tight.
/// Decided without enumeration: an odd cut fails iff two disjoint cut edges
/// extend to a perfect matching (which then meets C at least three times).
bool is_tight_cut(const MultiGraph& g, const Cut& c);
bool is_tight_cut(const PmOracle& oracle, const Cut& c);

/// Both C-contractions are matching covered.
bool is_separating_cut(const MultiGraph& g, const Cut& c);
/// Independent route: every edge lies in a perfect matching meeting C once.
bool separating_by_edge_criterion(const MultiGraph& g, const Cut& c);

/// Nontrivial cuts ∂(V(K)) for each maximal barrier B with |B| >= 2 and
/// each component K of G - B.
std::vector<Cut> barrier_cuts(const MultiGraph& g);

struct CutSearchOptions {
  std::size_t exhaustive_limit = kExhaustiveCutLimit;
};

/// Barrier cuts, then 2-separation cuts, then (bipartite) Hall-deficient
/// shores, then an exhaustive scan; every answer is verified tight. Returns
/// none only when the exhaustive scan ran and found nothing; throws
/// CapabilityError when it would be needed beyond the size limit.
std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g, const CutSearchOptions& options = {});

/// Every nontrivial tight cut, each named by the shore avoiding the lowest
/// vertex, ordered by shore size then lexicographically.
std::vector<Cut> all_nontrivial_tight_cuts(const MultiGraph& g, std::size_t limit = kExhaustiveCutLimit,
                                           Execution exec = Execution::Parallel);
/// Every nontrivial separating cut (same naming and order).
std::vector<Cut> all_nontrivial_separating_cuts(const MultiGraph& g, std::size_t limit = kExhaustiveCutLimit);
std::optional<Cut> find_nontrivial_separating_cut(const MultiGraph& g, std::size_t limit = kExhaustiveCutLimit);

enum class Classification { Brick, Brace, Neither };
const char* to_string(Classification c);

/// Brick / brace by the absence of nontrivial tight cuts, cross-checked
/// against the polynomial characterisations (3-connected + bicritical for
/// bricks, the four-vertex deletion test for braces). Throws DomainError if
/// g is not matching covered.
Classification classify(const MultiGraph& g, const CutSearchOptions& options = {});
/// Nonbipartite, 3-connected and bicritical.
bool is_brick_fast(const MultiGraph& g);
/// Bipartite and G - a1 - a2 - b1 - b2 matchable for all distinct a's, b's.
bool is_brace_fast(const MultiGraph& g);
/// A brick free of nontrivial separating cuts (exhaustive scan).
bool is_solid_brick(const MultiGraph& g, std::size_t limit = kExhaustiveCutLimit);

/// Picks a nontrivial cut of the graph or reports none.
using CutChooser = std::function<std::optional<Cut>(const MultiGraph&)>;

CutChooser default_chooser(CutSearchOptions options = {});
enum class ScanOrder { First, Last, Random };
/// Chooses from all_nontrivial_tight_cuts. Random picks are seeded by
/// `seed` and the graph itself, so they do not depend on visiting order.
CutChooser exhaustive_chooser(ScanOrder order, std::uint64_t seed = 0, std::size_t limit = kExhaustiveCutLimit);

enum class LeafKind { Brick, Brace };
const char* to_string(LeafKind k);

struct DecompositionLeaf {
  MultiGraph graph;
  LeafKind kind;
  CanonicalForm form;
  std::size_t node;
};

struct DecompositionNode {
  MultiGraph graph;
  /// -1 for the root.
  int parent = -1;
  /// Shore of the cut this node was split along; none for leaves.
  std::optional<Cut> cut;
  /// Children: first keeps the shore side, second keeps the complement.
  int first = -1;
  int second = -1;
  /// Index into leaves, -1 for internal nodes.
  int leaf = -1;
};

enum class CutKind { Tight, Separating };

struct DecompositionResult {
  CutKind kind = CutKind::Tight;
  std::vector<DecompositionLeaf> leaves;
  std::vector<DecompositionNode> nodes;
  /// Nonbipartite leaves.
  std::size_t b = 0;
  /// Brace leaves whose underlying simple graph is the 4-cycle.
  std::size_t c4 = 0;

  /// Canonical forms of the leaves, sorted (the multiset).
  std::vector<CanonicalForm> leaf_forms() const;
};

/// True when the underlying simple graph is C4.
bool is_c4_up_to_multiplicity(const MultiGraph& g);

DecompositionResult tight_cut_decomposition(const MultiGraph& g, const CutChooser& chooser = default_chooser(),
                                            Execution exec = Execution::Serial);
/// Splits on nontrivial separating cuts until every leaf is a brace or a
/// solid brick. The result depends on the cuts met; it is not an invariant.
DecompositionResult separating_cut_decomposition(const MultiGraph& g, std::size_t limit = kExhaustiveCutLimit);

struct BoundsReport {
  std::size_t epsilon = 0;
  std::size_t b = 0;
  std::size_t c4 = 0;
  bool bipartite = false;
  bool even_two_cut_free = false;
  /// ε ≤ 1 + c4 (bipartite graphs only).
  std::optional<bool> bipartite_bound_holds;
  std::optional<bool> bipartite_bound_tight;
  /// ε ≤ 2b + c4 (nonbipartite graphs only).
  std::optional<bool> nonbipartite_bound_holds;
  std::optional<bool> nonbipartite_bound_tight;
  /// ε ≤ 2b (nonbipartite and free of even 2-cuts only).
  std::optional<bool> even_free_bound_holds;

  bool all_hold() const;
};

BoundsReport verify_bounds(const MultiGraph& g);

}  // namespace matchcover
