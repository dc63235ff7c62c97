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
#include <optional>
#include <span>
#include <vector>

#include "matchcover/multigraph.hpp"

namespace matchcover {

inline constexpr std::size_t kDefaultEnumerationBudget = 100'000;

/// Pairwise vertex-disjoint edges, ascending ids.
struct Matching {
  EdgeSet edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool contains(EdgeId e) const { return matchcover::contains(edges, e); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// A matching that covers every vertex of its graph.
struct PerfectMatching : Matching {};

/// Perfect-matching queries against one fixed graph.
///
/// Holds a maximum matching of the graph; every query starts from it with
/// the query's forced endpoints and deleted edges knocked out, so a query
/// typically costs a couple of augmenting-path searches instead of a full
/// matching run. Queries are const and keep their scratch state local, so
/// one oracle may be shared between threads.
class PmOracle {
 public:
  explicit PmOracle(const MultiGraph& g);
  /// The oracle keeps a reference to the graph.
  explicit PmOracle(MultiGraph&&) = delete;

  const MultiGraph& graph() const noexcept { return *g_; }
  bool matchable() const noexcept { return matchable_; }
  const Matching& base_matching() const noexcept { return base_; }

  /// Is there a perfect matching of g - deleted that contains `forced`?
  /// False for unknown or overlapping forced edges.
  bool extends(std::span<const EdgeId> forced, std::span<const EdgeId> deleted = {}) const;
  std::optional<PerfectMatching> completion(std::span<const EdgeId> forced,
                                            std::span<const EdgeId> deleted = {}) const;
  /// Is g - removed (vertices) - deleted (edges) matchable?
  bool matchable_without(std::span<const VertexId> removed, std::span<const EdgeId> deleted = {}) const;

 private:
  std::optional<std::vector<int>> solve(std::span<const EdgeId> forced, std::span<const EdgeId> deleted,
                                        std::span<const VertexId> removed) const;

  const MultiGraph* g_;
  std::vector<int> base_mate_;
  Matching base_;
  bool matchable_ = false;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm); parallel
/// edges resolve to their lowest id.
Matching maximum_matching(const MultiGraph& g);

bool is_matchable(const MultiGraph& g);
/// Pairwise disjoint `forced` ⊆ E(g) extends to a perfect matching. Never
/// throws; bad forced sets answer false.
bool has_pm_containing(const MultiGraph& g, std::span<const EdgeId> forced);

/// Every perfect matching, by branching on the lowest uncovered vertex.
/// Throws CapabilityError once more than `budget` have been found.
std::vector<PerfectMatching> enumerate_pms(const MultiGraph& g, std::size_t budget = kDefaultEnumerationBudget);

/// Throws DomainError for an unknown edge.
bool is_admissible(const MultiGraph& g, EdgeId e);
EdgeSet inadmissible_edges(const MultiGraph& g);
/// Connected, even order >= 2, every edge admissible.
bool is_matching_covered(const MultiGraph& g);

/// For a matchable bipartite graph and an edge e: the smallest (then
/// lexicographically first) nonempty proper S ⊂ A with |N(S)| = |S|, one end
/// of e in N(S) and the other outside S; none if no such S exists.
/// `a` selects the colour class playing the role of A (default: the class of
/// the lowest vertex). Throws DomainError for non-bipartite input and
/// CapabilityError when |A| > 20.
std::optional<VertexSet> bip_inadmissibility_witness(const MultiGraph& h, EdgeId e,
                                                     std::optional<VertexSet> a = std::nullopt);

}  // namespace matchcover
