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
#include <span>
#include <utility>
#include <vector>

#include "matchcover/multigraph.hpp"

namespace matchcover {

/// odd(G - B) = |B|.
bool is_barrier(const MultiGraph& g, std::span<const VertexId> b);

/// Kotzig's partition of a matching covered graph into maximal barriers.
struct CanonicalPartition {
  /// Ordered by lowest vertex.
  std::vector<VertexSet> parts;

  bool all_singletons() const;
  /// The part containing v.
  const VertexSet& part_of(VertexId v) const;
};

/// Classes of u ≡ v ⇔ (u = v or G - u - v has no perfect matching). Every
/// class is re-checked to be a barrier. Throws DomainError when g is not
/// matching covered.
CanonicalPartition canonical_partition(const MultiGraph& g);

/// G - u - v matchable for every pair of distinct vertices.
bool is_bicritical(const MultiGraph& g);

/// Every {e, f} of nonadjacent edges whose deletion leaves exactly two
/// components, both of even order, with e and f joining them. The cut's
/// shore is the component holding the lower vertex; order follows (e, f).
std::vector<Cut> even_2cuts(const MultiGraph& g);

/// Vertex pairs whose deletion disconnects the graph, ascending.
std::vector<std::pair<VertexId, VertexId>> two_vertex_cuts(const MultiGraph& g);

/// κ(G) by unit-capacity max-flow on the split network. 0 when
/// disconnected; |V| - 1 when every pair is adjacent (so κ(K2) = 1).
std::size_t vertex_connectivity(const MultiGraph& g);

/// Maximum number of internally disjoint s-t paths for nonadjacent s, t.
std::size_t local_vertex_connectivity(const MultiGraph& g, VertexId s, VertexId t);

}  // namespace matchcover
