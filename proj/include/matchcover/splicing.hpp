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
#include <map>
#include <vector>

#include "matchcover/canonical.hpp"
#include "matchcover/multigraph.hpp"

namespace matchcover {

/// Splice g1 at v1 with g2 at v2 along pi: ∂(v1) → ∂(v2).
struct SpliceSpec {
  MultiGraph g1;
  VertexId v1{};
  MultiGraph g2;
  VertexId v2{};
  std::map<EdgeId, EdgeId> pi;
};

/// A cut edge of a splice and the two star edges it was made from.
struct CutEdgeOrigin {
  EdgeId edge;
  EdgeId from_g1;
  EdgeId from_g2;
};

struct SpliceResult {
  MultiGraph graph;
  /// ∂(V(g1) - v1).
  Cut cut;
  /// One entry per cut edge, ascending by edge. Cut edges keep their g1 id.
  std::vector<CutEdgeOrigin> origins;
  /// Where the surviving vertices and non-star edges of g2 ended up. g1's ids
  /// are kept unchanged; g2's are shifted past g1's only if they collide.
  std::map<VertexId, VertexId> g2_vertices;
  std::map<EdgeId, EdgeId> g2_edges;
};

/// Throws DomainError if the degrees differ or pi is not a bijection
/// between the stars.
SpliceResult splice(const SpliceSpec& spec);

/// Index-order bijection between the two stars.
std::map<EdgeId, EdgeId> ordered_bijection(const MultiGraph& g1, VertexId v1, const MultiGraph& g2, VertexId v2);

inline constexpr std::size_t kMaxVariantDegree = 8;

/// Canonical forms of the splices over every bijection, sorted and
/// deduplicated. CapabilityError above kMaxVariantDegree.
std::vector<CanonicalForm> splice_variants(const MultiGraph& g1, VertexId v1, const MultiGraph& g2, VertexId v2);

struct SpliceVariant {
  CanonicalForm form;
  /// Lexicographically first bijection giving this form.
  std::map<EdgeId, EdgeId> pi;
  MultiGraph graph;
};

/// One representative per canonical form, ordered by form.
std::vector<SpliceVariant> splice_variant_graphs(const MultiGraph& g1, VertexId v1, const MultiGraph& g2,
                                                 VertexId v2);

/// Side 1 is the contraction keeping the cut's shore, side 2 the one keeping
/// its complement (the order of cut_contractions).
enum class Side { First = 1, Second = 2 };

/// C_i = {e ∈ C : F ∪ {e} extends to a perfect matching of G_i}.
struct CrossSupport {
  Side side;
  EdgeSet support;
};

/// Throws DomainError if F meets the cut or has an edge outside G_side.
CrossSupport cross_support(const MultiGraph& g, const Cut& c, Side side, const EdgeSet& f);

/// Whether F1 ∪ F2 is a class of g, for classes F1 of G_1 and F2 of G_2
/// that avoid the tight cut c: C_1 = C_2 with at least two edges, and every
/// edge of C_i is inadmissible in G_i - F_i. Throws DomainError if c is not
/// tight or an F_i does not avoid c.
bool check_merge(const MultiGraph& g, const Cut& c, const EdgeSet& f1, const EdgeSet& f2);

/// Same question answered from the equivalence partition of g.
bool merges_directly(const MultiGraph& g, const EdgeSet& f1, const EdgeSet& f2);

struct ClassRestriction {
  /// F ∩ E(G_side).
  EdgeSet edges;
  /// |F ∩ C|, always 0 or 1.
  std::size_t cut_edges = 0;
  bool tight = false;
  /// Class of G_side containing the restriction; empty when the
  /// restriction is.
  EdgeSet containing_class;
  bool is_full_class = false;
};

/// Throws DomainError unless c is separating.
ClassRestriction restrict_class(const MultiGraph& g, const Cut& c, const EdgeSet& f, Side side);

}  // namespace matchcover
