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
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "matchcover/multigraph.hpp"

namespace matchcover {

enum class NamedFamily { Complete, Cycle, CompleteBipartite, C6bar, Prism, Wheel, Petersen, Fig2b, Fig2c, Path };

/// Names: K<n>, C<2n>, K<m>,<n>, C6bar, prism<n>, W<n>, petersen,
/// fig2b, fig2c, P<n> (path on n vertices).
struct NamedGraphId {
  NamedFamily family = NamedFamily::Complete;
  std::size_t a = 0;
  std::size_t b = 0;

  /// Throws DomainError for unknown names or bad parameters.
  static NamedGraphId parse(std::string_view name);
  std::string to_string() const;
};

/// Vertex and edge ids are 0-based in construction order. C6bar, fig2b and
/// fig2c carry the vertex labels t0 tL tR b0 bL bR (plus x y, or P Q L M R)
/// and the edge labels e1 e2 f1 f2 g1 g2 where drawn.
MultiGraph named_graph(const NamedGraphId& id);
MultiGraph named_graph(std::string_view name);

/// The names used by the shipped corpus.
std::vector<std::string> corpus_names();

using Rng = std::mt19937_64;

struct RandomGraphOptions {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 12;
  /// Probability of each vertex pair being adjacent.
  double density = 0.4;
  /// Probability that an edge gets a parallel twin.
  double parallel = 0.1;
};

/// A random connected multigraph of even order.
MultiGraph random_graph(Rng& rng, const RandomGraphOptions& options = {});
/// Draws random graphs until one is matching covered.
MultiGraph random_matching_covered(Rng& rng, const RandomGraphOptions& options = {});
/// Adds a parallel copy of `count` random edges.
MultiGraph with_parallel_edges(const MultiGraph& g, Rng& rng, std::size_t count);
/// Relabels vertices and edges by random permutations of their ids.
MultiGraph shuffled(const MultiGraph& g, Rng& rng);

/// A splice of two random members of `pool` at random vertices of equal
/// degree with a random bijection, whose order stays within max_vertices.
/// None if no pair of vertices fits after a bounded number of draws.
std::optional<MultiGraph> random_splice(Rng& rng, std::span<const MultiGraph> pool, std::size_t max_vertices = 16);

/// A brace H with a marked vertex a in one colour class.
struct AnchoredBrace {
  MultiGraph graph;
  VertexId anchor{};
};

struct BuildOptions {
  /// Maps each C_i edge outside C'_i instead of into it; the result is
  /// still a tight splice but the designated edges no longer merge.
  bool scramble_pi = false;
};

/// Every graph and edge set of the construction of a matching covered graph
/// with connectivity at least p and a class of size at least q. Index i of
/// each per-stage vector belongs to stage i (1-based stages use slot i - 1
/// for j, u, c, c_prime, d, pi; g and f hold stage 0 at slot 0).
struct ConstructionTrace {
  std::size_t p = 0;
  std::size_t q = 0;
  AnchoredBrace h;
  bool scrambled = false;

  /// G_0 and its colour classes; A_i, B_i, a_i for copies 1..q at slot i - 1.
  MultiGraph g0;
  VertexSet a0;
  VertexSet b0;
  std::vector<VertexSet> a_parts;
  std::vector<VertexSet> b_parts;
  std::vector<VertexId> a;
  /// C_1..C_{q-1} and their union C*.
  std::vector<EdgeSet> c;
  EdgeSet c_star;

  /// J_i with L_i[U_i, V_i], u_i and C'_i, for i = 1..q-1.
  std::vector<MultiGraph> j;
  std::vector<VertexId> u;
  std::vector<VertexSet> u_parts;
  std::vector<VertexSet> v_parts;
  std::vector<EdgeSet> c_prime;

  /// f_0..f_{q-1}.
  std::vector<EdgeId> f;
  /// G_0..G_{q-1}.
  std::vector<MultiGraph> g;
  /// D_1..D_{q-1}, each named by the shore V(J_i) - u_i.
  std::vector<Cut> d;
  std::vector<std::map<EdgeId, EdgeId>> pi;

  const MultiGraph& final_graph() const { return g.back(); }
  /// |V(G_{q-1})| = (2q - 1)|V(H)| - 2(q - 1).
  std::size_t expected_order() const;
};

/// Default H is K_{p+1,p+1} anchored at its first vertex. Throws
/// DomainError for p or q below 2, or an H that is not a simple
/// (p+1)-connected brace.
ConstructionTrace build_high_kappa_epsilon(std::size_t p, std::size_t q,
                                           const std::optional<AnchoredBrace>& h = std::nullopt,
                                           BuildOptions options = {});

struct TraceCheck {
  /// Group of the claim: "base", "brick", "splice", "class", "final".
  std::string group;
  std::string claim;
  bool passed = false;
};

struct TraceReport {
  std::vector<TraceCheck> checks;
  std::size_t kappa = 0;
  std::size_t epsilon = 0;

  bool all_passed() const;
  /// Throws VerificationError naming the first failed claim.
  void require() const;
};

TraceReport verify_trace(const ConstructionTrace& t);

}  // namespace matchcover
