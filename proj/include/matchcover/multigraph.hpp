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
#include <utility>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace matchcover {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t raw(VertexId v) noexcept { return static_cast<std::uint32_t>(v); }
constexpr std::uint32_t raw(EdgeId e) noexcept { return static_cast<std::uint32_t>(e); }

/// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<VertexId>;
/// Sorted, duplicate-free edge ids.
using EdgeSet = std::vector<EdgeId>;

VertexSet normalized(VertexSet s);
EdgeSet normalized(EdgeSet s);

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool touches(VertexId x) const noexcept { return x == u || x == v; }
};

struct Labels {
  std::map<VertexId, std::string> vertex;
  std::map<EdgeId, std::string> edge;
};

/// Finite loopless multigraph with stable vertex and edge identifiers.
///
/// Values are immutable once built; every derived graph (deletion,
/// contraction, splicing) is a new value that keeps the ids of whatever
/// survives. Fresh ids are allocated above the largest id ever seen along
/// the derivation chain, so a deleted id is never handed out again.
/// Iteration is always in increasing id order.
class MultiGraph {
 public:
  /// Dense-index view of one incidence: the neighbour's vertex index and the
  /// edge's index into edges().
  struct Incidence {
    std::uint32_t neighbor;
    std::uint32_t edge;
  };

  MultiGraph() = default;

  /// Throws DomainError on duplicate ids, unknown endpoints or loops.
  MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges, Labels labels = {});

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  EdgeSet edge_ids() const;
  VertexSet vertex_set() const { return vertices_; }

  bool has_vertex(VertexId v) const noexcept;
  bool has_edge(EdgeId e) const noexcept;

  std::optional<std::size_t> find_vertex(VertexId v) const noexcept;
  std::optional<std::size_t> find_edge(EdgeId e) const noexcept;
  /// Throw DomainError for ids not in the graph.
  std::size_t vertex_index(VertexId v) const;
  std::size_t edge_index(EdgeId e) const;
  const Edge& edge(EdgeId e) const { return edges_[edge_index(e)]; }

  std::span<const Incidence> incidence(std::size_t vertex_index) const noexcept {
    return incidence_[vertex_index];
  }
  std::size_t degree(VertexId v) const { return incidence_[vertex_index(v)].size(); }
  /// The star ∂(v), ascending.
  EdgeSet incident_edges(VertexId v) const;
  VertexSet neighbors(VertexId v) const;

  bool is_simple() const;

  VertexId next_vertex_id() const noexcept { return next_vertex_; }
  EdgeId next_edge_id() const noexcept { return next_edge_; }

  const Labels& labels() const noexcept { return labels_; }
  const std::string* edge_label(EdgeId e) const;
  const std::string* vertex_label(VertexId v) const;
  /// Edge carrying the given label, if any.
  std::optional<EdgeId> labelled_edge(std::string_view label) const;
  MultiGraph with_labels(Labels labels) const;

  MultiGraph without_edges(std::span<const EdgeId> removed) const;
  /// Deletes the vertices together with their incident edges.
  MultiGraph without_vertices(std::span<const VertexId> removed) const;
  MultiGraph induced(std::span<const VertexId> kept) const;

  /// Raises the fresh-id floor; used when a graph must not reuse ids of a
  /// related graph.
  MultiGraph with_id_floor(VertexId vertex_floor, EdgeId edge_floor) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  void build_incidence();

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
  Labels labels_;
  VertexId next_vertex_{0};
  EdgeId next_edge_{0};
};

/// Incremental construction with sequential ids.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  /// Starts numbering at the given ids.
  GraphBuilder(VertexId first_vertex, EdgeId first_edge)
      : next_vertex_(raw(first_vertex)), next_edge_(raw(first_edge)) {}

  VertexId add_vertex(std::string label = {});
  std::vector<VertexId> add_vertices(std::size_t count);
  EdgeId add_edge(VertexId u, VertexId v, std::string label = {});
  bool adjacent(VertexId u, VertexId v) const;

  MultiGraph build() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  Labels labels_;
  std::uint32_t next_vertex_ = 0;
  std::uint32_t next_edge_ = 0;
};

/// A cut ∂(X), represented by its shore X.
class Cut {
 public:
  /// Throws DomainError unless the shore is a nonempty proper subset of V(g).
  static Cut of(const MultiGraph& g, VertexSet shore);

  const VertexSet& shore() const noexcept { return shore_; }
  VertexSet complement(const MultiGraph& g) const;
  /// The same cut seen from the other shore.
  Cut flipped(const MultiGraph& g) const;
  EdgeSet edges(const MultiGraph& g) const;

  bool is_trivial() const noexcept { return shore_.size() == 1 || order_ - shore_.size() == 1; }
  bool is_odd() const noexcept { return shore_.size() % 2 == 1; }
  std::size_t graph_order() const noexcept { return order_; }

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  Cut(VertexSet shore, std::size_t order) : shore_(std::move(shore)), order_(order) {}

  VertexSet shore_;
  std::size_t order_ = 0;
};

/// ∂(X): edges with exactly one end in the shore.
EdgeSet boundary(const MultiGraph& g, std::span<const VertexId> shore);
VertexSet complement(const MultiGraph& g, std::span<const VertexId> shore);

struct Contraction {
  MultiGraph graph;
  /// Fresh vertex standing for the shrunk shore.
  VertexId vertex;
  /// The shore that was shrunk.
  VertexSet shore;
};

/// G/X: shrinks the shore to a fresh vertex, keeps every edge of ∂(X) under
/// its own id and drops the edges inside X.
Contraction contract(const MultiGraph& g, std::span<const VertexId> shore);

/// The two C-contractions: first shrinks the complement (keeps the shore's
/// side), second shrinks the shore.
std::pair<Contraction, Contraction> cut_contractions(const MultiGraph& g, const Cut& c);

/// One edge per adjacent pair, keeping the lowest id.
MultiGraph underlying_simple(const MultiGraph& g);

struct Bipartition {
  VertexSet a;
  VertexSet b;
};

/// Two-colouring, with the lowest vertex of every component in `a`.
std::optional<Bipartition> is_bipartite(const MultiGraph& g);
/// Vertex sets of the connected components, ordered by their lowest vertex.
std::vector<VertexSet> components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);
/// odd(G - S).
std::size_t odd_components_count(const MultiGraph& g, std::span<const VertexId> removed);

bool contains(std::span<const VertexId> set, VertexId v);
bool contains(std::span<const EdgeId> set, EdgeId e);

}  // namespace matchcover
