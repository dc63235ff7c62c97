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

#include "matchcover/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "matchcover/error.hpp"

namespace matchcover {

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

EdgeSet normalized(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(std::span<const VertexId> set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

bool contains(std::span<const EdgeId> set, EdgeId e) {
  return std::binary_search(set.begin(), set.end(), e);
}

MultiGraph::MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges, Labels labels)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), labels_(std::move(labels)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw DomainError("duplicate vertex id");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id) {
      throw DomainError("duplicate edge id " + std::to_string(raw(e.id)));
    }
    if (e.u == e.v) {
      throw DomainError("loop at edge " + std::to_string(raw(e.id)));
    }
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw DomainError("edge " + std::to_string(raw(e.id)) + " has an unknown endpoint");
    }
  }
  if (!vertices_.empty()) next_vertex_ = VertexId{raw(vertices_.back()) + 1};
  if (!edges_.empty()) next_edge_ = EdgeId{raw(edges_.back().id) + 1};
  std::erase_if(labels_.vertex, [this](const auto& kv) { return !has_vertex(kv.first); });
  std::erase_if(labels_.edge, [this](const auto& kv) { return !has_edge(kv.first); });
  build_incidence();
}

void MultiGraph::build_incidence() {
  incidence_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto iu = static_cast<std::uint32_t>(*find_vertex(edges_[i].u));
    const auto iv = static_cast<std::uint32_t>(*find_vertex(edges_[i].v));
    incidence_[iu].push_back({iv, static_cast<std::uint32_t>(i)});
    incidence_[iv].push_back({iu, static_cast<std::uint32_t>(i)});
  }
}

EdgeSet MultiGraph::edge_ids() const {
  EdgeSet out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.id);
  return out;
}

std::optional<std::size_t> MultiGraph::find_vertex(VertexId v) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> MultiGraph::find_edge(EdgeId e) const noexcept {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  if (it == edges_.end() || it->id != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool MultiGraph::has_vertex(VertexId v) const noexcept { return find_vertex(v).has_value(); }
bool MultiGraph::has_edge(EdgeId e) const noexcept { return find_edge(e).has_value(); }

std::size_t MultiGraph::vertex_index(VertexId v) const {
  if (auto i = find_vertex(v)) return *i;
  throw DomainError("unknown vertex " + std::to_string(raw(v)));
}

std::size_t MultiGraph::edge_index(EdgeId e) const {
  if (auto i = find_edge(e)) return *i;
  throw DomainError("unknown edge " + std::to_string(raw(e)));
}

EdgeSet MultiGraph::incident_edges(VertexId v) const {
  EdgeSet out;
  for (const Incidence& inc : incidence_[vertex_index(v)]) out.push_back(edges_[inc.edge].id);
  return normalized(std::move(out));
}

VertexSet MultiGraph::neighbors(VertexId v) const {
  VertexSet out;
  for (const Incidence& inc : incidence_[vertex_index(v)]) out.push_back(vertices_[inc.neighbor]);
  return normalized(std::move(out));
}

bool MultiGraph::is_simple() const {
  for (const auto& inc : incidence_) {
    std::vector<std::uint32_t> nb;
    nb.reserve(inc.size());
    for (const Incidence& i : inc) nb.push_back(i.neighbor);
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
  }
  return true;
}

const std::string* MultiGraph::edge_label(EdgeId e) const {
  auto it = labels_.edge.find(e);
  return it == labels_.edge.end() ? nullptr : &it->second;
}

const std::string* MultiGraph::vertex_label(VertexId v) const {
  auto it = labels_.vertex.find(v);
  return it == labels_.vertex.end() ? nullptr : &it->second;
}

std::optional<EdgeId> MultiGraph::labelled_edge(std::string_view label) const {
  for (const auto& [id, name] : labels_.edge) {
    if (name == label) return id;
  }
  return std::nullopt;
}

MultiGraph MultiGraph::with_labels(Labels labels) const {
  MultiGraph out = *this;
  out.labels_ = std::move(labels);
  std::erase_if(out.labels_.vertex, [&](const auto& kv) { return !has_vertex(kv.first); });
  std::erase_if(out.labels_.edge, [&](const auto& kv) { return !has_edge(kv.first); });
  return out;
}

MultiGraph MultiGraph::with_id_floor(VertexId vertex_floor, EdgeId edge_floor) const {
  MultiGraph out = *this;
  out.next_vertex_ = std::max(out.next_vertex_, vertex_floor);
  out.next_edge_ = std::max(out.next_edge_, edge_floor);
  return out;
}

MultiGraph MultiGraph::without_edges(std::span<const EdgeId> removed) const {
  const EdgeSet gone = normalized(EdgeSet(removed.begin(), removed.end()));
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (!contains(gone, e.id)) kept.push_back(e);
  }
  MultiGraph out(vertices_, std::move(kept), labels_);
  return out.with_id_floor(next_vertex_, next_edge_);
}

MultiGraph MultiGraph::without_vertices(std::span<const VertexId> removed) const {
  const VertexSet gone = normalized(VertexSet(removed.begin(), removed.end()));
  std::vector<VertexId> kept;
  for (VertexId v : vertices_) {
    if (!contains(gone, v)) kept.push_back(v);
  }
  return induced(kept);
}

MultiGraph MultiGraph::induced(std::span<const VertexId> kept_span) const {
  const VertexSet kept = normalized(VertexSet(kept_span.begin(), kept_span.end()));
  std::vector<VertexId> vs;
  for (VertexId v : kept) {
    if (has_vertex(v)) vs.push_back(v);
  }
  std::vector<Edge> es;
  for (const Edge& e : edges_) {
    if (contains(kept, e.u) && contains(kept, e.v)) es.push_back(e);
  }
  MultiGraph out(std::move(vs), std::move(es), labels_);
  return out.with_id_floor(next_vertex_, next_edge_);
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id) return false;
    const bool same = (x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u);
    if (!same) return false;
  }
  return true;
}

VertexId GraphBuilder::add_vertex(std::string label) {
  const VertexId v{next_vertex_++};
  vertices_.push_back(v);
  if (!label.empty()) labels_.vertex.emplace(v, std::move(label));
  return v;
}

std::vector<VertexId> GraphBuilder::add_vertices(std::size_t count) {
  std::vector<VertexId> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(add_vertex());
  return out;
}

EdgeId GraphBuilder::add_edge(VertexId u, VertexId v, std::string label) {
  const EdgeId e{next_edge_++};
  edges_.push_back({e, u, v});
  if (!label.empty()) labels_.edge.emplace(e, std::move(label));
  return e;
}

bool GraphBuilder::adjacent(VertexId u, VertexId v) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  });
}

MultiGraph GraphBuilder::build() const {
  MultiGraph g(vertices_, edges_, labels_);
  return g.with_id_floor(VertexId{next_vertex_}, EdgeId{next_edge_});
}

Cut Cut::of(const MultiGraph& g, VertexSet shore) {
  shore = normalized(std::move(shore));
  for (VertexId v : shore) {
    if (!g.has_vertex(v)) throw DomainError("shore vertex " + std::to_string(raw(v)) + " not in graph");
  }
  if (shore.empty() || shore.size() >= g.num_vertices()) {
    throw DomainError("cut shore must be a nonempty proper vertex subset");
  }
  return Cut(std::move(shore), g.num_vertices());
}

VertexSet Cut::complement(const MultiGraph& g) const { return matchcover::complement(g, shore_); }

Cut Cut::flipped(const MultiGraph& g) const { return Cut(complement(g), order_); }

EdgeSet Cut::edges(const MultiGraph& g) const { return boundary(g, shore_); }

EdgeSet boundary(const MultiGraph& g, std::span<const VertexId> shore) {
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if (contains(shore, e.u) != contains(shore, e.v)) out.push_back(e.id);
  }
  return out;
}

VertexSet complement(const MultiGraph& g, std::span<const VertexId> shore) {
  VertexSet out;
  for (VertexId v : g.vertices()) {
    if (!contains(shore, v)) out.push_back(v);
  }
  return out;
}

Contraction contract(const MultiGraph& g, std::span<const VertexId> shore_span) {
  VertexSet shore = normalized(VertexSet(shore_span.begin(), shore_span.end()));
  for (VertexId v : shore) g.vertex_index(v);
  if (shore.empty() || shore.size() >= g.num_vertices()) {
    throw DomainError("contraction shore must be a nonempty proper vertex subset");
  }
  const VertexId x = g.next_vertex_id();
  std::vector<VertexId> vs;
  for (VertexId v : g.vertices()) {
    if (!contains(shore, v)) vs.push_back(v);
  }
  vs.push_back(x);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    const bool iu = contains(shore, e.u);
    const bool iv = contains(shore, e.v);
    if (iu && iv) continue;
    es.push_back({e.id, iu ? x : e.u, iv ? x : e.v});
  }
  MultiGraph out(std::move(vs), std::move(es), g.labels());
  out = out.with_id_floor(VertexId{raw(x) + 1}, g.next_edge_id());
  return {std::move(out), x, std::move(shore)};
}

std::pair<Contraction, Contraction> cut_contractions(const MultiGraph& g, const Cut& c) {
  Contraction keep_shore = contract(g, c.complement(g));
  // Both contraction vertices must be fresh with respect to each other too.
  const MultiGraph floor = g.with_id_floor(keep_shore.graph.next_vertex_id(), g.next_edge_id());
  Contraction keep_other = contract(floor, c.shore());
  return {std::move(keep_shore), std::move(keep_other)};
}

MultiGraph underlying_simple(const MultiGraph& g) {
  std::vector<Edge> kept;
  std::vector<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    std::pair<VertexId, VertexId> k{key.first, key.second};
    if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
    seen.push_back(k);
    kept.push_back(e);
  }
  MultiGraph out(g.vertex_set(), std::move(kept), g.labels());
  return out.with_id_floor(g.next_vertex_id(), g.next_edge_id());
}

namespace {

// Component index per vertex index, -1 for removed vertices.
std::vector<int> label_components(const MultiGraph& g, const std::vector<char>& removed, int& count) {
  const std::size_t n = g.num_vertices();
  std::vector<int> comp(n, -1);
  count = 0;
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    comp[s] = count;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incidence(x)) {
        if (removed[inc.neighbor] || comp[inc.neighbor] >= 0) continue;
        comp[inc.neighbor] = count;
        queue.push_back(inc.neighbor);
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace

std::optional<Bipartition> is_bipartite(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> colour(n, -1);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incidence(x)) {
        if (colour[inc.neighbor] < 0) {
          colour[inc.neighbor] = 1 - colour[x];
          queue.push_back(inc.neighbor);
        } else if (colour[inc.neighbor] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (std::size_t i = 0; i < n; ++i) {
    (colour[i] == 0 ? out.a : out.b).push_back(g.vertices()[i]);
  }
  return out;
}

std::vector<VertexSet> components(const MultiGraph& g) {
  int count = 0;
  const auto comp = label_components(g, std::vector<char>(g.num_vertices(), 0), count);
  std::vector<VertexSet> out(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < comp.size(); ++i) out[static_cast<std::size_t>(comp[i])].push_back(g.vertices()[i]);
  return out;
}

bool is_connected(const MultiGraph& g) { return components(g).size() <= 1; }

std::size_t odd_components_count(const MultiGraph& g, std::span<const VertexId> removed) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (VertexId v : removed) {
    if (auto i = g.find_vertex(v)) gone[*i] = 1;
  }
  int count = 0;
  const auto comp = label_components(g, gone, count);
  std::vector<std::size_t> size(static_cast<std::size_t>(count), 0);
  for (int c : comp) {
    if (c >= 0) ++size[static_cast<std::size_t>(c)];
  }
  return static_cast<std::size_t>(std::count_if(size.begin(), size.end(), [](std::size_t s) { return s % 2 == 1; }));
}

}  // namespace matchcover
