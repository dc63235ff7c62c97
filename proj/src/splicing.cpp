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

#include "matchcover/splicing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matchcover/cuts.hpp"
#include "matchcover/dependence.hpp"
#include "matchcover/error.hpp"
#include "matchcover/matching.hpp"

namespace matchcover {

namespace {

EdgeSet star(const MultiGraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw DomainError("splice vertex " + std::to_string(raw(v)) + " is not in the graph");
  return g.incident_edges(v);
}

void check_bijection(const EdgeSet& s1, const EdgeSet& s2, const std::map<EdgeId, EdgeId>& pi) {
  if (s1.size() != s2.size()) {
    throw DomainError("cannot splice vertices of degree " + std::to_string(s1.size()) + " and " +
                      std::to_string(s2.size()));
  }
  if (pi.size() != s1.size()) throw DomainError("bijection does not cover the star of v1");
  EdgeSet image;
  for (const auto& [from, to] : pi) {
    if (!contains(s1, from)) throw DomainError("bijection maps an edge outside the star of v1");
    if (!contains(s2, to)) throw DomainError("bijection maps onto an edge outside the star of v2");
    image.push_back(to);
  }
  if (normalized(image).size() != s2.size()) throw DomainError("bijection is not injective");
}

const MultiGraph& side_graph(const std::pair<Contraction, Contraction>& both, Side side) {
  return side == Side::First ? both.first.graph : both.second.graph;
}

void require_inside(const MultiGraph& side, const EdgeSet& cut, const EdgeSet& f) {
  for (EdgeId e : f) {
    if (contains(cut, e)) throw DomainError("edge set meets the cut");
    if (!side.has_edge(e)) throw DomainError("edge " + std::to_string(raw(e)) + " is not in that contraction");
  }
}

EdgeSet support_in(const MultiGraph& side, const EdgeSet& cut, const EdgeSet& f) {
  const PmOracle oracle(side);
  EdgeSet out;
  EdgeSet forced = f;
  forced.push_back(EdgeId{});
  for (EdgeId e : cut) {
    forced.back() = e;
    if (oracle.extends(forced)) out.push_back(e);
  }
  return out;
}

}  // namespace

std::map<EdgeId, EdgeId> ordered_bijection(const MultiGraph& g1, VertexId v1, const MultiGraph& g2, VertexId v2) {
  const EdgeSet s1 = star(g1, v1);
  const EdgeSet s2 = star(g2, v2);
  if (s1.size() != s2.size()) {
    throw DomainError("cannot splice vertices of degree " + std::to_string(s1.size()) + " and " +
                      std::to_string(s2.size()));
  }
  std::map<EdgeId, EdgeId> pi;
  for (std::size_t i = 0; i < s1.size(); ++i) pi.emplace(s1[i], s2[i]);
  return pi;
}

SpliceResult splice(const SpliceSpec& spec) {
  const MultiGraph& g1 = spec.g1;
  const MultiGraph& g2 = spec.g2;
  const EdgeSet s1 = star(g1, spec.v1);
  const EdgeSet s2 = star(g2, spec.v2);
  check_bijection(s1, s2, spec.pi);

  bool collide = false;
  for (VertexId v : g2.vertices()) {
    if (v != spec.v2 && g1.has_vertex(v)) collide = true;
  }
  for (const Edge& e : g2.edges()) {
    if (!contains(s2, e.id) && g1.has_edge(e.id)) collide = true;
  }
  const std::uint32_t vshift = collide ? raw(g1.next_vertex_id()) : 0;
  const std::uint32_t eshift = collide ? raw(g1.next_edge_id()) : 0;

  SpliceResult out{.graph = {}, .cut = Cut::of(g1, VertexSet{spec.v1}), .origins = {}, .g2_vertices = {}, .g2_edges = {}};
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  Labels labels;
  for (VertexId v : g1.vertices()) {
    if (v == spec.v1) continue;
    vertices.push_back(v);
    if (const auto* l = g1.vertex_label(v)) labels.vertex[v] = *l;
  }
  for (VertexId v : g2.vertices()) {
    if (v == spec.v2) continue;
    const VertexId w{raw(v) + vshift};
    vertices.push_back(w);
    out.g2_vertices.emplace(v, w);
    if (const auto* l = g2.vertex_label(v)) labels.vertex[w] = *l;
  }
  const VertexSet shore = [&] {
    VertexSet s;
    for (VertexId v : g1.vertices()) {
      if (v != spec.v1) s.push_back(v);
    }
    return s;
  }();
  for (const Edge& e : g1.edges()) {
    if (const auto* l = g1.edge_label(e.id)) labels.edge[e.id] = *l;
    if (!contains(s1, e.id)) {
      edges.push_back(e);
      continue;
    }
    const EdgeId partner = spec.pi.at(e.id);
    const Edge& f = g2.edge(partner);
    edges.push_back({e.id, e.other(spec.v1), out.g2_vertices.at(f.other(spec.v2))});
    out.origins.push_back({e.id, e.id, partner});
  }
  for (const Edge& e : g2.edges()) {
    if (contains(s2, e.id)) continue;
    const EdgeId id{raw(e.id) + eshift};
    edges.push_back({id, out.g2_vertices.at(e.u), out.g2_vertices.at(e.v)});
    out.g2_edges.emplace(e.id, id);
    if (const auto* l = g2.edge_label(e.id); l && !labels.edge.contains(id)) labels.edge[id] = *l;
  }
  std::sort(vertices.begin(), vertices.end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  MultiGraph g(std::move(vertices), std::move(edges), std::move(labels));
  const VertexId vfloor{std::max(raw(g.next_vertex_id()), std::max(raw(g1.next_vertex_id()), raw(g2.next_vertex_id()) + vshift))};
  const EdgeId efloor{std::max(raw(g.next_edge_id()), std::max(raw(g1.next_edge_id()), raw(g2.next_edge_id()) + eshift))};
  out.graph = g.with_id_floor(vfloor, efloor);
  out.cut = Cut::of(out.graph, shore);
  return out;
}

std::vector<SpliceVariant> splice_variant_graphs(const MultiGraph& g1, VertexId v1, const MultiGraph& g2,
                                                 VertexId v2) {
  const EdgeSet s1 = star(g1, v1);
  EdgeSet s2 = star(g2, v2);
  if (s1.size() != s2.size()) {
    throw DomainError("cannot splice vertices of degree " + std::to_string(s1.size()) + " and " +
                      std::to_string(s2.size()));
  }
  if (s1.size() > kMaxVariantDegree) {
    throw CapabilityError("splice variants enumerate every bijection; degree " + std::to_string(s1.size()) +
                          " exceeds " + std::to_string(kMaxVariantDegree));
  }
  std::map<CanonicalForm, SpliceVariant> seen;
  SpliceSpec spec{g1, v1, g2, v2, {}};
  do {
    spec.pi.clear();
    for (std::size_t i = 0; i < s1.size(); ++i) spec.pi.emplace(s1[i], s2[i]);
    MultiGraph g = splice(spec).graph;
    CanonicalForm form = canonical_form(g, 64);
    if (!seen.contains(form)) seen.emplace(form, SpliceVariant{form, spec.pi, std::move(g)});
  } while (std::next_permutation(s2.begin(), s2.end()));
  std::vector<SpliceVariant> out;
  for (auto& [form, variant] : seen) out.push_back(std::move(variant));
  return out;
}

std::vector<CanonicalForm> splice_variants(const MultiGraph& g1, VertexId v1, const MultiGraph& g2, VertexId v2) {
  std::vector<CanonicalForm> out;
  for (const SpliceVariant& v : splice_variant_graphs(g1, v1, g2, v2)) out.push_back(v.form);
  return out;
}

CrossSupport cross_support(const MultiGraph& g, const Cut& c, Side side, const EdgeSet& f) {
  auto both = cut_contractions(g, c);
  const EdgeSet cut = c.edges(g);
  const MultiGraph& h = side_graph(both, side);
  require_inside(h, cut, f);
  return {side, support_in(h, cut, f)};
}

bool merges_directly(const MultiGraph& g, const EdgeSet& f1, const EdgeSet& f2) {
  EdgeSet merged = f1;
  merged.insert(merged.end(), f2.begin(), f2.end());
  return equivalence_partition(g).is_class(normalized(std::move(merged)));
}

bool check_merge(const MultiGraph& g, const Cut& c, const EdgeSet& f1, const EdgeSet& f2) {
  if (!is_tight_cut(g, c)) throw DomainError("class merging is only decided across tight cuts");
  auto both = cut_contractions(g, c);
  const EdgeSet cut = c.edges(g);
  const MultiGraph& h1 = both.first.graph;
  const MultiGraph& h2 = both.second.graph;
  require_inside(h1, cut, f1);
  require_inside(h2, cut, f2);

  const EdgeSet c1 = support_in(h1, cut, f1);
  const EdgeSet c2 = support_in(h2, cut, f2);
  auto starved = [](const MultiGraph& h, const EdgeSet& f, const EdgeSet& support) {
    const MultiGraph rest = h.without_edges(f);
    const PmOracle oracle(rest);
    return std::none_of(support.begin(), support.end(), [&](EdgeId e) {
      const EdgeId forced[] = {e};
      return oracle.extends(forced);
    });
  };
  const bool merged = c1 == c2 && c1.size() >= 2 && starved(h1, f1, c1) && starved(h2, f2, c2);
#ifdef MATCHCOVER_CROSS_CHECKS
  if (merged != merges_directly(g, f1, f2)) {
    throw InternalError("class merge predicate disagrees with the equivalence partition");
  }
#endif
  return merged;
}

ClassRestriction restrict_class(const MultiGraph& g, const Cut& c, const EdgeSet& f, Side side) {
  if (!is_separating_cut(g, c)) throw DomainError("class restriction needs a separating cut");
  auto both = cut_contractions(g, c);
  const MultiGraph& h = side_graph(both, side);
  const EdgeSet cut = c.edges(g);
  ClassRestriction out;
  for (EdgeId e : f) {
    if (h.has_edge(e)) out.edges.push_back(e);
    if (contains(cut, e)) ++out.cut_edges;
  }
  out.tight = is_tight_cut(g, c);
  if (!out.edges.empty()) {
    out.containing_class = equivalence_partition(h).class_of(out.edges.front());
    out.is_full_class = out.containing_class == out.edges;
  }
  return out;
}

}  // namespace matchcover
