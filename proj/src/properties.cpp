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

#include "matchcover/properties.hpp"

#include <algorithm>
#include <string>

#include "matchcover/cuts.hpp"
#include "matchcover/dependence.hpp"
#include "matchcover/kernels.hpp"
#include "matchcover/matching.hpp"
#include "matchcover/splicing.hpp"
#include "matchcover/structure.hpp"

namespace matchcover {

namespace {

PropertyResult not_applicable() { return {false, true, "not matching covered"}; }

PropertyResult fail(std::string detail) { return {true, false, std::move(detail)}; }

std::string edge_name(EdgeId e) { return "e" + std::to_string(raw(e)); }

std::string shore_name(const Cut& c) {
  std::string out = "{";
  for (VertexId v : c.shore()) out += (out.size() > 1 ? "," : "") + std::to_string(raw(v));
  return out + "}";
}

struct Dependence {
  const MultiGraph* g;
  DependenceMatrix m;

  explicit Dependence(const MultiGraph& graph) : g(&graph), m(dependence_matrix_parallel(graph)) {}
  bool operator()(EdgeId e, EdgeId f) const { return m.at(g->edge_index(e), g->edge_index(f)); }
};

EdgeSet support(const MultiGraph& side, const EdgeSet& cut, EdgeId f) {
  const PmOracle oracle(side);
  EdgeSet out;
  for (EdgeId e : cut) {
    const EdgeId forced[] = {f, e};
    if (oracle.extends(forced)) out.push_back(e);
  }
  return out;
}

EdgeSet inner_edges(const MultiGraph& side, const EdgeSet& cut) {
  EdgeSet out;
  for (const Edge& e : side.edges()) {
    if (!contains(cut, e.id)) out.push_back(e.id);
  }
  return out;
}

bool is_even_two_cut_pair(const MultiGraph& g, EdgeId e, EdgeId f) {
  const EdgeId pair[] = {e, f};
  const auto comps = components(g.without_edges(pair));
  if (comps.size() != 2 || comps[0].size() % 2 != 0 || comps[1].size() % 2 != 0) return false;
  for (EdgeId x : pair) {
    const Edge& edge = g.edge(x);
    if (contains(comps[0], edge.u) == contains(comps[0], edge.v)) return false;
  }
  return true;
}

std::optional<std::string> merging_at(const MultiGraph& g, const Cut& c, const Dependence& dg,
                                      const EquivalencePartition& pg) {
  const auto both = cut_contractions(g, c);
  const MultiGraph& h1 = both.first.graph;
  const MultiGraph& h2 = both.second.graph;
  const EdgeSet cut = c.edges(g);
  const Dependence d1(h1);
  const Dependence d2(h2);
  const std::string where = " at cut " + shore_name(c);

  for (const auto* side : {&d1, &d2}) {
    for (const Edge& e : side->g->edges()) {
      for (const Edge& f : side->g->edges()) {
        if (dg(e.id, f.id) != (*side)(e.id, f.id)) {
          return "dependence " + edge_name(e.id) + " -> " + edge_name(f.id) + " differs in a contraction" + where;
        }
      }
    }
  }

  const EdgeSet inner1 = inner_edges(h1, cut);
  const EdgeSet inner2 = inner_edges(h2, cut);
  std::vector<EdgeSet> supp1;
  std::vector<EdgeSet> supp2;
  for (EdgeId f : inner1) supp1.push_back(support(h1, cut, f));
  for (EdgeId f : inner2) supp2.push_back(support(h2, cut, f));
  for (std::size_t i = 0; i < inner1.size(); ++i) {
    const EdgeId f1 = inner1[i];
    for (std::size_t k = 0; k < inner2.size(); ++k) {
      const EdgeId f2 = inner2[k];
      const bool forward = std::all_of(supp1[i].begin(), supp1[i].end(), [&](EdgeId e) { return d2(e, f2); });
      const bool backward = std::all_of(supp2[k].begin(), supp2[k].end(), [&](EdgeId e) { return d1(e, f1); });
      if (dg(f1, f2) != forward || dg(f2, f1) != backward) {
        return "cross-cut dependence of " + edge_name(f1) + ", " + edge_name(f2) + " mispredicted" + where;
      }
      const bool mutual = supp1[i] == supp2[k] && forward && backward;
      if (mutual != (dg(f1, f2) && dg(f2, f1))) {
        return "mutual dependence of " + edge_name(f1) + ", " + edge_name(f2) + " mispredicted" + where;
      }
    }
  }

  const EquivalencePartition p1 = equivalence_partition(h1);
  const EquivalencePartition p2 = equivalence_partition(h2);
  auto avoids = [&](const EdgeSet& cls) {
    return std::none_of(cls.begin(), cls.end(), [&](EdgeId e) { return contains(cut, e); });
  };
  for (const EdgeSet& c1 : p1.classes()) {
    if (!avoids(c1)) continue;
    for (const EdgeSet& c2 : p2.classes()) {
      if (!avoids(c2)) continue;
      EdgeSet merged = c1;
      merged.insert(merged.end(), c2.begin(), c2.end());
      if (check_merge(g, c, c1, c2) != pg.is_class(normalized(std::move(merged)))) {
        return "class merge of " + edge_name(c1.front()) + ", " + edge_name(c2.front()) + " mispredicted" + where;
      }
    }
  }

  for (const MultiGraph* h : {&h1, &h2}) {
    if (!is_brace_fast(*h)) continue;
    const EdgeSet& own = h == &h1 ? inner1 : inner2;
    const EdgeSet& other = h == &h1 ? inner2 : inner1;
    for (const EdgeSet& cls : pg.classes()) {
      if (!avoids(cls)) continue;
      const auto here = std::count_if(cls.begin(), cls.end(), [&](EdgeId e) { return contains(own, e); });
      const bool there = std::any_of(cls.begin(), cls.end(), [&](EdgeId e) { return contains(other, e); });
      if (here > 0 && there && (here != 1 || !is_c4_up_to_multiplicity(*h))) {
        return "class " + edge_name(cls.front()) + " enters a brace contraction that is not a 4-cycle" + where;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> brick_class_witness(const MultiGraph& g, const EdgeSet& cls) {
  if (cls.size() > 2) return "brick class of size " + std::to_string(cls.size());
  if (cls.size() < 2) return std::nullopt;
  const MultiGraph rest = g.without_edges(cls);
  const auto parts = is_bipartite(rest);
  if (!parts || !is_connected(rest) || !is_matchable(rest)) {
    return "doubleton " + edge_name(cls[0]) + " has no bipartite complement";
  }
  const Edge& e = g.edge(cls[0]);
  const Edge& f = g.edge(cls[1]);
  const bool e_in_a = contains(parts->a, e.u);
  const bool f_in_a = contains(parts->a, f.u);
  if (contains(parts->a, e.v) != e_in_a || contains(parts->a, f.v) != f_in_a || e_in_a == f_in_a) {
    return "doubleton " + edge_name(cls[0]) + " ends do not split across the colour classes";
  }
  return std::nullopt;
}

}  // namespace

std::optional<PropertySuite> parse_suite(std::string_view name) {
  if (name == "bounds") return PropertySuite::Bounds;
  if (name == "uniqueness") return PropertySuite::Uniqueness;
  if (name == "merging") return PropertySuite::Merging;
  if (name == "structure") return PropertySuite::Structure;
  return std::nullopt;
}

const char* to_string(PropertySuite suite) {
  switch (suite) {
    case PropertySuite::Bounds:
      return "bounds";
    case PropertySuite::Uniqueness:
      return "uniqueness";
    case PropertySuite::Merging:
      return "merging";
    case PropertySuite::Structure:
      return "structure";
  }
  return "";
}

PropertyResult check_bounds(const MultiGraph& g) {
  if (!is_matching_covered(g)) return not_applicable();
  const BoundsReport r = verify_bounds(g);
  std::string summary = "epsilon=" + std::to_string(r.epsilon) + " b=" + std::to_string(r.b) +
                        " c4=" + std::to_string(r.c4);
  return {true, r.all_hold(), std::move(summary)};
}

PropertyResult check_uniqueness(const MultiGraph& g, std::uint64_t seed) {
  if (!is_matching_covered(g)) return not_applicable();
  const std::vector<std::pair<std::string, CutChooser>> strategies = {
      {"default", default_chooser()},
      {"first", exhaustive_chooser(ScanOrder::First)},
      {"last", exhaustive_chooser(ScanOrder::Last)},
      {"random", exhaustive_chooser(ScanOrder::Random, seed)},
      {"random+1", exhaustive_chooser(ScanOrder::Random, seed + 1)},
  };
  const auto reference = tight_cut_decomposition(g, strategies[0].second).leaf_forms();
  for (std::size_t k = 1; k < strategies.size(); ++k) {
    if (tight_cut_decomposition(g, strategies[k].second).leaf_forms() != reference) {
      return fail("strategy '" + strategies[k].first + "' yields different leaves");
    }
  }
  if (tight_cut_decomposition(g, strategies[0].second, Execution::Parallel).leaf_forms() != reference) {
    return fail("parallel decomposition yields different leaves");
  }
  return {true, true, std::to_string(reference.size()) + " leaves"};
}

PropertyResult check_merging(const MultiGraph& g) {
  if (!is_matching_covered(g)) return not_applicable();
  const auto cuts = all_nontrivial_tight_cuts(g);
  const Dependence dg(g);
  const EquivalencePartition pg = equivalence_partition(g);
  for (const Cut& c : cuts) {
    if (auto problem = merging_at(g, c, dg, pg)) return fail(*problem);
  }
  return {true, true, std::to_string(cuts.size()) + " tight cuts"};
}

PropertyResult check_structure(const MultiGraph& g) {
  if (!is_matching_covered(g)) return not_applicable();
  const std::size_t n = g.num_vertices();

  for (const VertexSet& part : canonical_partition(g).parts) {
    if (!is_barrier(g, part)) return fail("canonical part is not a barrier");
    for (VertexId v : g.vertices()) {
      if (contains(part, v)) continue;
      VertexSet bigger = part;
      bigger.push_back(v);
      if (is_barrier(g, normalized(std::move(bigger)))) return fail("canonical part is not a maximal barrier");
    }
  }

  for (const EdgeSet& cls : removable_classes(g)) {
    if (cls.size() > 2) return fail("removable class of size " + std::to_string(cls.size()));
    if (!is_matching_covered(g.without_edges(cls))) return fail("removable class leaves a graph not matching covered");
  }

  const Classification kind = classify(g);
  if (kind == Classification::Brick) {
    const EquivalencePartition partition = equivalence_partition(g);
    for (const EdgeSet& cls : partition.classes()) {
      if (auto problem = brick_class_witness(g, cls)) return fail(*problem);
    }
  }
  if (kind != Classification::Neither && n >= 6 && vertex_connectivity(g) < 3) {
    return fail("brick or brace of order >= 6 is not 3-connected");
  }

  const DecompositionResult d = tight_cut_decomposition(g);
  if (is_bipartite(g).has_value() != (d.b == 0)) return fail("bipartiteness and b = 0 disagree");

  if (n >= 4) {
    const auto cuts = even_2cuts(g);
    for (const Cut& c : cuts) {
      const EdgeSet pair = c.edges(g);
      const Edge& e = g.edge(pair[0]);
      const VertexId v = contains(c.shore(), e.u) ? e.u : e.v;
      const VertexId w = e.other(v);
      VertexSet x_rest;
      for (VertexId y : c.shore()) {
        if (y != v) x_rest.push_back(y);
      }
      VertexSet y_rest;
      for (VertexId y : c.complement(g)) {
        if (y != w) y_rest.push_back(y);
      }
      if (!is_tight_cut(g, Cut::of(g, x_rest)) || !is_tight_cut(g, Cut::of(g, y_rest))) {
        return fail("even 2-cut does not split off tight cuts");
      }
      const MultiGraph j = contract(contract(g, x_rest).graph, y_rest).graph;
      if (!is_c4_up_to_multiplicity(j) || !is_even_two_cut_pair(j, pair[0], pair[1])) {
        return fail("even 2-cut does not leave a 4-cycle carrying it");
      }
    }
    for (const DecompositionLeaf& leaf : d.leaves) {
      if (leaf.kind != LeafKind::Brace || !is_c4_up_to_multiplicity(leaf.graph)) continue;
      for (const Cut& lc : even_2cuts(leaf.graph)) {
        const EdgeSet pair = lc.edges(leaf.graph);
        if (!is_even_two_cut_pair(g, pair[0], pair[1])) return fail("4-cycle leaf carries an even 2-cut g lacks");
      }
    }
  }
  return {true, true, to_string(kind)};
}

PropertyResult run_suite(PropertySuite suite, const MultiGraph& g, std::uint64_t seed) {
  switch (suite) {
    case PropertySuite::Bounds:
      return check_bounds(g);
    case PropertySuite::Uniqueness:
      return check_uniqueness(g, seed);
    case PropertySuite::Merging:
      return check_merging(g);
    case PropertySuite::Structure:
      return check_structure(g);
  }
  return not_applicable();
}

}  // namespace matchcover
