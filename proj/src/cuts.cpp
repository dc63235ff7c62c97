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

#include "matchcover/cuts.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "blossom.hpp"
#include "matchcover/error.hpp"
#include "matchcover/kernels.hpp"
#include "matchcover/structure.hpp"

namespace matchcover {

namespace {

void require_cut_of(const MultiGraph& g, const Cut& c) {
  if (c.graph_order() != g.num_vertices()) throw DomainError("cut belongs to a graph of a different order");
  for (VertexId v : c.shore()) g.vertex_index(v);
}

bool shore_less(const Cut& a, const Cut& b) {
  if (a.shore().size() != b.shore().size()) return a.shore().size() < b.shore().size();
  return a.shore() < b.shore();
}

// The shore that avoids the lowest vertex names the cut.
Cut canonical_side(const MultiGraph& g, const Cut& c) {
  return contains(c.shore(), g.vertices().front()) ? c.flipped(g) : c;
}

bool nontrivial_odd(std::size_t shore, std::size_t n) { return shore % 2 == 1 && shore >= 3 && n - shore >= 3; }

// Bitmask helpers for graphs of at most 64 vertices.
struct MaskGraph {
  std::vector<std::uint64_t> adj;

  explicit MaskGraph(const MultiGraph& g) : adj(g.num_vertices(), 0) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      for (const auto& inc : g.incidence(v)) adj[v] |= std::uint64_t{1} << inc.neighbor;
    }
  }

  bool connected(std::uint64_t set) const {
    if (set == 0) return true;
    std::uint64_t seen = set & (~set + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  }
};

Cut cut_from_mask(const MultiGraph& g, std::uint64_t mask) {
  VertexSet shore;
  for (std::uint64_t m = mask; m; m &= m - 1) shore.push_back(g.vertices()[static_cast<std::size_t>(std::countr_zero(m))]);
  return Cut::of(g, std::move(shore));
}

std::optional<Cut> first_tight(const PmOracle& oracle, const std::vector<Cut>& candidates) {
  for (const Cut& c : candidates) {
    if (!c.is_trivial() && c.is_odd() && is_tight_cut(oracle, c)) return c;
  }
  return std::nullopt;
}

std::vector<Cut> two_separation_candidates(const MultiGraph& g) {
  std::vector<Cut> out;
  const std::size_t n = g.num_vertices();
  if (n < 6) return out;
  for (const auto& [u, v] : two_vertex_cuts(g)) {
    const VertexId pair[] = {u, v};
    const MultiGraph rest = g.without_vertices(pair);
    for (const VertexSet& k : components(rest)) {
      std::vector<VertexSet> shores;
      if (k.size() % 2 == 1) {
        shores.push_back(k);
      } else {
        VertexSet with_u = k;
        with_u.push_back(u);
        VertexSet with_v = k;
        with_v.push_back(v);
        shores.push_back(normalized(std::move(with_u)));
        shores.push_back(normalized(std::move(with_v)));
      }
      for (VertexSet& s : shores) {
        if (nontrivial_odd(s.size(), n)) out.push_back(Cut::of(g, std::move(s)));
      }
    }
  }
  return out;
}

// A failing four-vertex deletion in a bipartite matching covered graph
// exposes S ⊂ A with |N(S)| = |S| + 1; S ∪ N(S) is the shore of a tight cut.
std::optional<Cut> hall_tight_cut(const MultiGraph& g, const Bipartition& parts, const PmOracle& oracle) {
  const std::size_t n = g.num_vertices();
  if (n < 6) return std::nullopt;
  std::vector<char> in_a(n, 0);
  for (VertexId a : parts.a) in_a[g.vertex_index(a)] = 1;
  const std::vector<char> no_dead_e(g.num_edges(), 0);
  for (std::size_t i = 0; i < parts.a.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.a.size(); ++j) {
      for (std::size_t k = 0; k < parts.b.size(); ++k) {
        for (std::size_t l = k + 1; l < parts.b.size(); ++l) {
          const VertexId gone[] = {parts.a[i], parts.a[j], parts.b[k], parts.b[l]};
          if (oracle.matchable_without(gone)) continue;
          std::vector<char> dead(n, 0);
          for (VertexId v : gone) dead[g.vertex_index(v)] = 1;
          std::vector<int> mate(n, -1);
          detail::Blossom(g, dead, no_dead_e).maximize(mate);
          std::size_t root = n;
          for (std::size_t v = 0; v < n; ++v) {
            if (!dead[v] && in_a[v] && mate[v] == -1) {
              root = v;
              break;
            }
          }
          if (root == n) continue;
          std::vector<char> reached(n, 0);
          std::vector<std::size_t> stack{root};
          reached[root] = 1;
          while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incidence(x)) {
              const std::size_t y = inc.neighbor;
              if (dead[y] || reached[y]) continue;
              reached[y] = 1;
              if (mate[y] >= 0 && !reached[static_cast<std::size_t>(mate[y])]) {
                reached[static_cast<std::size_t>(mate[y])] = 1;
                stack.push_back(static_cast<std::size_t>(mate[y]));
              }
            }
          }
          VertexSet shore;
          for (std::size_t v = 0; v < n; ++v) {
            if (reached[v] && in_a[v]) {
              shore.push_back(g.vertices()[v]);
              for (VertexId w : g.neighbors(g.vertices()[v])) shore.push_back(w);
            }
          }
          shore = normalized(std::move(shore));
          if (!nontrivial_odd(shore.size(), n)) continue;
          Cut c = Cut::of(g, std::move(shore));
          if (is_tight_cut(oracle, c)) return c;
        }
      }
    }
  }
  return std::nullopt;
}

std::uint64_t graph_hash(const MultiGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  for (VertexId v : g.vertices()) mix(raw(v));
  for (const Edge& e : g.edges()) {
    mix(raw(e.id));
    mix(raw(e.u));
    mix(raw(e.v));
  }
  return h;
}

}  // namespace

bool is_tight_cut(const PmOracle& oracle, const Cut& c) {
  const MultiGraph& g = oracle.graph();
  require_cut_of(g, c);
  if (!c.is_odd()) return false;
  const EdgeSet cut = c.edges(g);
  if (oracle.matchable()) {
    const auto crossing = std::count_if(cut.begin(), cut.end(), [&](EdgeId e) { return oracle.base_matching().contains(e); });
    if (crossing != 1) return false;
  }
  for (std::size_t i = 0; i < cut.size(); ++i) {
    const Edge& e = g.edge(cut[i]);
    for (std::size_t j = i + 1; j < cut.size(); ++j) {
      const Edge& f = g.edge(cut[j]);
      if (e.touches(f.u) || e.touches(f.v)) continue;
      const EdgeId pair[] = {e.id, f.id};
      if (oracle.extends(pair)) return false;
    }
  }
  return true;
}

bool is_tight_cut(const MultiGraph& g, const Cut& c) { return is_tight_cut(PmOracle(g), c); }

bool is_separating_cut(const MultiGraph& g, const Cut& c) {
  require_cut_of(g, c);
  if (!c.is_odd()) return false;
  const auto [a, b] = cut_contractions(g, c);
  return is_matching_covered(a.graph) && is_matching_covered(b.graph);
}

bool separating_by_edge_criterion(const MultiGraph& g, const Cut& c) {
  require_cut_of(g, c);
  const PmOracle oracle(g);
  const EdgeSet cut = c.edges(g);
  auto others = [&](EdgeId keep) {
    EdgeSet rest;
    for (EdgeId x : cut) {
      if (x != keep) rest.push_back(x);
    }
    return rest;
  };
  for (const Edge& e : g.edges()) {
    bool found = false;
    if (contains(cut, e.id)) {
      const EdgeId forced[] = {e.id};
      found = oracle.extends(forced, others(e.id));
    } else {
      for (EdgeId c0 : cut) {
        const EdgeId forced[] = {e.id, c0};
        if (oracle.extends(forced, others(c0))) {
          found = true;
          break;
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Cut> barrier_cuts(const MultiGraph& g) {
  std::vector<Cut> out;
  const std::size_t n = g.num_vertices();
  for (const VertexSet& barrier : canonical_partition(g).parts) {
    if (barrier.size() < 2) continue;
    for (const VertexSet& k : components(g.without_vertices(barrier))) {
      if (k.size() > 1 && n - k.size() > 1) out.push_back(Cut::of(g, k));
    }
  }
  return out;
}

std::vector<Cut> all_nontrivial_tight_cuts(const MultiGraph& g, std::size_t limit, Execution exec) {
  const std::size_t n = g.num_vertices();
  if (n > std::min<std::size_t>(limit, 64)) {
    throw CapabilityError("tightness undecided: exhaustive tight-cut scan limited to " +
                          std::to_string(std::min<std::size_t>(limit, 64)) + " vertices, graph has " +
                          std::to_string(n));
  }
  if (!is_matching_covered(g)) throw DomainError("tight cuts are only defined here for matching covered graphs");
  if (n < 6) return {};
  const PmOracle oracle(g);
  const MaskGraph masks(g);

  // Every tight cut is crossed exactly once by the base perfect matching, so
  // its shore is a union of base pairs plus one end of one more pair.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (EdgeId e : oracle.base_matching().edges) {
    const Edge& edge = g.edge(e);
    pairs.emplace_back(g.vertex_index(edge.u), g.vertex_index(edge.v));
  }
  std::vector<std::vector<std::uint64_t>> filters;
  {
    std::vector<EdgeSet> seen;
    for (const Edge& e : g.edges()) {
      const EdgeId forced[] = {e.id};
      auto pm = oracle.completion(forced);
      if (!pm || std::find(seen.begin(), seen.end(), pm->edges) != seen.end()) continue;
      seen.push_back(pm->edges);
      std::vector<std::uint64_t> pm_masks;
      for (EdgeId x : pm->edges) {
        const Edge& xe = g.edge(x);
        pm_masks.push_back((std::uint64_t{1} << g.vertex_index(xe.u)) | (std::uint64_t{1} << g.vertex_index(xe.v)));
      }
      filters.push_back(std::move(pm_masks));
    }
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::size_t half = pairs.size();
  std::size_t low_pair = 0;
  for (std::size_t i = 0; i < half; ++i) {
    if (pairs[i].first == 0 || pairs[i].second == 0) low_pair = i;
  }

  std::vector<Cut> candidates;
  for (std::size_t k = 0; k < half; ++k) {
    for (int side = 0; side < 2; ++side) {
      const std::size_t loose = side == 0 ? pairs[k].first : pairs[k].second;
      if (loose == 0) continue;
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < half; ++i) {
        if (i != k && i != low_pair) free.push_back(i);
      }
      const std::uint64_t subsets = std::uint64_t{1} << free.size();
      for (std::uint64_t s = 0; s < subsets; ++s) {
        std::uint64_t shore = std::uint64_t{1} << loose;
        for (std::uint64_t b = s; b; b &= b - 1) {
          const auto& p = pairs[free[static_cast<std::size_t>(std::countr_zero(b))]];
          shore |= (std::uint64_t{1} << p.first) | (std::uint64_t{1} << p.second);
        }
        if (!nontrivial_odd(static_cast<std::size_t>(std::popcount(shore)), n)) continue;
        if (!masks.connected(shore) || !masks.connected(all & ~shore)) continue;
        const bool passes = std::all_of(filters.begin(), filters.end(), [&](const auto& pm) {
          int crossing = 0;
          for (std::uint64_t pm_pair : pm) crossing += std::popcount(shore & pm_pair) == 1 ? 1 : 0;
          return crossing == 1;
        });
        if (passes) candidates.push_back(cut_from_mask(g, shore));
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), shore_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return exec == Execution::Parallel ? tight_cut_filter_parallel(g, candidates)
                                     : tight_cut_filter_serial(g, candidates);
}

std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g, const CutSearchOptions& options) {
  if (!is_matching_covered(g)) throw DomainError("tight cut search needs a matching covered graph");
  const std::size_t n = g.num_vertices();
  if (n < 6) return std::nullopt;
  const PmOracle oracle(g);
  if (auto c = first_tight(oracle, barrier_cuts(g))) return c;
  if (auto c = first_tight(oracle, two_separation_candidates(g))) return c;
  if (auto parts = is_bipartite(g)) {
    if (auto c = hall_tight_cut(g, *parts, oracle)) return c;
  }
  const auto all = all_nontrivial_tight_cuts(g, options.exhaustive_limit);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<Cut> all_nontrivial_separating_cuts(const MultiGraph& g, std::size_t limit) {
  const std::size_t n = g.num_vertices();
  if (n > std::min<std::size_t>(limit, 63)) {
    throw CapabilityError("exhaustive separating-cut scan limited to " +
                          std::to_string(std::min<std::size_t>(limit, 63)) + " vertices, graph has " +
                          std::to_string(n));
  }
  if (!is_matching_covered(g)) throw DomainError("separating cuts are only defined here for matching covered graphs");
  std::vector<Cut> out;
  if (n < 6) return out;
  const MaskGraph masks(g);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  // Shores avoid vertex index 0.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t s = 1; s < count; ++s) {
    const std::uint64_t shore = s << 1;
    if (!nontrivial_odd(static_cast<std::size_t>(std::popcount(shore)), n)) continue;
    if (!masks.connected(shore) || !masks.connected(all & ~shore)) continue;
    Cut c = cut_from_mask(g, shore);
    if (is_separating_cut(g, c)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), shore_less);
  return out;
}

std::optional<Cut> find_nontrivial_separating_cut(const MultiGraph& g, std::size_t limit) {
  // Tight cuts are separating; the cheap tight search usually answers first.
  if (auto tight = find_nontrivial_tight_cut(g, CutSearchOptions{limit})) return canonical_side(g, *tight);
  auto all = all_nontrivial_separating_cuts(g, limit);
  if (all.empty()) return std::nullopt;
  return all.front();
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Brick:
      return "brick";
    case Classification::Brace:
      return "brace";
    case Classification::Neither:
      return "neither";
  }
  return "neither";
}

const char* to_string(LeafKind k) { return k == LeafKind::Brick ? "brick" : "brace"; }

bool is_brick_fast(const MultiGraph& g) {
  if (is_bipartite(g) || g.num_vertices() < 4) return false;
  return vertex_connectivity(g) >= 3 && is_bicritical(g);
}

bool is_brace_fast(const MultiGraph& g) {
  const auto parts = is_bipartite(g);
  if (!parts || parts->a.size() != parts->b.size()) return false;
  const PmOracle oracle(g);
  for (std::size_t i = 0; i < parts->a.size(); ++i) {
    for (std::size_t j = i + 1; j < parts->a.size(); ++j) {
      for (std::size_t k = 0; k < parts->b.size(); ++k) {
        for (std::size_t l = k + 1; l < parts->b.size(); ++l) {
          const VertexId gone[] = {parts->a[i], parts->a[j], parts->b[k], parts->b[l]};
          if (!oracle.matchable_without(gone)) return false;
        }
      }
    }
  }
  return true;
}

Classification classify(const MultiGraph& g, const CutSearchOptions& options) {
  if (!is_matching_covered(g)) throw DomainError("classification needs a matching covered graph");
  const bool bipartite = is_bipartite(g).has_value();
  const bool free_of_tight = !find_nontrivial_tight_cut(g, options).has_value();
  const bool fast = bipartite ? is_brace_fast(g) : is_brick_fast(g);
  if (fast != free_of_tight) {
    throw InternalError("polynomial brick/brace test disagrees with the tight-cut search");
  }
  if (!free_of_tight) return Classification::Neither;
  return bipartite ? Classification::Brace : Classification::Brick;
}

bool is_solid_brick(const MultiGraph& g, std::size_t limit) {
  if (classify(g, CutSearchOptions{limit}) != Classification::Brick) return false;
  return all_nontrivial_separating_cuts(g, limit).empty();
}

CutChooser default_chooser(CutSearchOptions options) {
  return [options](const MultiGraph& g) { return find_nontrivial_tight_cut(g, options); };
}

CutChooser exhaustive_chooser(ScanOrder order, std::uint64_t seed, std::size_t limit) {
  return [order, seed, limit](const MultiGraph& g) -> std::optional<Cut> {
    const auto all = all_nontrivial_tight_cuts(g, limit, Execution::Serial);
    if (all.empty()) return std::nullopt;
    switch (order) {
      case ScanOrder::First:
        return all.front();
      case ScanOrder::Last:
        return all.back();
      case ScanOrder::Random: {
        std::mt19937_64 rng(seed ^ graph_hash(g));
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return all[pick(rng)];
      }
    }
    return all.front();
  };
}

bool is_c4_up_to_multiplicity(const MultiGraph& g) {
  const MultiGraph s = underlying_simple(g);
  if (s.num_vertices() != 4 || s.num_edges() != 4 || !is_connected(s)) return false;
  for (VertexId v : s.vertices()) {
    if (s.degree(v) != 2) return false;
  }
  return true;
}

namespace {

struct Subtree {
  std::vector<DecompositionNode> nodes;
  std::vector<DecompositionLeaf> leaves;
};

void graft(Subtree& into, Subtree&& child, int parent) {
  const int node_offset = static_cast<int>(into.nodes.size());
  const int leaf_offset = static_cast<int>(into.leaves.size());
  for (DecompositionNode& n : child.nodes) {
    n.parent = n.parent < 0 ? parent : n.parent + node_offset;
    if (n.first >= 0) n.first += node_offset;
    if (n.second >= 0) n.second += node_offset;
    if (n.leaf >= 0) n.leaf += leaf_offset;
    into.nodes.push_back(std::move(n));
  }
  for (DecompositionLeaf& l : child.leaves) {
    l.node += static_cast<std::size_t>(node_offset);
    into.leaves.push_back(std::move(l));
  }
}

Subtree decompose(const MultiGraph& g, const CutChooser& chooser, bool parallel) {
  Subtree t;
  const auto cut = chooser(g);
  if (!cut) {
    DecompositionNode node{.graph = g, .cut = std::nullopt};
    node.leaf = 0;
    t.nodes.push_back(std::move(node));
    const LeafKind kind = is_bipartite(g) ? LeafKind::Brace : LeafKind::Brick;
    t.leaves.push_back({g, kind, canonical_form(g, 64), 0});
    return t;
  }
  auto [keep_shore, keep_other] = cut_contractions(g, *cut);
  Subtree first;
  Subtree second;
  if (parallel) {
#pragma omp task default(none) shared(first, keep_shore, chooser, parallel)
    first = decompose(keep_shore.graph, chooser, parallel);
    second = decompose(keep_other.graph, chooser, parallel);
#pragma omp taskwait
  } else {
    first = decompose(keep_shore.graph, chooser, parallel);
    second = decompose(keep_other.graph, chooser, parallel);
  }
  DecompositionNode node{.graph = g, .cut = std::nullopt};
  node.cut = *cut;
  t.nodes.push_back(std::move(node));
  t.nodes[0].first = static_cast<int>(t.nodes.size());
  graft(t, std::move(first), 0);
  t.nodes[0].second = static_cast<int>(t.nodes.size());
  graft(t, std::move(second), 0);
  return t;
}

DecompositionResult finish(Subtree&& t, CutKind kind) {
  DecompositionResult out;
  out.kind = kind;
  out.nodes = std::move(t.nodes);
  out.leaves = std::move(t.leaves);
  for (const DecompositionLeaf& leaf : out.leaves) {
    if (leaf.kind == LeafKind::Brick) ++out.b;
    if (leaf.kind == LeafKind::Brace && is_c4_up_to_multiplicity(leaf.graph)) ++out.c4;
  }
  return out;
}

}  // namespace

std::vector<CanonicalForm> DecompositionResult::leaf_forms() const {
  std::vector<CanonicalForm> out;
  for (const DecompositionLeaf& l : leaves) out.push_back(l.form);
  std::sort(out.begin(), out.end());
  return out;
}

DecompositionResult tight_cut_decomposition(const MultiGraph& g, const CutChooser& chooser, Execution exec) {
  if (!is_matching_covered(g)) throw DomainError("tight cut decomposition needs a matching covered graph");
  Subtree t;
  if (exec == Execution::Parallel) {
#pragma omp parallel default(none) shared(t, g, chooser)
#pragma omp single
    t = decompose(g, chooser, true);
  } else {
    t = decompose(g, chooser, false);
  }
  return finish(std::move(t), CutKind::Tight);
}

DecompositionResult separating_cut_decomposition(const MultiGraph& g, std::size_t limit) {
  if (!is_matching_covered(g)) throw DomainError("separating cut decomposition needs a matching covered graph");
  const CutChooser chooser = [limit](const MultiGraph& h) { return find_nontrivial_separating_cut(h, limit); };
  return finish(decompose(g, chooser, false), CutKind::Separating);
}

bool BoundsReport::all_hold() const {
  return bipartite_bound_holds.value_or(true) && nonbipartite_bound_holds.value_or(true) &&
         even_free_bound_holds.value_or(true);
}

BoundsReport verify_bounds(const MultiGraph& g) {
  BoundsReport r;
  r.epsilon = equivalence_partition(g).epsilon();
  const DecompositionResult d = tight_cut_decomposition(g);
  r.b = d.b;
  r.c4 = d.c4;
  r.bipartite = is_bipartite(g).has_value();
  r.even_two_cut_free = even_2cuts(g).empty();
  if (r.bipartite) {
    r.bipartite_bound_holds = r.epsilon <= 1 + r.c4;
    r.bipartite_bound_tight = r.epsilon == 1 + r.c4;
  } else {
    r.nonbipartite_bound_holds = r.epsilon <= 2 * r.b + r.c4;
    r.nonbipartite_bound_tight = r.epsilon == 2 * r.b + r.c4;
    if (r.even_two_cut_free) r.even_free_bound_holds = r.epsilon <= 2 * r.b;
  }
  return r;
}

}  // namespace matchcover
