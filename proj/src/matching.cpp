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

#include "matchcover/matching.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "blossom.hpp"
#include "matchcover/error.hpp"

namespace matchcover {

namespace {

std::vector<int> maximum_mate(const MultiGraph& g) {
  std::vector<char> dead_v(g.num_vertices(), 0);
  std::vector<char> dead_e(g.num_edges(), 0);
  std::vector<int> mate(g.num_vertices(), -1);
  // Greedy start; the blossom search only has to fix what greed missed.
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] != -1) continue;
    for (const auto& inc : g.incidence(v)) {
      if (mate[inc.neighbor] == -1) {
        mate[v] = static_cast<int>(inc.neighbor);
        mate[inc.neighbor] = static_cast<int>(v);
        break;
      }
    }
  }
  detail::Blossom(g, dead_v, dead_e).maximize(mate);
  return mate;
}

Matching lift(const MultiGraph& g, const std::vector<int>& mate, const std::vector<char>& dead_e) {
  Matching m;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] > static_cast<int>(v)) {
      const int e = detail::connecting_edge(g, static_cast<int>(v), mate[v], dead_e);
      m.edges.push_back(g.edges()[static_cast<std::size_t>(e)].id);
    }
  }
  m.edges = normalized(std::move(m.edges));
  return m;
}

}  // namespace

PmOracle::PmOracle(const MultiGraph& g) : g_(&g), base_mate_(maximum_mate(g)) {
  base_ = lift(g, base_mate_, std::vector<char>(g.num_edges(), 0));
  matchable_ = 2 * base_.size() == g.num_vertices();
}

std::optional<std::vector<int>> PmOracle::solve(std::span<const EdgeId> forced, std::span<const EdgeId> deleted,
                                                std::span<const VertexId> removed) const {
  const MultiGraph& g = *g_;
  std::vector<char> dead_e(g.num_edges(), 0);
  for (EdgeId e : deleted) {
    if (auto i = g.find_edge(e)) dead_e[*i] = 1;
  }
  std::vector<char> dead_v(g.num_vertices(), 0);
  for (VertexId v : removed) {
    if (auto i = g.find_vertex(v)) dead_v[*i] = 1;
  }
  for (EdgeId e : forced) {
    auto i = g.find_edge(e);
    if (!i || dead_e[*i]) return std::nullopt;
    const Edge& edge = g.edges()[*i];
    const std::size_t u = *g.find_vertex(edge.u);
    const std::size_t v = *g.find_vertex(edge.v);
    if (dead_v[u] || dead_v[v]) return std::nullopt;
    dead_v[u] = dead_v[v] = 1;
  }
  std::size_t alive = 0;
  for (char d : dead_v) alive += d ? 0 : 1;
  if (alive % 2 == 1) return std::nullopt;

  std::vector<int> mate = base_mate_;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    const int w = mate[v];
    if (w == -1) continue;
    if (dead_v[v] || dead_v[static_cast<std::size_t>(w)] ||
        detail::connecting_edge(g, static_cast<int>(v), w, dead_e) == -1) {
      mate[v] = -1;
      mate[static_cast<std::size_t>(w)] = -1;
    }
  }
  detail::Blossom(g, dead_v, dead_e).maximize(mate);
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (!dead_v[v] && mate[v] == -1) return std::nullopt;
  }
  // Forced pairs go back in so the caller can lift a full matching.
  for (EdgeId e : forced) {
    const Edge& edge = g.edge(e);
    const int u = static_cast<int>(g.vertex_index(edge.u));
    const int v = static_cast<int>(g.vertex_index(edge.v));
    mate[static_cast<std::size_t>(u)] = v;
    mate[static_cast<std::size_t>(v)] = u;
  }
  return mate;
}

bool PmOracle::extends(std::span<const EdgeId> forced, std::span<const EdgeId> deleted) const {
  return solve(forced, deleted, {}).has_value();
}

std::optional<PerfectMatching> PmOracle::completion(std::span<const EdgeId> forced,
                                                    std::span<const EdgeId> deleted) const {
  auto mate = solve(forced, deleted, {});
  if (!mate) return std::nullopt;
  std::vector<char> dead_e(g_->num_edges(), 0);
  for (EdgeId e : deleted) {
    if (auto i = g_->find_edge(e)) dead_e[*i] = 1;
  }
  PerfectMatching pm;
  const Matching m = lift(*g_, *mate, dead_e);
  pm.edges = m.edges;
  // A forced edge with a lower-id parallel twin must still be the one reported.
  for (EdgeId e : forced) {
    const Edge& fe = g_->edge(e);
    auto it = std::find_if(pm.edges.begin(), pm.edges.end(), [&](EdgeId x) {
      const Edge& xe = g_->edge(x);
      return (xe.u == fe.u && xe.v == fe.v) || (xe.u == fe.v && xe.v == fe.u);
    });
    if (it != pm.edges.end()) *it = e;
  }
  pm.edges = normalized(std::move(pm.edges));
  return pm;
}

bool PmOracle::matchable_without(std::span<const VertexId> removed, std::span<const EdgeId> deleted) const {
  return solve({}, deleted, removed).has_value();
}

Matching maximum_matching(const MultiGraph& g) {
  return lift(g, maximum_mate(g), std::vector<char>(g.num_edges(), 0));
}

bool is_matchable(const MultiGraph& g) { return 2 * maximum_matching(g).size() == g.num_vertices(); }

bool has_pm_containing(const MultiGraph& g, std::span<const EdgeId> forced) {
  return PmOracle(g).extends(forced);
}

std::vector<PerfectMatching> enumerate_pms(const MultiGraph& g, std::size_t budget) {
  std::vector<PerfectMatching> out;
  const std::size_t n = g.num_vertices();
  if (n % 2 == 1) return out;
  const std::vector<char> dead_e(g.num_edges(), 0);
  std::vector<char> covered(n, 0);
  EdgeSet chosen;

  auto completable = [&]() {
    std::vector<int> mate(n, -1);
    detail::Blossom(g, covered, dead_e).maximize(mate);
    for (std::size_t v = 0; v < n; ++v) {
      if (!covered[v] && mate[v] == -1) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self) -> void {
    std::size_t v = 0;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      if (out.size() == budget) {
        throw CapabilityError("perfect matching enumeration exceeded budget of " + std::to_string(budget));
      }
      PerfectMatching pm;
      pm.edges = normalized(chosen);
      out.push_back(std::move(pm));
      return;
    }
    covered[v] = 1;
    for (const auto& inc : g.incidence(v)) {
      if (covered[inc.neighbor]) continue;
      covered[inc.neighbor] = 1;
      if (completable()) {
        chosen.push_back(g.edges()[inc.edge].id);
        self(self);
        chosen.pop_back();
      }
      covered[inc.neighbor] = 0;
    }
    covered[v] = 0;
  };
  if (completable()) recurse(recurse);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.edges < b.edges; });
  return out;
}

bool is_admissible(const MultiGraph& g, EdgeId e) {
  g.edge_index(e);
  const EdgeId forced[] = {e};
  return has_pm_containing(g, forced);
}

EdgeSet inadmissible_edges(const MultiGraph& g) {
  const PmOracle oracle(g);
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if (oracle.base_matching().contains(e.id) && oracle.matchable()) continue;
    const EdgeId forced[] = {e.id};
    if (!oracle.extends(forced)) out.push_back(e.id);
  }
  return out;
}

bool is_matching_covered(const MultiGraph& g) {
  if (g.num_vertices() < 2 || g.num_vertices() % 2 == 1 || !is_connected(g)) return false;
  const PmOracle oracle(g);
  if (!oracle.matchable()) return false;
  for (const Edge& e : g.edges()) {
    if (oracle.base_matching().contains(e.id)) continue;
    const EdgeId forced[] = {e.id};
    if (!oracle.extends(forced)) return false;
  }
  return true;
}

std::optional<VertexSet> bip_inadmissibility_witness(const MultiGraph& h, EdgeId e, std::optional<VertexSet> a) {
  const Edge& edge = h.edge(e);
  const auto parts = is_bipartite(h);
  if (!parts) throw DomainError("bip_inadmissibility_witness needs a bipartite graph");
  VertexSet side = a ? normalized(*a) : parts->a;
  if (side != parts->a && side != parts->b) {
    throw DomainError("given vertex set is not a colour class of the graph");
  }
  const std::size_t k = side.size();
  if (k > 20) throw CapabilityError("witness search limited to colour classes of at most 20 vertices");
  if (k < 2) return std::nullopt;

  if (h.num_vertices() > 64) throw CapabilityError("witness search limited to 64 vertices");
  std::vector<std::uint64_t> nb_mask(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (VertexId w : h.neighbors(side[i])) nb_mask[i] |= std::uint64_t{1} << h.vertex_index(w);
  }
  const std::uint64_t eu = std::uint64_t{1} << h.vertex_index(edge.u);
  const std::uint64_t ev = std::uint64_t{1} << h.vertex_index(edge.v);

  // Subsets by size, then lexicographically by member positions.
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size < k; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      std::uint64_t s_mask = 0;
      std::uint64_t n_mask = 0;
      for (std::size_t i : pick) {
        s_mask |= std::uint64_t{1} << h.vertex_index(side[i]);
        n_mask |= nb_mask[i];
      }
      if (static_cast<std::size_t>(std::popcount(n_mask)) == size) {
        const bool u_in_n = (n_mask & eu) != 0;
        const bool v_in_n = (n_mask & ev) != 0;
        const bool ok = (u_in_n && !(s_mask & ev)) || (v_in_n && !(s_mask & eu));
        if (ok) {
          VertexSet s;
          for (std::size_t i : pick) s.push_back(side[i]);
          return s;
        }
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == k - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace matchcover
