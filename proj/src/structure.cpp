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

#include "matchcover/structure.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "matchcover/error.hpp"
#include "matchcover/matching.hpp"

namespace matchcover {

bool is_barrier(const MultiGraph& g, std::span<const VertexId> b) {
  const VertexSet set = normalized(VertexSet(b.begin(), b.end()));
  return odd_components_count(g, set) == set.size();
}

bool CanonicalPartition::all_singletons() const {
  return std::all_of(parts.begin(), parts.end(), [](const VertexSet& p) { return p.size() == 1; });
}

const VertexSet& CanonicalPartition::part_of(VertexId v) const {
  for (const VertexSet& p : parts) {
    if (contains(p, v)) return p;
  }
  throw DomainError("vertex " + std::to_string(raw(v)) + " not in partition");
}

CanonicalPartition canonical_partition(const MultiGraph& g) {
  if (!is_matching_covered(g)) throw DomainError("canonical partition needs a matching covered graph");
  const PmOracle oracle(g);
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      const VertexId pair[] = {g.vertices()[i], g.vertices()[j]};
      if (!oracle.matchable_without(pair)) parent[find(j)] = find(i);
    }
  }
  CanonicalPartition out;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.parts.size());
      out.parts.emplace_back();
    }
    out.parts[static_cast<std::size_t>(slot[r])].push_back(g.vertices()[i]);
  }
  for (const VertexSet& p : out.parts) {
    if (!is_barrier(g, p)) throw InternalError("canonical partition produced a part that is not a barrier");
  }
  return out;
}

bool is_bicritical(const MultiGraph& g) {
  if (g.num_vertices() % 2 == 1) return false;
  const PmOracle oracle(g);
  const auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const VertexId pair[] = {vs[i], vs[j]};
      if (!oracle.matchable_without(pair)) return false;
    }
  }
  return true;
}

std::vector<Cut> even_2cuts(const MultiGraph& g) {
  std::vector<Cut> out;
  const auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const Edge& e = es[i];
      const Edge& f = es[j];
      if (e.touches(f.u) || e.touches(f.v)) continue;
      const EdgeId gone[] = {e.id, f.id};
      const auto comps = components(g.without_edges(gone));
      if (comps.size() != 2 || comps[0].size() % 2 == 1 || comps[1].size() % 2 == 1) continue;
      const VertexSet& shore = comps[0];
      const bool e_crosses = contains(shore, e.u) != contains(shore, e.v);
      const bool f_crosses = contains(shore, f.u) != contains(shore, f.v);
      if (e_crosses && f_crosses) out.push_back(Cut::of(g, shore));
    }
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> two_vertex_cuts(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  const auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const VertexId pair[] = {vs[i], vs[j]};
      if (components(g.without_vertices(pair)).size() > 1) out.emplace_back(vs[i], vs[j]);
    }
  }
  return out;
}

namespace {

class SplitNetwork {
 public:
  explicit SplitNetwork(const MultiGraph& g) : g_(g), n_(g.num_vertices()) {}

  std::size_t max_flow(std::size_t s, std::size_t t) {
    build(s, t);
    const std::size_t source = 2 * s + 1;
    const std::size_t sink = 2 * t;
    std::size_t flow = 0;
    std::vector<long> via(head_.size());
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<std::size_t> q{source};
      via[source] = -2;
      while (!q.empty() && via[sink] == -1) {
        const std::size_t x = q.front();
        q.pop_front();
        for (std::size_t a : head_[x]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = static_cast<long>(a);
            q.push_back(to_[a]);
          }
        }
      }
      if (via[sink] == -1) return flow;
      for (std::size_t x = sink; x != source;) {
        const auto a = static_cast<std::size_t>(via[x]);
        --cap_[a];
        ++cap_[a ^ 1U];
        x = to_[a ^ 1U];
      }
      ++flow;
    }
  }

 private:
  void arc(std::size_t from, std::size_t to, long cap) {
    head_[from].push_back(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    head_[to].push_back(to_.size());
    to_.push_back(from);
    cap_.push_back(0);
  }

  void build(std::size_t s, std::size_t t) {
    const long inf = static_cast<long>(n_) + 1;
    head_.assign(2 * n_, {});
    to_.clear();
    cap_.clear();
    for (std::size_t v = 0; v < n_; ++v) arc(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    for (const Edge& e : g_.edges()) {
      const std::size_t u = g_.vertex_index(e.u);
      const std::size_t v = g_.vertex_index(e.v);
      arc(2 * u + 1, 2 * v, inf);
      arc(2 * v + 1, 2 * u, inf);
    }
  }

  const MultiGraph& g_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> head_;
  std::vector<std::size_t> to_;
  std::vector<long> cap_;
};

}  // namespace

std::size_t local_vertex_connectivity(const MultiGraph& g, VertexId s, VertexId t) {
  const std::size_t si = g.vertex_index(s);
  const std::size_t ti = g.vertex_index(t);
  for (const auto& inc : g.incidence(si)) {
    if (inc.neighbor == ti) throw DomainError("local vertex connectivity needs nonadjacent vertices");
  }
  return SplitNetwork(g).max_flow(si, ti);
}

std::size_t vertex_connectivity(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1 || !is_connected(g)) return 0;
  const MultiGraph simple = underlying_simple(g);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& inc : simple.incidence(v)) adj[v][inc.neighbor] = 1;
  }
  std::size_t best = n - 1;
  SplitNetwork net(simple);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (adj[s][t]) continue;
      best = std::min(best, net.max_flow(s, t));
    }
  }
  return best;
}

}  // namespace matchcover
