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

#include "blossom.hpp"

#include <algorithm>

namespace matchcover::detail {

Blossom::Blossom(const MultiGraph& g, const std::vector<char>& dead_vertex, const std::vector<char>& dead_edge)
    : g_(g),
      dead_vertex_(dead_vertex),
      dead_edge_(dead_edge),
      n_(static_cast<int>(g.num_vertices())),
      parent_(g.num_vertices()),
      base_(g.num_vertices()),
      used_(g.num_vertices()),
      in_blossom_(g.num_vertices()),
      lca_mark_(g.num_vertices()) {
  queue_.reserve(g.num_vertices());
}

int Blossom::lca(int a, int b, const std::vector<int>& mate) {
  std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
  for (;;) {
    a = base_[a];
    lca_mark_[a] = 1;
    if (mate[a] == -1) break;
    a = parent_[mate[a]];
  }
  for (;;) {
    b = base_[b];
    if (lca_mark_[b]) return b;
    b = parent_[mate[b]];
  }
}

void Blossom::mark_path(int v, int b, int child, const std::vector<int>& mate) {
  while (base_[v] != b) {
    in_blossom_[base_[v]] = 1;
    in_blossom_[base_[mate[v]]] = 1;
    parent_[v] = child;
    child = mate[v];
    v = parent_[mate[v]];
  }
}

int Blossom::find_path(int root, std::vector<int>& mate) {
  std::fill(used_.begin(), used_.end(), 0);
  std::fill(parent_.begin(), parent_.end(), -1);
  for (int i = 0; i < n_; ++i) base_[i] = i;
  queue_.clear();
  used_[root] = 1;
  queue_.push_back(root);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int v = queue_[head];
    for (const auto& inc : g_.incidence(static_cast<std::size_t>(v))) {
      if (dead_edge_[inc.edge]) continue;
      const int to = static_cast<int>(inc.neighbor);
      if (dead_vertex_[to]) continue;
      if (base_[v] == base_[to] || mate[v] == to) continue;
      if (to == root || (mate[to] != -1 && parent_[mate[to]] != -1)) {
        const int cur = lca(v, to, mate);
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(v, cur, to, mate);
        mark_path(to, cur, v, mate);
        for (int i = 0; i < n_; ++i) {
          if (in_blossom_[base_[i]]) {
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue_.push_back(i);
            }
          }
        }
      } else if (parent_[to] == -1) {
        parent_[to] = v;
        if (mate[to] == -1) return to;
        used_[mate[to]] = 1;
        queue_.push_back(mate[to]);
      }
    }
  }
  return -1;
}

void Blossom::maximize(std::vector<int>& mate) {
  for (int root = 0; root < n_; ++root) {
    if (dead_vertex_[root] || mate[root] != -1) continue;
    int v = find_path(root, mate);
    while (v != -1) {
      const int pv = parent_[v];
      const int ppv = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = ppv;
    }
  }
}

int connecting_edge(const MultiGraph& g, int u, int v, const std::vector<char>& dead_edge) {
  int best = -1;
  for (const auto& inc : g.incidence(static_cast<std::size_t>(u))) {
    if (static_cast<int>(inc.neighbor) != v || dead_edge[inc.edge]) continue;
    if (best == -1 || static_cast<int>(inc.edge) < best) best = static_cast<int>(inc.edge);
  }
  return best;
}

}  // namespace matchcover::detail
