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

#include "matchcover/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include <fmt/format.h>

#include "matchcover/error.hpp"

namespace matchcover {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;
using Perm = std::vector<int>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const MultiGraph& g) : n_(static_cast<int>(g.num_vertices())), adj_(g.num_vertices(), 0) {
    for (const Edge& e : g.edges()) {
      const auto u = g.vertex_index(e.u);
      const auto v = g.vertex_index(e.v);
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
    }
  }

  CanonicalForm run() {
    Partition start;
    if (n_ > 0) {
      Cell all(static_cast<std::size_t>(n_));
      std::iota(all.begin(), all.end(), 0);
      start.push_back(std::move(all));
    }
    std::vector<int> prefix;
    search(std::move(start), prefix);
    CanonicalForm out;
    out.order = static_cast<std::uint32_t>(n_);
    out.adjacency = best_ ? *best_ : std::vector<std::uint64_t>{};
    return out;
  }

 private:
  bool adjacent(int a, int b) const { return (adj_[static_cast<std::size_t>(a)] >> b) & 1U; }

  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        std::uint64_t splitter = 0;
        for (int v : p[s]) splitter |= std::uint64_t{1} << v;
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (p[c].size() < 2) continue;
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(p[c].size());
          for (int v : p[c]) {
            keyed.emplace_back(std::popcount(adj_[static_cast<std::size_t>(v)] & splitter), v);
          }
          const bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                           [&](const auto& k) { return k.first == keyed.front().first; });
          if (uniform) continue;
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          Partition pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<std::uint64_t> certificate(const Perm& order) const {
    std::vector<std::uint64_t> bits;
    std::size_t k = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++k) {
        if (k % 64 == 0) bits.push_back(0);
        if (adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) {
          bits.back() |= std::uint64_t{1} << (k % 64);
        }
      }
    }
    return bits;
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // prefix pointwise.
  std::vector<int> stabiliser_orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const Perm& gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  void search(Partition p, std::vector<int>& prefix) {
    refine(p);
    auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      Perm order;
      order.reserve(static_cast<std::size_t>(n_));
      for (const Cell& c : p) order.push_back(c.front());
      leaf(order);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - p.begin());
    Cell candidates = p[t];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored_roots;
    for (int v : candidates) {
      const auto orbits = stabiliser_orbits(prefix);
      const int root = orbits[static_cast<std::size_t>(v)];
      if (std::find(explored_roots.begin(), explored_roots.end(), root) != explored_roots.end()) continue;
      explored_roots.push_back(root);
      // Orbits may have merged since earlier siblings were explored.
      for (int& r : explored_roots) r = orbits[static_cast<std::size_t>(r)];

      Partition child = p;
      Cell rest;
      for (int w : p[t]) {
        if (w != v) rest.push_back(w);
      }
      child[t] = Cell{v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(t) + 1, std::move(rest));
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const Perm& order) {
    auto cert = certificate(order);
    if (!best_ || cert < *best_) {
      best_ = std::move(cert);
      best_order_ = order;
      return;
    }
    if (cert == *best_) {
      // best_order_[k] -> order[k] preserves adjacency.
      Perm gamma(static_cast<std::size_t>(n_));
      for (int k = 0; k < n_; ++k) {
        gamma[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(k)])] = order[static_cast<std::size_t>(k)];
      }
      automorphisms_.push_back(std::move(gamma));
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::optional<std::vector<std::uint64_t>> best_;
  Perm best_order_;
  std::vector<Perm> automorphisms_;
};

}  // namespace

std::string CanonicalForm::to_string() const {
  std::string out = fmt::format("{}:", order);
  for (std::uint64_t w : adjacency) out += fmt::format("{:016x}", w);
  return out;
}

CanonicalForm canonical_form(const MultiGraph& g, std::size_t limit) {
  if (g.num_vertices() > std::min<std::size_t>(limit, 64)) {
    throw CapabilityError(fmt::format("canonical form limited to {} vertices, graph has {}",
                                      std::min<std::size_t>(limit, 64), g.num_vertices()));
  }
  return Canonicalizer(g).run();
}

bool isomorphic_up_to_multiplicity(const MultiGraph& a, const MultiGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace matchcover
