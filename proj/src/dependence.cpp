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

#include "matchcover/dependence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matchcover/error.hpp"
#include "matchcover/kernels.hpp"
#include "matchcover/matching.hpp"

namespace matchcover {

bool depends_on(const MultiGraph& g, EdgeId e, EdgeId f) {
  g.edge_index(e);
  g.edge_index(f);
  if (e == f) return true;
  const EdgeId forced[] = {e};
  const EdgeId deleted[] = {f};
  return !PmOracle(g).extends(forced, deleted);
}

bool mutually_dependent(const MultiGraph& g, EdgeId e, EdgeId f) {
  return depends_on(g, e, f) && depends_on(g, f, e);
}

EquivalencePartition::EquivalencePartition(std::vector<EdgeSet> classes) : classes_(std::move(classes)) {
  for (EdgeSet& c : classes_) c = normalized(std::move(c));
  std::sort(classes_.begin(), classes_.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.front() < b.front(); });
}

std::size_t EquivalencePartition::epsilon() const noexcept {
  std::size_t best = 0;
  for (const EdgeSet& c : classes_) best = std::max(best, c.size());
  return best;
}

std::size_t EquivalencePartition::class_index(EdgeId e) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (contains(classes_[i], e)) return i;
  }
  throw DomainError("edge " + std::to_string(raw(e)) + " not in partition");
}

bool EquivalencePartition::is_class(const EdgeSet& edges) const {
  const EdgeSet key = normalized(edges);
  return std::find(classes_.begin(), classes_.end(), key) != classes_.end();
}

EquivalencePartition equivalence_partition(const MultiGraph& g, Execution exec) {
  if (!is_matching_covered(g)) throw DomainError("equivalence classes need a matching covered graph");
  const DependenceMatrix dep =
      exec == Execution::Parallel ? dependence_matrix_parallel(g) : dependence_matrix_serial(g);
  const std::size_t m = g.num_edges();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (dep.at(i, j) && dep.at(j, i)) parent[find(j)] = find(i);
    }
  }
  std::vector<EdgeSet> classes;
  std::vector<long> slot(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[r])].push_back(g.edges()[i].id);
  }
  return EquivalencePartition(std::move(classes));
}

std::size_t epsilon(const MultiGraph& g) { return equivalence_partition(g).epsilon(); }

EdgeSet equivalence_class_of(const MultiGraph& g, EdgeId e) {
  g.edge_index(e);
  const PmOracle oracle(g);
  EdgeSet out{e};
  const EdgeId fe[] = {e};
  const auto through_e = oracle.completion(fe);
  if (!through_e) throw DomainError("edge " + std::to_string(raw(e)) + " is inadmissible");
  // e ↔ f forces f into every perfect matching through e.
  for (EdgeId f : through_e->edges) {
    if (f == e) continue;
    const EdgeId ff[] = {f};
    const EdgeId del_f[] = {f};
    const EdgeId del_e[] = {e};
    if (!oracle.extends(fe, del_f) && !oracle.extends(ff, del_e)) out.push_back(f);
  }
  return normalized(std::move(out));
}

bool is_removable_edge(const MultiGraph& g, EdgeId e) {
  g.edge_index(e);
  if (g.num_vertices() == 2 && g.num_edges() == 1) {
    throw DomainError("removability is undefined for K2");
  }
  const EdgeId gone[] = {e};
  return is_matching_covered(g.without_edges(gone));
}

EdgeSet removable_edges(const MultiGraph& g) {
  EdgeSet out;
  if (g.num_vertices() == 2 && g.num_edges() == 1) return out;
  for (const Edge& e : g.edges()) {
    if (is_removable_edge(g, e.id)) out.push_back(e.id);
  }
  return out;
}

std::vector<EdgeSet> removable_classes(const MultiGraph& g) {
  std::vector<EdgeSet> out;
  const EquivalencePartition partition = equivalence_partition(g);
  for (const EdgeSet& cls : partition.classes()) {
    if (is_matching_covered(g.without_edges(cls))) out.push_back(cls);
  }
  return out;
}

}  // namespace matchcover
