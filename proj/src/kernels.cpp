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

#include "matchcover/kernels.hpp"

#include "matchcover/cuts.hpp"
#include "matchcover/matching.hpp"

namespace matchcover {

DependenceMatrix dependence_matrix_serial(const MultiGraph& g) {
  const std::size_t m = g.num_edges();
  DependenceMatrix out(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) {
        out.set(i, j);
        continue;
      }
      const MultiGraph without_f = g.without_edges(std::span<const EdgeId>(&g.edges()[j].id, 1));
      const EdgeId forced[] = {g.edges()[i].id};
      if (!has_pm_containing(without_f, forced)) out.set(i, j);
    }
  }
  return out;
}

DependenceMatrix dependence_matrix_parallel(const MultiGraph& g) {
  const std::size_t m = g.num_edges();
  DependenceMatrix out(m);
  const PmOracle oracle(g);
  const auto edges = g.edges();
  // Rows write disjoint slices of the matrix.
#pragma omp parallel for schedule(dynamic)
  for (long row = 0; row < static_cast<long>(m); ++row) {
    const auto i = static_cast<std::size_t>(row);
    out.set(i, i);
    const EdgeId forced[] = {edges[i].id};
    const auto through = oracle.completion(forced);
    if (!through) {
      // Inadmissible e depends on everything.
      for (std::size_t j = 0; j < m; ++j) out.set(i, j);
      continue;
    }
    for (EdgeId f : through->edges) {
      if (f == edges[i].id) continue;
      const EdgeId deleted[] = {f};
      if (!oracle.extends(forced, deleted)) out.set(i, g.edge_index(f));
    }
  }
  return out;
}

std::vector<Cut> tight_cut_filter_serial(const MultiGraph& g, std::span<const Cut> candidates) {
  std::vector<Cut> out;
  for (const Cut& c : candidates) {
    if (is_tight_cut(g, c)) out.push_back(c);
  }
  return out;
}

std::vector<Cut> tight_cut_filter_parallel(const MultiGraph& g, std::span<const Cut> candidates) {
  const PmOracle oracle(g);
  std::vector<char> keep(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < static_cast<long>(candidates.size()); ++k) {
    keep[static_cast<std::size_t>(k)] = is_tight_cut(oracle, candidates[static_cast<std::size_t>(k)]) ? 1 : 0;
  }
  std::vector<Cut> out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (keep[k]) out.push_back(candidates[k]);
  }
  return out;
}

}  // namespace matchcover
