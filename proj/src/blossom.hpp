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

#pragma once

#include <vector>

#include "matchcover/multigraph.hpp"

namespace matchcover::detail {

/// Edmonds' blossom search over vertex indices of a MultiGraph, with
/// vertex and edge masks. `mate[v]` is the partner index or -1.
class Blossom {
 public:
  Blossom(const MultiGraph& g, const std::vector<char>& dead_vertex, const std::vector<char>& dead_edge);

  /// Augments `mate` until it is maximum on the unmasked graph.
  void maximize(std::vector<int>& mate);

 private:
  int find_path(int root, std::vector<int>& mate);
  int lca(int a, int b, const std::vector<int>& mate);
  void mark_path(int v, int b, int child, const std::vector<int>& mate);

  const MultiGraph& g_;
  const std::vector<char>& dead_vertex_;
  const std::vector<char>& dead_edge_;
  int n_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  std::vector<char> lca_mark_;
  std::vector<int> queue_;
};

/// Lowest-index unmasked edge joining two vertex indices, or -1.
int connecting_edge(const MultiGraph& g, int u, int v, const std::vector<char>& dead_edge);

}  // namespace matchcover::detail
