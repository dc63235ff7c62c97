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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matchcover/generators.hpp"
#include "matchcover/matching.hpp"
#include "matchcover/multigraph.hpp"

namespace testing_support {

using namespace matchcover;

/// Arbitrary small multigraph: any order, possibly disconnected.
inline MultiGraph loose_graph(std::mt19937_64& rng, std::size_t max_vertices) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::bernoulli_distribution edge(0.35);
  std::bernoulli_distribution twin(0.15);
  GraphBuilder b;
  const auto v = b.add_vertices(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (!edge(rng)) continue;
      b.add_edge(v[i], v[k]);
      if (twin(rng)) b.add_edge(v[i], v[k]);
    }
  }
  return b.build();
}

/// Named graphs plus random matching covered graphs and random splices.
inline std::vector<MultiGraph> mixed_corpus(std::uint64_t seed, std::size_t random_count, std::size_t splices,
                                            std::size_t max_vertices = 12) {
  std::vector<MultiGraph> out;
  for (const std::string& name : corpus_names()) out.push_back(named_graph(name));
  Rng rng(seed);
  RandomGraphOptions sparse;
  sparse.max_vertices = max_vertices;
  sparse.density = 0.25;
  for (std::size_t k = 0; k < random_count; ++k) out.push_back(random_matching_covered(rng, sparse));
  const std::vector<MultiGraph> pool = out;
  for (std::size_t k = 0; k < splices; ++k) {
    if (auto s = random_splice(rng, pool, 16)) out.push_back(*s);
  }
  return out;
}

inline std::string describe(const MultiGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " vertices:";
  for (const auto& e : g.edges()) {
    out += " " + std::to_string(raw(e.u)) + "-" + std::to_string(raw(e.v));
  }
  return out;
}

}  // namespace testing_support
