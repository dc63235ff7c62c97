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

#include <gtest/gtest.h>

#include "frozen.hpp"
#include "matchcover/dependence.hpp"
#include "matchcover/error.hpp"
#include "matchcover/generators.hpp"
#include "matchcover/matching.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace matchcover;

TEST(Dependence, FrozenCorpusValues) {
  for (const frozen::Row& row : frozen::kCorpus) {
    const MultiGraph g = named_graph(row.name);
    ASSERT_EQ(g.num_vertices(), row.n) << row.name;
    ASSERT_EQ(g.num_edges(), row.m) << row.name;
    EXPECT_EQ(enumerate_pms(g).size(), row.perfect_matchings) << row.name;
    const auto partition = equivalence_partition(g);
    EXPECT_EQ(partition.epsilon(), row.epsilon) << row.name;
    EXPECT_EQ(partition.classes().size(), row.classes) << row.name;
    EXPECT_EQ(epsilon(g), row.epsilon) << row.name;
  }
}

TEST(Dependence, ClassesAgreeWithBruteForce) {
  Rng rng(41);
  RandomGraphOptions options;
  options.max_vertices = 12;
  options.density = 0.3;
  for (int k = 0; k < 200; ++k) {
    const MultiGraph g = random_matching_covered(rng, options);
    const auto partition = equivalence_partition(g);
    ASSERT_EQ(partition.classes(), oracle::classes(g)) << testing_support::describe(g);
    ASSERT_EQ(equivalence_partition(g, Execution::Serial), partition);
    const auto pms = oracle::perfect_matchings(g);
    for (const Edge& e : g.edges()) {
      for (const Edge& f : g.edges()) {
        ASSERT_EQ(depends_on(g, e.id, f.id), oracle::depends(pms, e.id, f.id)) << testing_support::describe(g);
      }
      EXPECT_EQ(equivalence_class_of(g, e.id), partition.class_of(e.id));
    }
  }
}

TEST(Dependence, ParallelEdgesAreSingletons) {
  const MultiGraph g = oracle::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}});
  const auto partition = equivalence_partition(g);
  EXPECT_FALSE(mutually_dependent(g, EdgeId{0}, EdgeId{4}));
  EXPECT_TRUE(mutually_dependent(g, EdgeId{1}, EdgeId{3}));
  EXPECT_EQ(partition.class_of(EdgeId{0}), (EdgeSet{EdgeId{0}}));
  EXPECT_TRUE(partition.is_class(EdgeSet{EdgeId{1}, EdgeId{3}}));
  EXPECT_FALSE(partition.is_class(EdgeSet{EdgeId{1}}));
}

TEST(Dependence, RemovableEdgesAgreeWithBruteForce) {
  Rng rng(42);
  RandomGraphOptions options;
  options.min_vertices = 4;
  options.max_vertices = 10;
  for (int k = 0; k < 100; ++k) {
    const MultiGraph g = random_matching_covered(rng, options);
    if (g.num_vertices() == 2 && g.num_edges() == 1) continue;
    for (const Edge& e : g.edges()) {
      const EdgeId gone[] = {e.id};
      ASSERT_EQ(is_removable_edge(g, e.id), oracle::matching_covered(g.without_edges(gone)))
          << testing_support::describe(g);
    }
    for (const EdgeSet& r : removable_classes(g)) {
      EXPECT_TRUE(equivalence_partition(g).is_class(r));
      EXPECT_TRUE(oracle::matching_covered(g.without_edges(r)));
    }
  }
}

TEST(Dependence, NamedExamples) {
  EXPECT_EQ(removable_edges(named_graph("fig2b")).size(), 1u);
  EXPECT_TRUE(removable_edges(named_graph("C6")).empty());
  EXPECT_EQ(removable_edges(named_graph("K4")).size(), 0u);
  EXPECT_EQ(removable_classes(named_graph("K4")).size(), 3u);
  EXPECT_THROW(is_removable_edge(named_graph("K2"), EdgeId{0}), DomainError);
  EXPECT_THROW(equivalence_partition(named_graph("P4")), DomainError);
  EXPECT_THROW(depends_on(named_graph("K4"), EdgeId{0}, EdgeId{50}), DomainError);

  const MultiGraph c6bar = named_graph("C6bar");
  const auto partition = equivalence_partition(c6bar);
  const EdgeId e1 = *c6bar.labelled_edge("e1");
  const EdgeId e2 = *c6bar.labelled_edge("e2");
  EXPECT_EQ(partition.class_of(e1), normalized(EdgeSet{e1, e2}));
}
