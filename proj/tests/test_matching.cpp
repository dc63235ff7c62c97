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

#include <algorithm>
#include <random>
#include <set>

#include "matchcover/error.hpp"
#include "matchcover/generators.hpp"
#include "matchcover/matching.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace matchcover;

namespace {

bool is_matching_of(const MultiGraph& g, const EdgeSet& edges) {
  std::set<VertexId> seen;
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) return false;
    if (!seen.insert(g.edge(e).u).second || !seen.insert(g.edge(e).v).second) return false;
  }
  return std::is_sorted(edges.begin(), edges.end());
}

std::vector<EdgeSet> edge_sets(const std::vector<PerfectMatching>& pms) {
  std::vector<EdgeSet> out;
  for (const auto& pm : pms) out.push_back(pm.edges);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Matching, MaximumMatchingAgreesWithBruteForce) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 300; ++k) {
    const MultiGraph g = testing_support::loose_graph(rng, 11);
    const Matching m = maximum_matching(g);
    ASSERT_TRUE(is_matching_of(g, m.edges)) << testing_support::describe(g);
    ASSERT_EQ(m.size(), oracle::max_matching_size(g)) << testing_support::describe(g);
    EXPECT_EQ(is_matchable(g), 2 * m.size() == g.num_vertices());
  }
}

TEST(Matching, ParallelEdgesResolveToLowestId) {
  const MultiGraph g = oracle::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(maximum_matching(g).edges, (EdgeSet{EdgeId{0}}));
  EXPECT_EQ(enumerate_pms(g).size(), 3u);
}

TEST(Matching, EnumerationAgreesWithBruteForce) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const MultiGraph g = testing_support::loose_graph(rng, 10);
    ASSERT_EQ(edge_sets(enumerate_pms(g)), oracle::perfect_matchings(g)) << testing_support::describe(g);
  }
  EXPECT_EQ(enumerate_pms(named_graph("K4,4")).size(), 24u);
  EXPECT_EQ(enumerate_pms(named_graph("petersen")).size(), 6u);
  EXPECT_EQ(enumerate_pms(named_graph("K6")).size(), 15u);
}

TEST(Matching, EnumerationBudget) {
  const MultiGraph g = named_graph("K4,4");
  EXPECT_THROW(enumerate_pms(g, 23), CapabilityError);
  EXPECT_EQ(enumerate_pms(g, 24).size(), 24u);
}

TEST(Matching, AdmissibilityAndCoverage) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const MultiGraph g = testing_support::loose_graph(rng, 10);
    const auto pms = oracle::perfect_matchings(g);
    EdgeSet used;
    for (const auto& pm : pms) used.insert(used.end(), pm.begin(), pm.end());
    used = normalized(used);
    for (const Edge& e : g.edges()) {
      ASSERT_EQ(is_admissible(g, e.id), contains(used, e.id)) << testing_support::describe(g);
    }
    ASSERT_EQ(is_matching_covered(g), oracle::matching_covered(g)) << testing_support::describe(g);
  }
  EXPECT_THROW(is_admissible(named_graph("K4"), EdgeId{99}), DomainError);
  EXPECT_FALSE(is_matching_covered(named_graph("P4")));
  EXPECT_EQ(inadmissible_edges(named_graph("P4")), (EdgeSet{EdgeId{1}}));
  EXPECT_TRUE(is_matching_covered(named_graph("K2")));
}

TEST(PmOracle, QueriesAgreeWithEnumeration) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const MultiGraph g = testing_support::loose_graph(rng, 9);
    const auto pms = oracle::perfect_matchings(g);
    const PmOracle pmo(g);
    EXPECT_EQ(pmo.matchable(), !pms.empty());
    const auto m = g.num_edges();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const EdgeId e = g.edges()[i].id;
        const EdgeId f = g.edges()[j].id;
        const EdgeId forced[] = {e};
        const EdgeId deleted[] = {f};
        const bool expected = std::any_of(pms.begin(), pms.end(), [&](const EdgeSet& pm) {
          return contains(pm, e) && (e == f || !contains(pm, f));
        });
        const bool got = i == j ? pmo.extends(forced) : pmo.extends(forced, deleted);
        ASSERT_EQ(got, expected) << testing_support::describe(g) << " e=" << i << " f=" << j;
        if (i < j) {
          const EdgeId pair[] = {e, f};
          const bool both = std::any_of(pms.begin(), pms.end(),
                                        [&](const EdgeSet& pm) { return contains(pm, e) && contains(pm, f); });
          ASSERT_EQ(pmo.extends(pair), both);
          ASSERT_EQ(has_pm_containing(g, pair), both);
        }
      }
    }
    if (g.num_vertices() >= 2) {
      const VertexId removed[] = {g.vertices()[0], g.vertices()[1]};
      const MultiGraph rest = g.without_vertices(removed);
      EXPECT_EQ(pmo.matchable_without(removed), oracle::max_matching_size(rest) * 2 == rest.num_vertices());
    }
    for (const Edge& e : g.edges()) {
      const EdgeId forced[] = {e.id};
      const auto pm = pmo.completion(forced);
      if (!pm) continue;
      EXPECT_TRUE(pm->contains(e.id));
      EXPECT_TRUE(std::binary_search(pms.begin(), pms.end(), pm->edges));
    }
  }
}

TEST(PmOracle, BadForcedSetsAnswerFalse) {
  const MultiGraph g = named_graph("C6");
  const PmOracle pmo(g);
  const EdgeId unknown[] = {EdgeId{77}};
  const EdgeId overlapping[] = {EdgeId{0}, EdgeId{1}};
  EXPECT_FALSE(pmo.extends(unknown));
  EXPECT_FALSE(pmo.extends(overlapping));
  EXPECT_FALSE(has_pm_containing(g, overlapping));
}

TEST(BipartiteWitness, ExplainsInadmissibility) {
  std::mt19937_64 rng(5);
  int witnessed = 0;
  for (int k = 0; k < 400; ++k) {
    const MultiGraph g = testing_support::loose_graph(rng, 10);
    const auto parts = is_bipartite(g);
    if (!parts || !is_matchable(g)) continue;
    for (const Edge& e : g.edges()) {
      const auto s = bip_inadmissibility_witness(g, e.id);
      ASSERT_EQ(s.has_value(), !is_admissible(g, e.id)) << testing_support::describe(g);
      if (!s) continue;
      ++witnessed;
      VertexSet nbrs;
      for (VertexId x : *s) {
        ASSERT_TRUE(contains(parts->a, x));
        for (VertexId y : g.neighbors(x)) nbrs.push_back(y);
      }
      nbrs = normalized(nbrs);
      EXPECT_EQ(nbrs.size(), s->size());
      EXPECT_LT(s->size(), parts->a.size());
      const VertexId in_a = contains(parts->a, e.u) ? e.u : e.v;
      EXPECT_TRUE(contains(nbrs, e.other(in_a)));
      EXPECT_FALSE(contains(*s, in_a));
    }
  }
  EXPECT_GT(witnessed, 20);
  EXPECT_THROW(bip_inadmissibility_witness(named_graph("K4"), EdgeId{0}), DomainError);
  EXPECT_THROW(bip_inadmissibility_witness(named_graph("K21,21"), EdgeId{0}), CapabilityError);
}
