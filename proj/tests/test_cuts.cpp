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
#include <bit>

#include "frozen.hpp"
#include "matchcover/canonical.hpp"
#include "matchcover/cuts.hpp"
#include "matchcover/error.hpp"
#include "matchcover/generators.hpp"
#include "matchcover/matching.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace matchcover;

namespace {

std::vector<VertexSet> shores(const std::vector<Cut>& cuts) {
  std::vector<VertexSet> out;
  for (const Cut& c : cuts) out.push_back(c.shore());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<VertexSet> oracle_separating_shores(const MultiGraph& g) {
  std::vector<VertexSet> out;
  const std::size_t n = g.num_vertices();
  for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << n); mask += 2) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size % 2 == 0 || size == 1 || size == n - 1) continue;
    VertexSet shore;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) shore.push_back(g.vertices()[i]);
    }
    if (oracle::separating(g, shore)) out.push_back(shore);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet vs(std::initializer_list<std::uint32_t> ids) {
  VertexSet out;
  for (auto i : ids) out.push_back(VertexId{i});
  return normalized(out);
}

}  // namespace

TEST(Cuts, FrozenTightCutCounts) {
  for (const frozen::Row& row : frozen::kCorpus) {
    const MultiGraph g = named_graph(row.name);
    EXPECT_EQ(all_nontrivial_tight_cuts(g).size(), row.tight_cuts) << row.name;
  }
}

TEST(Cuts, TightCutsAgreeWithBruteForce) {
  const auto corpus = testing_support::mixed_corpus(61, 80, 40);
  for (const MultiGraph& g : corpus) {
    const auto expected = sorted(oracle::nontrivial_tight_shores(g));
    ASSERT_EQ(shores(all_nontrivial_tight_cuts(g)), expected) << testing_support::describe(g);
    ASSERT_EQ(shores(all_nontrivial_tight_cuts(g, kExhaustiveCutLimit, Execution::Serial)), expected);
    const auto found = find_nontrivial_tight_cut(g);
    ASSERT_EQ(found.has_value(), !expected.empty()) << testing_support::describe(g);
    if (found) {
      const auto pms = oracle::perfect_matchings(g);
      EXPECT_TRUE(oracle::tight(g, pms, found->shore()));
      EXPECT_FALSE(found->is_trivial());
    }
  }
}

TEST(Cuts, TightPredicateAgreesOnEveryOddShore) {
  const auto corpus = testing_support::mixed_corpus(62, 30, 10, 10);
  for (const MultiGraph& g : corpus) {
    if (g.num_vertices() > 12) continue;
    const auto pms = oracle::perfect_matchings(g);
    const PmOracle pmo(g);
    const std::size_t n = g.num_vertices();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      VertexSet shore;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) shore.push_back(g.vertices()[i]);
      }
      const Cut c = Cut::of(g, shore);
      const bool expected = oracle::tight(g, pms, shore);
      ASSERT_EQ(is_tight_cut(g, c), expected) << testing_support::describe(g) << " mask " << mask;
      ASSERT_EQ(is_tight_cut(pmo, c), expected);
    }
  }
}

TEST(Cuts, SeparatingCutsAgreeWithBruteForce) {
  const auto corpus = testing_support::mixed_corpus(63, 40, 20, 10);
  for (const MultiGraph& g : corpus) {
    if (g.num_vertices() > 12) continue;
    const auto expected = oracle_separating_shores(g);
    ASSERT_EQ(shores(all_nontrivial_separating_cuts(g)), expected) << testing_support::describe(g);
    for (const VertexSet& shore : expected) {
      const Cut c = Cut::of(g, shore);
      EXPECT_TRUE(is_separating_cut(g, c));
      EXPECT_TRUE(separating_by_edge_criterion(g, c));
    }
    EXPECT_EQ(find_nontrivial_separating_cut(g).has_value(), !expected.empty());
  }
}

TEST(Cuts, EdgeCriterionMatchesDefinition) {
  const auto corpus = testing_support::mixed_corpus(64, 30, 10, 10);
  for (const MultiGraph& g : corpus) {
    const std::size_t n = g.num_vertices();
    if (n > 10) continue;
    for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << n); mask += 2) {
      if (std::popcount(mask) % 2 == 0) continue;
      VertexSet shore;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) shore.push_back(g.vertices()[i]);
      }
      const Cut c = Cut::of(g, shore);
      ASSERT_EQ(is_separating_cut(g, c), separating_by_edge_criterion(g, c)) << testing_support::describe(g);
    }
  }
}

TEST(Cuts, SpliceExamples) {
  const MultiGraph c6bar = named_graph("C6bar");
  const Cut rungs = Cut::of(c6bar, vs({0, 1, 2}));
  EXPECT_TRUE(is_separating_cut(c6bar, rungs));
  EXPECT_FALSE(is_tight_cut(c6bar, rungs));

  const MultiGraph fig2b = named_graph("fig2b");
  const Cut b_cut = Cut::of(fig2b, vs({0, 1, 2}));
  EXPECT_TRUE(is_separating_cut(fig2b, b_cut));
  EXPECT_FALSE(is_tight_cut(fig2b, b_cut));

  const MultiGraph fig2c = named_graph("fig2c");
  const auto tight = all_nontrivial_tight_cuts(fig2c);
  ASSERT_EQ(tight.size(), 1u);
  EXPECT_EQ(tight[0].edges(fig2c).size(), 3u);
  EXPECT_EQ(classify(fig2c), Classification::Neither);
}

TEST(Cuts, Classification) {
  const char* bricks[] = {"K4", "C6bar", "prism5", "W5", "W7", "petersen", "fig2b", "K6"};
  const char* braces[] = {"K2", "C4", "K3,3", "K4,4", "prism4", "prism6"};
  for (const char* name : bricks) {
    EXPECT_EQ(classify(named_graph(name)), Classification::Brick) << name;
    EXPECT_TRUE(is_brick_fast(named_graph(name))) << name;
  }
  for (const char* name : braces) {
    EXPECT_EQ(classify(named_graph(name)), Classification::Brace) << name;
  }
  EXPECT_EQ(classify(named_graph("C8")), Classification::Neither);
  EXPECT_THROW(classify(named_graph("P4")), DomainError);
  EXPECT_TRUE(is_solid_brick(named_graph("K4")));
  EXPECT_TRUE(is_solid_brick(named_graph("W5")));
  EXPECT_FALSE(is_solid_brick(named_graph("petersen")));
  EXPECT_FALSE(is_solid_brick(named_graph("C6bar")));
  EXPECT_STREQ(to_string(Classification::Brace), "brace");
}

TEST(Cuts, FastTestsAgreeWithCutSearch) {
  const auto corpus = testing_support::mixed_corpus(65, 60, 40);
  for (const MultiGraph& g : corpus) {
    const bool no_tight = oracle::nontrivial_tight_shores(g).empty();
    const bool bipartite = is_bipartite(g).has_value();
    EXPECT_EQ(is_brick_fast(g), no_tight && !bipartite) << testing_support::describe(g);
    EXPECT_EQ(is_brace_fast(g), no_tight && bipartite) << testing_support::describe(g);
  }
}

TEST(Decomposition, CountsAndLeaves) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto d = tight_cut_decomposition(named_graph("C" + std::to_string(2 * k)));
    EXPECT_EQ(d.b, 0u);
    EXPECT_EQ(d.c4, k - 1);
    EXPECT_EQ(d.leaves.size(), k - 1);
  }
  const auto fig2c = tight_cut_decomposition(named_graph("fig2c"));
  EXPECT_EQ(fig2c.leaves.size(), 2u);
  EXPECT_EQ(fig2c.b, 1u);
  EXPECT_EQ(fig2c.nodes.size(), 3u);
  EXPECT_EQ(fig2c.nodes[0].parent, -1);
  EXPECT_TRUE(fig2c.nodes[0].cut.has_value());

  const auto brick = tight_cut_decomposition(named_graph("petersen"));
  ASSERT_EQ(brick.leaves.size(), 1u);
  EXPECT_EQ(brick.leaves[0].kind, LeafKind::Brick);
  EXPECT_EQ(brick.leaves[0].form, canonical_form(named_graph("petersen")));
}

TEST(Decomposition, LeafSizesAddUp) {
  const auto corpus = testing_support::mixed_corpus(66, 40, 30);
  for (const MultiGraph& g : corpus) {
    const auto d = tight_cut_decomposition(g);
    std::size_t total = 0;
    for (const auto& leaf : d.leaves) {
      total += leaf.graph.num_vertices();
      EXPECT_EQ(classify(leaf.graph), leaf.kind == LeafKind::Brick ? Classification::Brick : Classification::Brace);
    }
    // Each split adds two vertices in total.
    EXPECT_EQ(total, g.num_vertices() + 2 * (d.leaves.size() - 1)) << testing_support::describe(g);
    EXPECT_EQ(tight_cut_decomposition(g, default_chooser(), Execution::Parallel).leaf_forms(), d.leaf_forms());
  }
}

TEST(Decomposition, SeparatingLeavesAreSolidOrBraces) {
  const char* names[] = {"C6bar", "fig2b", "prism5", "C8"};
  for (const char* name : names) {
    const auto d = separating_cut_decomposition(named_graph(name));
    EXPECT_EQ(d.kind, CutKind::Separating);
    for (const auto& leaf : d.leaves) {
      if (leaf.kind == LeafKind::Brick) {
        EXPECT_TRUE(is_solid_brick(leaf.graph)) << name;
      }
    }
  }
}

TEST(Bounds, HoldOnCorpus) {
  const auto corpus = testing_support::mixed_corpus(67, 40, 30);
  for (const MultiGraph& g : corpus) {
    const BoundsReport r = verify_bounds(g);
    EXPECT_TRUE(r.all_hold()) << testing_support::describe(g);
    EXPECT_EQ(r.bipartite, r.bipartite_bound_holds.has_value());
    EXPECT_NE(r.bipartite, r.nonbipartite_bound_holds.has_value());
  }
  const BoundsReport c6 = verify_bounds(named_graph("C6"));
  EXPECT_TRUE(*c6.bipartite_bound_tight);
  EXPECT_EQ(c6.epsilon, 3u);
  EXPECT_EQ(c6.c4, 2u);
}
