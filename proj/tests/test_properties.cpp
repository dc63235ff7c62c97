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

#include "matchcover/generators.hpp"
#include "matchcover/properties.hpp"
#include "support.hpp"

using namespace matchcover;

TEST(Properties, SuiteNames) {
  for (PropertySuite s : {PropertySuite::Bounds, PropertySuite::Uniqueness, PropertySuite::Merging,
                          PropertySuite::Structure}) {
    EXPECT_EQ(parse_suite(to_string(s)), s);
  }
  EXPECT_FALSE(parse_suite("Bounds").has_value());
  EXPECT_FALSE(parse_suite("").has_value());
}

TEST(Properties, AllSuitesPassOnMixedCorpus) {
  const auto corpus = testing_support::mixed_corpus(91, 15, 15);
  for (const MultiGraph& g : corpus) {
    for (PropertySuite s : {PropertySuite::Bounds, PropertySuite::Uniqueness, PropertySuite::Merging,
                            PropertySuite::Structure}) {
      const PropertyResult r = run_suite(s, g, 3);
      EXPECT_TRUE(r.applicable);
      EXPECT_TRUE(r.passed) << to_string(s) << ": " << r.detail << " on " << testing_support::describe(g);
    }
  }
}

TEST(Properties, NotApplicableOutsideScope) {
  const MultiGraph p4 = named_graph("P4");
  for (PropertySuite s : {PropertySuite::Bounds, PropertySuite::Uniqueness, PropertySuite::Merging,
                          PropertySuite::Structure}) {
    EXPECT_FALSE(run_suite(s, p4).applicable) << to_string(s);
  }
}

TEST(Properties, ConstructedGraphPasses) {
  const MultiGraph g = build_high_kappa_epsilon(2, 2).final_graph();
  EXPECT_TRUE(check_bounds(g).passed);
  EXPECT_TRUE(check_uniqueness(g).passed);
  EXPECT_TRUE(check_merging(g).passed) << check_merging(g).detail;
  EXPECT_TRUE(check_structure(g).passed) << check_structure(g).detail;
}
