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
#include "matchcover/report.hpp"

using namespace matchcover;

TEST(Report, CycleSummary) {
  const Json r = analysis_report(named_graph("C6"));
  EXPECT_EQ(r["schema"], kReportSchema);
  EXPECT_EQ(r["input"]["vertices"], 6);
  EXPECT_EQ(r["flags"]["matchingCovered"], true);
  EXPECT_EQ(r["flags"]["bipartite"], true);
  EXPECT_EQ(r["epsilon"], 3);
  EXPECT_EQ(r["c4"], 2);
  EXPECT_EQ(r["b"], 0);
  EXPECT_EQ(r["classification"], "neither");
  EXPECT_EQ(r["even2Cuts"].size(), 6u);
  EXPECT_EQ(r["bounds"]["1 + c4"]["tight"], true);
  EXPECT_FALSE(r.contains("decomposition"));
  EXPECT_FALSE(r.contains("witness"));
}

TEST(Report, KeysInOrder) {
  const Json r = analysis_report(named_graph("C6bar"), {.decompose = true, .oracle_check = true});
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  const std::vector<std::string> expected{"schema",          "input",       "flags",   "canonicalPartition",
                                          "equivalenceClasses", "epsilon",  "removableEdges", "removableClasses",
                                          "even2Cuts",       "classification", "solid", "kappa",
                                          "b",               "c4",          "bounds",  "decomposition",
                                          "oracleCheck"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(r["solid"], false);
  EXPECT_EQ(r["oracleCheck"]["perfectMatchings"], 4);
  EXPECT_EQ(r["oracleCheck"]["agrees"], true);
  EXPECT_EQ(r["decomposition"].size(), 1u);
  EXPECT_EQ(r["decomposition"][0]["leaf"]["kind"], "brick");
  EXPECT_TRUE(r["decomposition"][0]["parent"].is_null());
}

TEST(Report, NotCoveredGetsWitness) {
  const Json r = analysis_report(named_graph("P4"));
  EXPECT_EQ(r["flags"]["matchingCovered"], false);
  EXPECT_EQ(r["witness"]["reason"], "inadmissible edges");
  EXPECT_EQ(r["witness"]["inadmissibleEdges"], Json::array({2}));
  EXPECT_FALSE(r.contains("epsilon"));
  EXPECT_EQ(analysis_report(named_graph("P3"))["witness"]["reason"], "odd order");
}

TEST(Report, Deterministic) {
  for (const std::string& name : corpus_names()) {
    const MultiGraph g = named_graph(name);
    const AnalysisOptions options{.decompose = true, .oracle_check = false};
    EXPECT_EQ(analysis_report(g, options).dump(), analysis_report(g, options).dump()) << name;
  }
  EXPECT_EQ(fingerprint(named_graph("K4")).size(), 16u);
  EXPECT_NE(fingerprint(named_graph("K4")), fingerprint(named_graph("C4")));
}

TEST(Report, TraceAndText) {
  const ConstructionTrace t = build_high_kappa_epsilon(2, 2);
  const TraceReport v = verify_trace(t);
  const Json r = trace_report(t, &v);
  EXPECT_EQ(r["p"], 2);
  EXPECT_EQ(r["G0"]["file"], "G0.g");
  EXPECT_EQ(r["stages"].size(), 1u);
  EXPECT_EQ(r["stages"][0]["G"]["order"], 16);
  const std::string text = render_text(analysis_report(named_graph("K4")));
  EXPECT_NE(text.find("epsilon: 2"), std::string::npos);
}
