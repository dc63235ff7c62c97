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

#include "matchcover/report.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "matchcover/cuts.hpp"
#include "matchcover/dependence.hpp"
#include "matchcover/error.hpp"
#include "matchcover/graph_io.hpp"
#include "matchcover/structure.hpp"

namespace matchcover {

namespace {

Json vertex_numbers(const MultiGraph& g, std::span<const VertexId> set) {
  std::vector<std::size_t> out;
  for (VertexId v : set) out.push_back(file_vertex_number(g, v));
  std::sort(out.begin(), out.end());
  return out;
}

Json edge_numbers(const MultiGraph& g, std::span<const EdgeId> set) {
  std::vector<std::size_t> out;
  for (EdgeId e : set) out.push_back(file_edge_number(g, e));
  std::sort(out.begin(), out.end());
  return out;
}

Json edge_families(const MultiGraph& g, const std::vector<EdgeSet>& sets) {
  std::vector<Json> out;
  for (const EdgeSet& s : sets) out.push_back(edge_numbers(g, s));
  std::sort(out.begin(), out.end());
  return out;
}

Json decomposition_json(const MultiGraph& g, const DecompositionResult& d) {
  Json nodes = Json::array();
  for (std::size_t k = 0; k < d.nodes.size(); ++k) {
    const DecompositionNode& n = d.nodes[k];
    Json node;
    node["id"] = k;
    node["parent"] = n.parent < 0 ? Json(nullptr) : Json(n.parent);
    node["order"] = n.graph.num_vertices();
    node["size"] = n.graph.num_edges();
    if (n.cut) {
      node["cut"] = {{"shoreOrder", n.cut->shore().size()}, {"edges", edge_numbers(g, n.cut->edges(n.graph))}};
      node["children"] = {n.first, n.second};
    } else {
      const DecompositionLeaf& leaf = d.leaves[static_cast<std::size_t>(n.leaf)];
      node["leaf"] = {{"kind", to_string(leaf.kind)},
                      {"c4", is_c4_up_to_multiplicity(leaf.graph)},
                      {"form", leaf.form.to_string()}};
    }
    nodes.push_back(std::move(node));
  }
  return nodes;
}

std::string not_covered_reason(const MultiGraph& g) {
  if (g.num_vertices() < 2) return "fewer than two vertices";
  if (!is_connected(g)) return "disconnected";
  if (g.num_vertices() % 2 != 0) return "odd order";
  if (!is_matchable(g)) return "no perfect matching";
  return "inadmissible edges";
}

}  // namespace

std::string fingerprint(const MultiGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_text(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return fmt::format("{:016x}", h);
}

Json oracle_check(const MultiGraph& g, std::size_t budget) {
  const auto pms = enumerate_pms(g, budget);
  Json out;
  out["perfectMatchings"] = pms.size();
  std::vector<std::string> mismatches;
  if (maximum_matching(g).size() * 2 == g.num_vertices() ? pms.empty() : !pms.empty()) {
    mismatches.push_back("matchability");
  }
  std::map<EdgeId, std::vector<std::size_t>> signature;
  for (EdgeId e : g.edge_ids()) signature[e];
  for (std::size_t k = 0; k < pms.size(); ++k) {
    for (EdgeId e : pms[k].edges) signature[e].push_back(k);
  }
  EdgeSet inadmissible;
  for (const auto& [e, sig] : signature) {
    if (sig.empty()) inadmissible.push_back(e);
  }
  if (inadmissible != inadmissible_edges(g)) mismatches.push_back("admissibility");
  if (is_matching_covered(g)) {
    std::map<std::vector<std::size_t>, EdgeSet> groups;
    for (const auto& [e, sig] : signature) groups[sig].push_back(e);
    std::vector<EdgeSet> classes;
    for (auto& [sig, cls] : groups) classes.push_back(cls);
    if (!(EquivalencePartition(classes) == equivalence_partition(g))) mismatches.push_back("equivalence classes");
  }
  out["agrees"] = mismatches.empty();
  out["mismatches"] = mismatches;
  return out;
}

Json analysis_report(const MultiGraph& g, const AnalysisOptions& options) {
  Json r;
  r["schema"] = kReportSchema;
  r["input"] = {{"vertices", g.num_vertices()}, {"edges", g.num_edges()}, {"fingerprint", fingerprint(g)}};
  const bool matchable = g.num_vertices() % 2 == 0 && is_matchable(g);
  const bool covered = is_matching_covered(g);
  const bool bipartite = is_bipartite(g).has_value();
  r["flags"] = {{"matchable", matchable}, {"matchingCovered", covered}, {"bipartite", bipartite}};
  if (!covered) {
    r["witness"] = {{"reason", not_covered_reason(g)},
                    {"inadmissibleEdges", matchable ? edge_numbers(g, inadmissible_edges(g)) : Json::array()}};
    if (options.oracle_check) r["oracleCheck"] = oracle_check(g, options.budget);
    return r;
  }

  std::vector<VertexSet> parts = canonical_partition(g).parts;
  Json partition = Json::array();
  {
    std::vector<Json> sorted;
    for (const VertexSet& p : parts) sorted.push_back(vertex_numbers(g, p));
    std::sort(sorted.begin(), sorted.end());
    partition = sorted;
  }
  r["canonicalPartition"] = partition;
  const EquivalencePartition classes = equivalence_partition(g);
  r["equivalenceClasses"] = edge_families(g, classes.classes());
  r["epsilon"] = classes.epsilon();
  r["removableEdges"] = edge_numbers(g, removable_edges(g));
  r["removableClasses"] = edge_families(g, removable_classes(g));
  Json cuts = Json::array();
  for (const Cut& c : even_2cuts(g)) {
    cuts.push_back({{"shore", vertex_numbers(g, c.shore())}, {"edges", edge_numbers(g, c.edges(g))}});
  }
  r["even2Cuts"] = cuts;
  const Classification kind = classify(g);
  r["classification"] = to_string(kind);
  if (kind == Classification::Brick && g.num_vertices() <= kExhaustiveCutLimit) {
    r["solid"] = is_solid_brick(g);
  } else {
    r["solid"] = nullptr;
  }
  r["kappa"] = vertex_connectivity(g);

  const DecompositionResult d = tight_cut_decomposition(g);
  r["b"] = d.b;
  r["c4"] = d.c4;
  const std::size_t eps = classes.epsilon();
  Json bounds;
  if (bipartite) {
    bounds["1 + c4"] = {{"holds", eps <= 1 + d.c4}, {"tight", eps == 1 + d.c4}};
  } else {
    bounds["2b + c4"] = {{"holds", eps <= 2 * d.b + d.c4}, {"tight", eps == 2 * d.b + d.c4}};
    if (cuts.empty()) bounds["2b"] = {{"holds", eps <= 2 * d.b}, {"tight", eps == 2 * d.b}};
  }
  r["bounds"] = bounds;
  if (options.decompose) r["decomposition"] = decomposition_json(g, d);
  if (options.oracle_check) r["oracleCheck"] = oracle_check(g, options.budget);
  return r;
}

Json trace_report(const ConstructionTrace& t, const TraceReport* verification) {
  Json r;
  r["schema"] = kReportSchema;
  r["p"] = t.p;
  r["q"] = t.q;
  r["h"] = {{"order", t.h.graph.num_vertices()},
            {"anchor", file_vertex_number(t.h.graph, t.h.anchor)},
            {"fingerprint", fingerprint(t.h.graph)}};
  r["scrambled"] = t.scrambled;
  r["G0"] = {{"file", "G0.g"},
             {"A0", vertex_numbers(t.g0, t.a0)},
             {"B0", vertex_numbers(t.g0, t.b0)},
             {"f0", file_edge_number(t.g0, t.f[0])},
             {"C", edge_families(t.g0, t.c)},
             {"Cstar", edge_numbers(t.g0, t.c_star)}};
  Json stages = Json::array();
  for (std::size_t i = 1; i < t.q; ++i) {
    const MultiGraph& ji = t.j[i - 1];
    const MultiGraph& gi = t.g[i];
    const std::string si = std::to_string(i);
    EdgeSet fi(t.f.begin(), t.f.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    stages.push_back({{"i", i},
                      {"J", {{"file", "J" + si + ".g"},
                             {"u", file_vertex_number(ji, t.u[i - 1])},
                             {"U", vertex_numbers(ji, t.u_parts[i - 1])},
                             {"V", vertex_numbers(ji, t.v_parts[i - 1])},
                             {"Cprime", edge_numbers(ji, t.c_prime[i - 1])},
                             {"f", file_edge_number(ji, t.f[i])}}},
                      {"G", {{"file", "G" + si + ".g"},
                             {"order", gi.num_vertices()},
                             {"D", edge_numbers(gi, t.d[i - 1].edges(gi))},
                             {"F", edge_numbers(gi, normalized(fi))}}}});
  }
  r["stages"] = stages;
  if (verification) {
    Json checks = Json::array();
    for (const TraceCheck& c : verification->checks) {
      checks.push_back({{"group", c.group}, {"claim", c.claim}, {"passed", c.passed}});
    }
    r["verification"] = {{"passed", verification->all_passed()},
                         {"kappa", verification->kappa},
                         {"epsilon", verification->epsilon},
                         {"checks", checks}};
  }
  return r;
}

std::string render_text(const Json& report) {
  std::string out;
  for (const auto& [key, value] : report.items()) {
    if (key == "decomposition") {
      out += "decomposition:\n";
      for (const Json& node : value) out += "  " + node.dump() + "\n";
      continue;
    }
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return out;
}

}  // namespace matchcover
