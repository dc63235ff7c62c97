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

// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchcover/canonical.hpp"
#include "matchcover/cuts.hpp"
#include "matchcover/dependence.hpp"
#include "matchcover/generators.hpp"
#include "matchcover/matching.hpp"
#include "matchcover/properties.hpp"
#include "matchcover/splicing.hpp"
#include "matchcover/structure.hpp"
#include "oracle.hpp"

using namespace matchcover;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// Corpus shared by criteria 3, 4 and 8: the named graphs plus random
// splices of up to 16 vertices.
std::vector<MultiGraph> acceptance_corpus() {
  std::vector<MultiGraph> out;
  for (const std::string& name : corpus_names()) out.push_back(named_graph(name));
  Rng rng(2026);
  const std::vector<MultiGraph> pool = out;
  std::size_t added = 0;
  while (added < 20) {
    if (auto s = random_splice(rng, pool, 16)) {
      out.push_back(std::move(*s));
      ++added;
    }
  }
  RandomGraphOptions sparse;
  sparse.min_vertices = 6;
  sparse.max_vertices = 12;
  sparse.density = 0.3;
  for (int k = 0; k < 10; ++k) out.push_back(random_matching_covered(rng, sparse));
  return out;
}

// Classes from perfect matchings: edges are equivalent when they lie in
// exactly the same perfect matchings.
std::vector<EdgeSet> classes_from_pms(const MultiGraph& g, const std::vector<PerfectMatching>& pms) {
  std::map<std::vector<bool>, EdgeSet> by_signature;
  for (const Edge& e : g.edges()) {
    std::vector<bool> sig;
    for (const auto& pm : pms) sig.push_back(pm.contains(e.id));
    by_signature[sig].push_back(e.id);
  }
  std::vector<EdgeSet> out;
  for (auto& [sig, cls] : by_signature) out.push_back(cls);
  std::sort(out.begin(), out.end());
  return out;
}

// e → f over a fixed list of perfect matchings.
class PmTable {
 public:
  explicit PmTable(const MultiGraph& g) : pms_(enumerate_pms(g)) {}
  bool depends(EdgeId e, EdgeId f) const {
    return std::all_of(pms_.begin(), pms_.end(), [&](const PerfectMatching& m) { return !m.contains(e) || m.contains(f); });
  }
  EdgeSet support(EdgeId f, const EdgeSet& cut) const {
    EdgeSet out;
    for (EdgeId e : cut) {
      if (std::any_of(pms_.begin(), pms_.end(), [&](const PerfectMatching& m) { return m.contains(e) && m.contains(f); }))
        out.push_back(e);
    }
    return out;
  }
  const std::vector<PerfectMatching>& pms() const { return pms_; }

 private:
  std::vector<PerfectMatching> pms_;
};

Outcome cycles() {
  for (std::size_t n = 2; n <= 6; ++n) {
    const MultiGraph g = named_graph("C" + std::to_string(2 * n));
    const BoundsReport r = verify_bounds(g);
    if (r.epsilon != n || r.b != 0 || r.c4 != n - 1) {
      return fail("C" + std::to_string(2 * n) + ": epsilon " + std::to_string(r.epsilon) + ", b " +
                  std::to_string(r.b) + ", c4 " + std::to_string(r.c4));
    }
    if (!r.bipartite_bound_holds.value_or(false) || !r.bipartite_bound_tight.value_or(false)) {
      return fail("C" + std::to_string(2 * n) + ": bound 1 + c4 not attained");
    }
  }
  return {true, "C4..C12"};
}

Outcome splice_examples() {
  const MultiGraph k4 = named_graph("K4");
  const MultiGraph c6bar = named_graph("C6bar");
  const SpliceResult s = splice({k4, VertexId{0}, k4, VertexId{0}, ordered_bijection(k4, VertexId{0}, k4, VertexId{0})});
  if (canonical_form(s.graph) != canonical_form(c6bar)) return fail("splice(K4, K4) is not C6bar");

  std::map<std::size_t, std::size_t> sizes;
  const EquivalencePartition classes = equivalence_partition(c6bar);
  for (const EdgeSet& cls : classes.classes()) ++sizes[cls.size()];
  if (sizes != std::map<std::size_t, std::size_t>{{1, 3}, {2, 3}}) return fail("C6bar classes are not 3 + 3");

  const Cut a_cut = Cut::of(c6bar, {VertexId{0}, VertexId{1}, VertexId{2}});
  if (!is_separating_cut(c6bar, a_cut) || is_tight_cut(c6bar, a_cut)) return fail("C6bar cut");
  const MultiGraph fig2b = named_graph("fig2b");
  const Cut b_cut = Cut::of(fig2b, {VertexId{0}, VertexId{1}, VertexId{2}});
  if (!is_separating_cut(fig2b, b_cut) || is_tight_cut(fig2b, b_cut)) return fail("fig2b cut");
  const MultiGraph fig2c = named_graph("fig2c");
  if (!is_tight_cut(fig2c, Cut::of(fig2c, {VertexId{5}, VertexId{6}, VertexId{7}}))) return fail("fig2c cut");
  if (removable_edges(fig2b).size() != 1) return fail("fig2b removable edges");
  return {true, "C6bar, fig2b, fig2c"};
}

Outcome corpus_suite(const std::vector<MultiGraph>& corpus, PropertySuite suite, std::size_t minimum) {
  if (corpus.size() < minimum) return fail("corpus too small");
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const PropertyResult r = run_suite(suite, corpus[k], k);
    if (!r.applicable || !r.passed) return fail("graph " + std::to_string(k) + ": " + r.detail);
  }
  return {true, std::to_string(corpus.size()) + " graphs"};
}

Outcome construction() {
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
    const ConstructionTrace t = build_high_kappa_epsilon(p, q);
    const TraceReport r = verify_trace(t);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    for (const TraceCheck& c : r.checks) {
      if (!c.passed) return fail(tag + " " + c.group + ": " + c.claim);
    }
    const MultiGraph& g = t.final_graph();
    if (vertex_connectivity(g) < p) return fail(tag + " connectivity");
    const EdgeSet f = normalized(EdgeSet(t.f.begin(), t.f.end()));
    const EquivalencePartition partition = equivalence_partition(g);
    if (!partition.is_class(f) || partition.epsilon() < q) return fail(tag + " class of the f edges");
  }
  return {true, "(2,2) (2,3) (3,3)"};
}

Outcome oracle_equivalence() {
  Rng rng(6);
  RandomGraphOptions options;
  options.max_vertices = 12;
  std::size_t covered = 0;
  std::size_t cuts = 0;
  for (int k = 0; k < 500; ++k) {
    const MultiGraph g = k % 2 == 0 ? random_graph(rng, options) : random_matching_covered(rng, options);
    if (maximum_matching(g).size() != oracle::max_matching_size(g)) return fail("maximum matching, graph " + std::to_string(k));
    if (!is_matching_covered(g)) continue;
    ++covered;
    const auto pms = enumerate_pms(g);
    if (equivalence_partition(g).classes() != classes_from_pms(g, pms)) return fail("classes, graph " + std::to_string(k));
    const std::size_t n = g.num_vertices();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const int size = std::popcount(mask);
      if (size % 2 == 0 || size > 5 || static_cast<std::size_t>(size) == n) continue;
      VertexSet shore;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) shore.push_back(g.vertices()[i]);
      }
      const Cut c = Cut::of(g, shore);
      const EdgeSet cut = c.edges(g);
      const bool direct = std::all_of(pms.begin(), pms.end(), [&](const PerfectMatching& m) {
        return std::count_if(cut.begin(), cut.end(), [&](EdgeId e) { return m.contains(e); }) == 1;
      });
      ++cuts;
      if (is_tight_cut(g, c) != direct) return fail("tight cut, graph " + std::to_string(k));
    }
  }
  return {true, "500 graphs, " + std::to_string(covered) + " matching covered, " + std::to_string(cuts) + " cuts"};
}

struct MergeTally {
  std::size_t pairs = 0;
  std::size_t merges = 0;
};

// Checks one tight cut c of g edge-wise against perfect matchings of g and
// of both contractions.
std::optional<std::string> merging_instance(const MultiGraph& g, const Cut& c, MergeTally& tally) {
  const EdgeSet cut = c.edges(g);
  if (!is_tight_cut(g, c)) return "cut is not tight";

  const PmTable tg(g);
  const auto [first, second] = cut_contractions(g, c);
  const PmTable t1(first.graph);
  const PmTable t2(second.graph);
  const MultiGraph* sides[] = {&first.graph, &second.graph};
  const PmTable* tables[] = {&t1, &t2};

  // Dependence between edges of one contraction is dependence in g.
  for (int i = 0; i < 2; ++i) {
    for (const Edge& e : sides[i]->edges()) {
      for (const Edge& f : sides[i]->edges()) {
        if (tables[i]->depends(e.id, f.id) != tg.depends(e.id, f.id)) return std::string("inherited dependence");
      }
    }
  }

  // Across the cut: f1 → f2 iff every cut edge sharing a perfect matching
  // of G1 with f1 depends on f2 in G2, and symmetrically.
  EdgeSet inner1, inner2;
  for (const Edge& e : first.graph.edges()) {
    if (!contains(cut, e.id)) inner1.push_back(e.id);
  }
  for (const Edge& e : second.graph.edges()) {
    if (!contains(cut, e.id)) inner2.push_back(e.id);
  }
  for (EdgeId f1 : inner1) {
    const EdgeSet c1 = t1.support(f1, cut);
    if (cross_support(g, c, Side::First, {f1}).support != c1) return std::string("cross support");
    for (EdgeId f2 : inner2) {
      const EdgeSet c2 = t2.support(f2, cut);
      const bool forward = std::all_of(c1.begin(), c1.end(), [&](EdgeId e) { return t2.depends(e, f2); });
      const bool backward = std::all_of(c2.begin(), c2.end(), [&](EdgeId e) { return t1.depends(e, f1); });
      if (forward != tg.depends(f1, f2) || backward != tg.depends(f2, f1)) return std::string("cross-cut dependence");
      const bool mutual = c1 == c2 && forward && backward;
      if (mutual != (tg.depends(f1, f2) && tg.depends(f2, f1))) return std::string("mutual dependence");
    }
  }

  // Class merging against classes computed directly on g.
  const auto direct = classes_from_pms(g, tg.pms());
  auto avoids = [&](const EdgeSet& cls) {
    return std::none_of(cls.begin(), cls.end(), [&](EdgeId e) { return contains(cut, e); });
  };
  for (const EdgeSet& f1 : classes_from_pms(first.graph, t1.pms())) {
    if (!avoids(f1)) continue;
    for (const EdgeSet& f2 : classes_from_pms(second.graph, t2.pms())) {
      if (!avoids(f2)) continue;
      EdgeSet merged = f1;
      merged.insert(merged.end(), f2.begin(), f2.end());
      const bool expected = std::binary_search(direct.begin(), direct.end(), normalized(merged));
      ++tally.pairs;
      tally.merges += expected;
      if (check_merge(g, c, f1, f2) != expected) return std::string("class merge");
    }
  }
  return std::nullopt;
}

Outcome merging() {
  Rng rng(7);
  std::vector<MultiGraph> bipartite;
  std::vector<MultiGraph> others;
  for (const std::string& name : corpus_names()) {
    MultiGraph g = named_graph(name);
    if (g.num_vertices() > 10) continue;
    (is_bipartite(g) ? bipartite : others).push_back(g);
  }
  RandomGraphOptions sparse;
  sparse.min_vertices = 4;
  sparse.max_vertices = 8;
  sparse.density = 0.35;
  while (bipartite.size() < 14) {
    MultiGraph g = random_matching_covered(rng, sparse);
    if (is_bipartite(g)) bipartite.push_back(g);
  }
  for (int k = 0; k < 6; ++k) others.push_back(random_matching_covered(rng, sparse));
  std::vector<MultiGraph> partners = bipartite;
  partners.insert(partners.end(), others.begin(), others.end());

  MergeTally tally;
  std::size_t instances = 0;
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    for (bool scramble : {false, true}) {
      const ConstructionTrace t = build_high_kappa_epsilon(p, q, std::nullopt, BuildOptions{.scramble_pi = scramble});
      for (std::size_t i = 1; i < q; ++i) {
        if (auto problem = merging_instance(t.g[i], t.d[i - 1], tally)) return fail(*problem + " in construction stage");
        ++instances;
      }
    }
  }
  for (int attempt = 0; attempt < 5000 && instances < 80; ++attempt) {
    const MultiGraph& g1 = bipartite[std::uniform_int_distribution<std::size_t>(0, bipartite.size() - 1)(rng)];
    const MultiGraph& g2 = partners[std::uniform_int_distribution<std::size_t>(0, partners.size() - 1)(rng)];
    if (g1.num_vertices() + g2.num_vertices() - 2 > 16 || g1.num_vertices() < 4) continue;
    const VertexId v1 = g1.vertices()[std::uniform_int_distribution<std::size_t>(0, g1.num_vertices() - 1)(rng)];
    std::vector<VertexId> same;
    for (VertexId v : g2.vertices()) {
      if (g2.degree(v) == g1.degree(v1)) same.push_back(v);
    }
    if (same.empty()) continue;
    const VertexId v2 = same[std::uniform_int_distribution<std::size_t>(0, same.size() - 1)(rng)];
    EdgeSet s2 = g2.incident_edges(v2);
    std::shuffle(s2.begin(), s2.end(), rng);
    SpliceSpec spec{g1, v1, g2, v2, {}};
    const EdgeSet s1 = g1.incident_edges(v1);
    for (std::size_t i = 0; i < s1.size(); ++i) spec.pi.emplace(s1[i], s2[i]);
    const SpliceResult s = splice(spec);
    if (!is_tight_cut(s.graph, s.cut)) return fail("bipartite splice is not tight");
    if (auto problem = merging_instance(s.graph, s.cut, tally)) return fail(*problem + " in random instance");
    ++instances;
  }
  if (instances < 50) return fail("only " + std::to_string(instances) + " instances");
  return {true, std::to_string(instances) + " instances, " + std::to_string(tally.pairs) + " class pairs, " +
                    std::to_string(tally.merges) + " merges"};
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  std::vector<MultiGraph> corpus;
  const std::vector<Criterion> criteria{
      {"1 cycle family", 1, cycles},
      {"2 C6bar and splice examples", 1, splice_examples},
      {"3 decomposition uniqueness", 60,
       [&] {
         corpus = acceptance_corpus();
         return corpus_suite(corpus, PropertySuite::Uniqueness, 25);
       }},
      {"4 bounds", 60, [&] { return corpus_suite(corpus, PropertySuite::Bounds, 25); }},
      {"5 construction", 600, construction},
      {"6 oracle equivalence", 300, oracle_equivalence},
      {"7 class merging across tight splices", 300, merging},
      {"8 structural properties", 300, [&] { return corpus_suite(corpus, PropertySuite::Structure, 25); }},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.passed && seconds > c.limit_seconds) o = fail("over the " + std::to_string(c.limit_seconds) + " s limit");
    all = all && o.passed;
    std::printf("%s criterion %s (%.2f s): %s\n", o.passed ? "PASS" : "FAIL", c.name, seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
