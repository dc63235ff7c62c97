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

#include "matchcover/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "matchcover/cuts.hpp"
#include "matchcover/dependence.hpp"
#include "matchcover/error.hpp"
#include "matchcover/matching.hpp"
#include "matchcover/splicing.hpp"
#include "matchcover/structure.hpp"

namespace matchcover {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::optional<std::size_t> number(std::string_view s) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

[[noreturn]] void unknown(std::string_view name) {
  throw DomainError("unknown graph name '" + std::string(name) + "'");
}

MultiGraph cycle(std::size_t n) {
  GraphBuilder b;
  const auto v = b.add_vertices(n);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(v[i], v[(i + 1) % n]);
  return b.build();
}

MultiGraph complete(std::size_t n) {
  GraphBuilder b;
  const auto v = b.add_vertices(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) b.add_edge(v[i], v[k]);
  }
  return b.build();
}

MultiGraph complete_bipartite(std::size_t m, std::size_t n) {
  GraphBuilder b;
  const auto left = b.add_vertices(m);
  const auto right = b.add_vertices(n);
  for (VertexId x : left) {
    for (VertexId y : right) b.add_edge(x, y);
  }
  return b.build();
}

MultiGraph prism(std::size_t n) {
  GraphBuilder b;
  const auto top = b.add_vertices(n);
  const auto bottom = b.add_vertices(n);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(top[i], top[(i + 1) % n]);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(bottom[i], bottom[(i + 1) % n]);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(top[i], bottom[i]);
  return b.build();
}

MultiGraph wheel(std::size_t n) {
  GraphBuilder b;
  const VertexId hub = b.add_vertex("hub");
  const auto rim = b.add_vertices(n);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(rim[i], rim[(i + 1) % n]);
  for (VertexId r : rim) b.add_edge(hub, r);
  return b.build();
}

MultiGraph petersen() {
  GraphBuilder b;
  const auto outer = b.add_vertices(5);
  const auto inner = b.add_vertices(5);
  for (std::size_t i = 0; i < 5; ++i) b.add_edge(outer[i], outer[(i + 1) % 5]);
  for (std::size_t i = 0; i < 5; ++i) b.add_edge(outer[i], inner[i]);
  for (std::size_t i = 0; i < 5; ++i) b.add_edge(inner[i], inner[(i + 2) % 5]);
  return b.build();
}

MultiGraph path(std::size_t n) {
  GraphBuilder b;
  const auto v = b.add_vertices(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(v[i], v[i + 1]);
  return b.build();
}

// Triangular prism: triangles t0 tL tR and b0 bL bR joined by three rungs.
MultiGraph c6bar() {
  GraphBuilder b;
  const VertexId t0 = b.add_vertex("t0"), tl = b.add_vertex("tL"), tr = b.add_vertex("tR");
  const VertexId b0 = b.add_vertex("b0"), bl = b.add_vertex("bL"), br = b.add_vertex("bR");
  b.add_edge(t0, tl, "f2");
  b.add_edge(t0, tr, "g2");
  b.add_edge(tl, tr, "e2");
  b.add_edge(b0, bl, "f1");
  b.add_edge(b0, br, "g1");
  b.add_edge(bl, br, "e1");
  b.add_edge(t0, b0);
  b.add_edge(tl, bl);
  b.add_edge(tr, br);
  return b.build();
}

// C6bar with two rungs subdivided (x, y) and the new vertices joined.
MultiGraph fig2b() {
  GraphBuilder b;
  const VertexId t0 = b.add_vertex("t0"), tl = b.add_vertex("tL"), tr = b.add_vertex("tR");
  const VertexId b0 = b.add_vertex("b0"), bl = b.add_vertex("bL"), br = b.add_vertex("bR");
  const VertexId x = b.add_vertex("x"), y = b.add_vertex("y");
  b.add_edge(t0, tl);
  b.add_edge(t0, tr, "e2");
  b.add_edge(tl, tr, "f2");
  b.add_edge(b0, bl);
  b.add_edge(b0, br, "f1");
  b.add_edge(bl, br, "e1");
  b.add_edge(t0, x);
  b.add_edge(x, b0);
  b.add_edge(tl, y);
  b.add_edge(y, bl);
  b.add_edge(x, y);
  b.add_edge(tr, br);
  return b.build();
}

// K_{2,3} on {P, Q} and {L, M, R}, each of L M R joined to a bottom triangle.
MultiGraph fig2c() {
  GraphBuilder b;
  const VertexId p = b.add_vertex("P"), q = b.add_vertex("Q");
  const VertexId l = b.add_vertex("L"), m = b.add_vertex("M"), r = b.add_vertex("R");
  const VertexId b0 = b.add_vertex("b0"), bl = b.add_vertex("bL"), br = b.add_vertex("bR");
  for (VertexId top : {p, q}) {
    for (VertexId mid : {l, m, r}) b.add_edge(top, mid);
  }
  b.add_edge(m, b0, "e2");
  b.add_edge(l, bl, "g2");
  b.add_edge(r, br, "f2");
  b.add_edge(b0, bl, "f1");
  b.add_edge(b0, br, "g1");
  b.add_edge(bl, br, "e1");
  return b.build();
}

}  // namespace

NamedGraphId NamedGraphId::parse(std::string_view name) {
  const std::string s = lower(name);
  if (s == "c6bar") return {NamedFamily::C6bar};
  if (s == "petersen") return {NamedFamily::Petersen};
  if (s == "fig2b") return {NamedFamily::Fig2b};
  if (s == "fig2c") return {NamedFamily::Fig2c};
  if (s.starts_with("prism")) {
    if (auto n = number(std::string_view(s).substr(5)); n && *n >= 3) return {NamedFamily::Prism, *n};
    unknown(name);
  }
  if (s.empty()) unknown(name);
  const std::string_view rest = std::string_view(s).substr(1);
  switch (s.front()) {
    case 'k': {
      if (const auto comma = rest.find(','); comma != std::string_view::npos) {
        auto m = number(rest.substr(0, comma));
        auto n = number(rest.substr(comma + 1));
        if (m && n && *m >= 1 && *n >= 1) return {NamedFamily::CompleteBipartite, *m, *n};
        unknown(name);
      }
      if (auto n = number(rest); n && *n >= 1) return {NamedFamily::Complete, *n};
      break;
    }
    case 'c':
      if (auto n = number(rest); n && *n >= 2 && *n % 2 == 0) return {NamedFamily::Cycle, *n};
      break;
    case 'w':
      if (auto n = number(rest); n && *n >= 3) return {NamedFamily::Wheel, *n};
      break;
    case 'p':
      if (auto n = number(rest); n && *n >= 1) return {NamedFamily::Path, *n};
      break;
    default:
      break;
  }
  unknown(name);
}

std::string NamedGraphId::to_string() const {
  switch (family) {
    case NamedFamily::Complete:
      return "K" + std::to_string(a);
    case NamedFamily::Cycle:
      return "C" + std::to_string(a);
    case NamedFamily::CompleteBipartite:
      return "K" + std::to_string(a) + "," + std::to_string(b);
    case NamedFamily::C6bar:
      return "C6bar";
    case NamedFamily::Prism:
      return "prism" + std::to_string(a);
    case NamedFamily::Wheel:
      return "W" + std::to_string(a);
    case NamedFamily::Petersen:
      return "petersen";
    case NamedFamily::Fig2b:
      return "fig2b";
    case NamedFamily::Fig2c:
      return "fig2c";
    case NamedFamily::Path:
      return "P" + std::to_string(a);
  }
  return {};
}

MultiGraph named_graph(const NamedGraphId& id) {
  switch (id.family) {
    case NamedFamily::Complete:
      return complete(id.a);
    case NamedFamily::Cycle:
      return cycle(id.a);
    case NamedFamily::CompleteBipartite:
      return complete_bipartite(id.a, id.b);
    case NamedFamily::C6bar:
      return c6bar();
    case NamedFamily::Prism:
      return prism(id.a);
    case NamedFamily::Wheel:
      return wheel(id.a);
    case NamedFamily::Petersen:
      return petersen();
    case NamedFamily::Fig2b:
      return fig2b();
    case NamedFamily::Fig2c:
      return fig2c();
    case NamedFamily::Path:
      return path(id.a);
  }
  throw DomainError("unknown graph family");
}

MultiGraph named_graph(std::string_view name) { return named_graph(NamedGraphId::parse(name)); }

std::vector<std::string> corpus_names() {
  return {"K2",   "K4",     "C4",     "C6",     "C8",   "C10",      "C12",   "K3,3",  "K4,4",
          "C6bar", "prism4", "prism5", "prism6", "W5",   "W7",       "petersen", "fig2b", "fig2c", "K6"};
}

MultiGraph random_graph(Rng& rng, const RandomGraphOptions& options) {
  const std::size_t lo = std::max<std::size_t>(2, options.min_vertices + options.min_vertices % 2);
  const std::size_t hi = std::max(lo, options.max_vertices - options.max_vertices % 2);
  std::uniform_int_distribution<std::size_t> half(lo / 2, hi / 2);
  const std::size_t n = 2 * half(rng);
  std::bernoulli_distribution adjacent(options.density);
  std::bernoulli_distribution twin(options.parallel);

  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    used[parent][v] = used[v][parent] = 1;
    pairs.emplace_back(parent, v);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!used[x][y] && adjacent(rng)) pairs.emplace_back(x, y);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  GraphBuilder b;
  const auto v = b.add_vertices(n);
  for (const auto& [x, y] : pairs) {
    b.add_edge(v[x], v[y]);
    if (twin(rng)) b.add_edge(v[x], v[y]);
  }
  return b.build();
}

MultiGraph random_matching_covered(Rng& rng, const RandomGraphOptions& options) {
  for (;;) {
    MultiGraph g = random_graph(rng, options);
    if (is_matching_covered(g)) return g;
  }
}

MultiGraph with_parallel_edges(const MultiGraph& g, Rng& rng, std::size_t count) {
  if (g.num_edges() == 0) return g;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::uniform_int_distribution<std::size_t> pick(0, g.num_edges() - 1);
  std::uint32_t next = raw(g.next_edge_id());
  for (std::size_t i = 0; i < count; ++i) {
    const Edge& e = g.edges()[pick(rng)];
    edges.push_back({EdgeId{next++}, e.u, e.v});
  }
  return MultiGraph(g.vertex_set(), std::move(edges), g.labels());
}

MultiGraph shuffled(const MultiGraph& g, Rng& rng) {
  std::vector<VertexId> vperm(g.vertices().begin(), g.vertices().end());
  std::vector<EdgeId> eperm = g.edge_ids();
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::shuffle(eperm.begin(), eperm.end(), rng);
  std::map<VertexId, VertexId> vmap;
  for (std::size_t i = 0; i < vperm.size(); ++i) vmap.emplace(g.vertices()[i], vperm[i]);
  std::vector<Edge> edges;
  Labels labels;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    edges.push_back({eperm[i], vmap.at(e.u), vmap.at(e.v)});
    if (const auto* l = g.edge_label(e.id)) labels.edge[eperm[i]] = *l;
  }
  for (VertexId v : g.vertices()) {
    if (const auto* l = g.vertex_label(v)) labels.vertex[vmap.at(v)] = *l;
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  return MultiGraph(g.vertex_set(), std::move(edges), std::move(labels));
}

std::optional<MultiGraph> random_splice(Rng& rng, std::span<const MultiGraph> pool, std::size_t max_vertices) {
  if (pool.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const MultiGraph& g1 = pool[pick(rng)];
    const MultiGraph& g2 = pool[pick(rng)];
    if (g1.num_vertices() + g2.num_vertices() - 2 > max_vertices) continue;
    if (g1.num_vertices() < 2 || g2.num_vertices() < 2) continue;
    const VertexId v1 = g1.vertices()[std::uniform_int_distribution<std::size_t>(0, g1.num_vertices() - 1)(rng)];
    std::vector<VertexId> matches;
    for (VertexId v : g2.vertices()) {
      if (g2.degree(v) == g1.degree(v1)) matches.push_back(v);
    }
    if (matches.empty()) continue;
    const VertexId v2 = matches[std::uniform_int_distribution<std::size_t>(0, matches.size() - 1)(rng)];
    const EdgeSet s1 = g1.incident_edges(v1);
    EdgeSet s2 = g2.incident_edges(v2);
    std::shuffle(s2.begin(), s2.end(), rng);
    SpliceSpec spec{g1, v1, g2, v2, {}};
    for (std::size_t i = 0; i < s1.size(); ++i) spec.pi.emplace(s1[i], s2[i]);
    return splice(spec).graph;
  }
  return std::nullopt;
}

std::size_t ConstructionTrace::expected_order() const {
  return (2 * q - 1) * h.graph.num_vertices() - 2 * (q - 1);
}

namespace {

struct PlacedCopy {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  VertexId anchor{};
};

// Copies H into the builder; `a` lists the anchor's colour class in H's
// vertex order.
PlacedCopy place_copy(GraphBuilder& builder, const AnchoredBrace& h, const Bipartition& parts) {
  std::map<VertexId, VertexId> image;
  for (VertexId v : h.graph.vertices()) image.emplace(v, builder.add_vertex());
  for (const Edge& e : h.graph.edges()) builder.add_edge(image.at(e.u), image.at(e.v));
  PlacedCopy out;
  for (VertexId v : parts.a) out.a.push_back(image.at(v));
  for (VertexId v : parts.b) out.b.push_back(image.at(v));
  out.anchor = image.at(h.anchor);
  return out;
}

EdgeId add_simple_edge(GraphBuilder& builder, VertexId u, VertexId v, std::string label = {}) {
  if (builder.adjacent(u, v)) throw InternalError("construction would create a parallel edge");
  return builder.add_edge(u, v, std::move(label));
}

EdgeSet minus(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ConstructionTrace build_high_kappa_epsilon(std::size_t p, std::size_t q, const std::optional<AnchoredBrace>& h,
                                           BuildOptions options) {
  if (p < 2 || q < 2) throw DomainError("construction needs p >= 2 and q >= 2");
  ConstructionTrace t;
  t.p = p;
  t.q = q;
  t.scrambled = options.scramble_pi;
  if (h) {
    t.h = *h;
    const MultiGraph& hg = h->graph;
    if (!hg.has_vertex(h->anchor)) throw DomainError("anchor is not a vertex of H");
    if (!hg.is_simple()) throw DomainError("H must be simple");
    if (!is_bipartite(hg) || !is_matching_covered(hg) || classify(hg) != Classification::Brace) {
      throw DomainError("H must be a brace");
    }
    if (vertex_connectivity(hg) < p + 1) throw DomainError("H must be (p+1)-connected");
  } else {
    const MultiGraph k = named_graph(NamedGraphId{NamedFamily::CompleteBipartite, p + 1, p + 1});
    t.h = {k, k.vertices().front()};
  }
  Bipartition parts = *is_bipartite(t.h.graph);
  if (!contains(parts.a, t.h.anchor)) std::swap(parts.a, parts.b);

  GraphBuilder builder;
  std::vector<PlacedCopy> copies;
  for (std::size_t i = 0; i < q; ++i) copies.push_back(place_copy(builder, t.h, parts));
  for (std::size_t i = 0; i + 1 < q; ++i) {
    EdgeSet ci;
    for (std::size_t k = 0; k < p; ++k) ci.push_back(add_simple_edge(builder, copies[i].anchor, copies[i + 1].b[k]));
    t.c.push_back(ci);
    t.c_star.insert(t.c_star.end(), ci.begin(), ci.end());
  }
  t.f.push_back(add_simple_edge(builder, copies[q - 1].anchor, copies[0].b[0], "f0"));
  t.g0 = builder.build();
  t.c_star = normalized(t.c_star);
  for (const PlacedCopy& copy : copies) {
    t.a_parts.push_back(normalized(copy.a));
    t.b_parts.push_back(normalized(copy.b));
    t.a.push_back(copy.anchor);
    t.a0.insert(t.a0.end(), copy.a.begin(), copy.a.end());
    t.b0.insert(t.b0.end(), copy.b.begin(), copy.b.end());
  }
  t.a0 = normalized(t.a0);
  t.b0 = normalized(t.b0);
  t.g.push_back(t.g0);

  for (std::size_t i = 1; i < q; ++i) {
    const MultiGraph& prev = t.g.back();
    GraphBuilder jb(prev.next_vertex_id(), prev.next_edge_id());
    const PlacedCopy l = place_copy(jb, t.h, parts);
    EdgeSet cpi;
    std::size_t added = 0;
    for (VertexId w : l.a) {
      if (added == p) break;
      if (w == l.anchor) continue;
      cpi.push_back(add_simple_edge(jb, l.anchor, w));
      ++added;
    }
    if (added < p) throw InternalError("colour class too small for the attachment edges");
    const EdgeId fi = add_simple_edge(jb, l.b[0], l.b[1], "f" + std::to_string(i));
    const MultiGraph ji = jb.build();

    const EdgeSet& ci = t.c[i - 1];
    const EdgeSet rest_a = minus(prev.incident_edges(t.a[i - 1]), ci);
    const EdgeSet rest_u = minus(ji.incident_edges(l.anchor), cpi);
    std::vector<EdgeId> sources(ci.begin(), ci.end());
    sources.insert(sources.end(), rest_a.begin(), rest_a.end());
    std::vector<EdgeId> targets;
    if (options.scramble_pi) {
      targets.assign(rest_u.begin(), rest_u.end());
      targets.insert(targets.end(), cpi.begin(), cpi.end());
    } else {
      targets.assign(cpi.begin(), cpi.end());
      targets.insert(targets.end(), rest_u.begin(), rest_u.end());
    }
    std::map<EdgeId, EdgeId> pi;
    for (std::size_t k = 0; k < sources.size() && k < targets.size(); ++k) pi.emplace(sources[k], targets[k]);

    SpliceResult s = splice(SpliceSpec{prev, t.a[i - 1], ji, l.anchor, pi});
    if (!s.g2_vertices.empty() && s.g2_vertices.begin()->first != s.g2_vertices.begin()->second) {
      throw InternalError("brick copy ids collided with the graph it is spliced into");
    }
    VertexSet shore;
    for (VertexId v : ji.vertices()) {
      if (v != l.anchor) shore.push_back(v);
    }
    t.j.push_back(ji);
    t.u.push_back(l.anchor);
    t.u_parts.push_back(normalized(l.a));
    t.v_parts.push_back(normalized(l.b));
    t.c_prime.push_back(cpi);
    t.f.push_back(fi);
    t.pi.push_back(pi);
    t.d.push_back(Cut::of(s.graph, shore));
    t.g.push_back(std::move(s.graph));
  }
  return t;
}

bool TraceReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TraceCheck& c) { return c.passed; });
}

void TraceReport::require() const {
  for (const TraceCheck& c : checks) {
    if (!c.passed) throw VerificationError(c.group + ": " + c.claim);
  }
}

namespace {

bool inadmissible_after_deleting(const MultiGraph& g, const EdgeSet& deleted, const EdgeSet& edges) {
  const MultiGraph rest = g.without_edges(deleted);
  const PmOracle oracle(rest);
  return std::none_of(edges.begin(), edges.end(), [&](EdgeId e) {
    const EdgeId forced[] = {e};
    return oracle.extends(forced);
  });
}

VertexSet without(const VertexSet& s, VertexId v) {
  VertexSet out;
  for (VertexId x : s) {
    if (x != v) out.push_back(x);
  }
  return out;
}

std::size_t linking_matching(const MultiGraph& g, const VertexSet& x, const VertexSet& y) {
  VertexSet both = x;
  both.insert(both.end(), y.begin(), y.end());
  const MultiGraph sub = g.induced(normalized(both));
  EdgeSet inner;
  for (const Edge& e : sub.edges()) {
    if (contains(x, e.u) == contains(x, e.v)) inner.push_back(e.id);
  }
  return maximum_matching(sub.without_edges(inner)).size();
}

}  // namespace

TraceReport verify_trace(const ConstructionTrace& t) {
  TraceReport r;
  auto check = [&](std::string group, std::string claim, bool ok) {
    r.checks.push_back({std::move(group), std::move(claim), ok});
  };
  const std::string sp = std::to_string(t.p);
  const std::string sq = std::to_string(t.q);

  const EdgeSet f0{t.f[0]};
  const bool g0_covered = is_matching_covered(t.g0);
  check("base", "G_0 is bipartite", is_bipartite(t.g0).has_value());
  check("base", "G_0 is matching covered", g0_covered);
  check("base", "every edge of C* is inadmissible in G_0 - f_0", inadmissible_after_deleting(t.g0, f0, t.c_star));
  check("base", "{f_0} is a class of G_0", g0_covered && equivalence_partition(t.g0).is_class(f0));

  for (std::size_t i = 1; i < t.q; ++i) {
    const std::string si = std::to_string(i);
    const MultiGraph& ji = t.j[i - 1];
    const bool covered = is_matching_covered(ji);
    bool brick = false;
    if (covered) {
      brick = classify(ji) == Classification::Brick && is_brick_fast(ji);
    }
    const EdgeSet fi{t.f[i]};
    check("brick", "J_" + si + " is a brick", brick);
    check("brick", "every edge of C'_" + si + " is inadmissible in J_" + si + " - f_" + si,
          inadmissible_after_deleting(ji, fi, t.c_prime[i - 1]));
    check("brick", "{f_" + si + "} is a class of J_" + si, covered && equivalence_partition(ji).is_class(fi));
  }

  for (std::size_t i = 1; i < t.q; ++i) {
    const std::string si = std::to_string(i);
    const MultiGraph& gi = t.g[i];
    const Cut& di = t.d[i - 1];
    check("splice", "G_" + si + " is simple", gi.is_simple());
    const bool covered = is_matching_covered(gi);
    check("splice", "G_" + si + " is matching covered", covered);
    check("splice", "B_0 is a barrier of G_" + si, is_barrier(gi, t.b0));
    const auto comps = components(gi.without_vertices(t.b0));
    check("splice", "V(J_" + si + ") - u_" + si + " is a component of G_" + si + " - B_0",
          std::find(comps.begin(), comps.end(), di.shore()) != comps.end());
    check("splice", "D_" + si + " is tight in G_" + si, covered && is_tight_cut(gi, di));
  }

  for (std::size_t i = 0; i < t.q; ++i) {
    const std::string si = std::to_string(i);
    const MultiGraph& gi = t.g[i];
    const EdgeSet fi = normalized(EdgeSet(t.f.begin(), t.f.begin() + static_cast<std::ptrdiff_t>(i) + 1));
    check("class", "every edge of C* is inadmissible in G_" + si + " - F_" + si,
          inadmissible_after_deleting(gi, fi, t.c_star));
    check("class", "F_" + si + " is a class of G_" + si,
          is_matching_covered(gi) && equivalence_partition(gi).is_class(fi));
  }

  const MultiGraph& g = t.final_graph();
  r.kappa = vertex_connectivity(g);
  r.epsilon = is_matching_covered(g) ? epsilon(g) : 0;
  check("final", "kappa(G) >= " + sp, r.kappa >= t.p);
  check("final", "epsilon(G) >= " + sq, r.epsilon >= t.q);
  check("final", "|V(G)| = (2q - 1)|V(H)| - 2(q - 1)", g.num_vertices() == t.expected_order());

  std::vector<VertexSet> parts;
  for (std::size_t i = 0; i < t.q; ++i) {
    VertexSet hi = t.a_parts[i];
    hi.insert(hi.end(), t.b_parts[i].begin(), t.b_parts[i].end());
    hi = normalized(hi);
    parts.push_back(i + 1 < t.q ? without(hi, t.a[i]) : hi);
    if (i + 1 < t.q) {
      VertexSet li = t.u_parts[i];
      li.insert(li.end(), t.v_parts[i].begin(), t.v_parts[i].end());
      parts.push_back(without(normalized(li), t.u[i]));
    }
  }
  bool linked = true;
  bool parts_connected = true;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (vertex_connectivity(g.induced(parts[k])) < t.p) parts_connected = false;
    if (k + 1 < parts.size() && linking_matching(g, parts[k], parts[k + 1]) < t.p) linked = false;
  }
  check("final", "each part induces a " + sp + "-connected subgraph", parts_connected);
  check("final", "consecutive parts are joined by matchings of size >= " + sp, linked);
  return r;
}

}  // namespace matchcover
