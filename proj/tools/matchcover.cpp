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

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matchcover/error.hpp"
#include "matchcover/generators.hpp"
#include "matchcover/graph_io.hpp"
#include "matchcover/properties.hpp"
#include "matchcover/report.hpp"
#include "matchcover/splicing.hpp"

namespace fs = std::filesystem;
using namespace matchcover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotCovered = 2;
constexpr int kExitUndecided = 3;

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw DomainError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::size_t enumeration_budget() {
  if (const char* env = std::getenv("MATCHCOVER_BUDGET")) return parse_count(env, "MATCHCOVER_BUDGET");
  return kDefaultEnumerationBudget;
}

VertexId vertex_by_number(const MultiGraph& g, std::size_t number) {
  if (number < 1 || number > g.num_vertices()) {
    throw DomainError("vertex " + std::to_string(number) + " out of range 1.." + std::to_string(g.num_vertices()));
  }
  return g.vertices()[number - 1];
}

EdgeId edge_by_number(const MultiGraph& g, std::size_t number) {
  if (number < 1 || number > g.num_edges()) {
    throw DomainError("edge " + std::to_string(number) + " out of range 1.." + std::to_string(g.num_edges()));
  }
  return g.edges()[number - 1].id;
}

// "a:b,c:d" with 1-based edge numbers of the two input files.
std::map<EdgeId, EdgeId> parse_pi(std::string_view text, const MultiGraph& g1, const MultiGraph& g2) {
  std::map<EdgeId, EdgeId> pi;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw DomainError("bijection entries look like 3:5");
    const EdgeId from = edge_by_number(g1, parse_count(item.substr(0, colon), "edge number"));
    const EdgeId to = edge_by_number(g2, parse_count(item.substr(colon + 1), "edge number"));
    if (!pi.emplace(from, to).second) throw DomainError("edge mapped twice in the bijection");
    start = comma + 1;
  }
  return pi;
}

std::string describe_numbers(const std::vector<std::size_t>& numbers) {
  std::string out;
  for (std::size_t n : numbers) out += (out.empty() ? "" : " ") + std::to_string(n);
  return out;
}

std::string splice_text(const SpliceResult& s) {
  std::vector<std::size_t> shore;
  for (VertexId v : s.cut.shore()) shore.push_back(file_vertex_number(s.graph, v));
  std::vector<std::size_t> edges;
  for (EdgeId e : s.cut.edges(s.graph)) edges.push_back(file_edge_number(s.graph, e));
  return "# splicing cut edges: " + describe_numbers(edges) + "\n# splicing cut shore: " + describe_numbers(shore) +
         "\n" + to_text(s.graph);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  out << text;
}

int run_analyze(const std::string& path, bool json, bool decompose, bool check) {
  const MultiGraph g = read_graph_file(path);
  AnalysisOptions options;
  options.decompose = decompose;
  options.oracle_check = check;
  options.budget = enumeration_budget();
  const Json report = analysis_report(g, options);
  std::cout << (json ? report.dump(2) + "\n" : render_text(report));
  if (!report["flags"]["matchingCovered"].get<bool>()) return kExitNotCovered;
  if (check && !report["oracleCheck"]["agrees"].get<bool>()) return kExitInput;
  return kExitOk;
}

int run_splice(const std::string& p1, std::size_t n1, const std::string& p2, std::size_t n2, const std::string& pi,
               bool all_variants, const std::string& out, const std::string& out_dir) {
  const MultiGraph g1 = read_graph_file(p1);
  const MultiGraph g2 = read_graph_file(p2);
  const VertexId v1 = vertex_by_number(g1, n1);
  const VertexId v2 = vertex_by_number(g2, n2);
  if (all_variants) {
    const auto variants = splice_variant_graphs(g1, v1, g2, v2);
    fs::create_directories(out_dir);
    for (std::size_t k = 0; k < variants.size(); ++k) {
      const fs::path file = fs::path(out_dir) / ("variant-" + std::to_string(k + 1) + ".g");
      const SpliceResult s = splice(SpliceSpec{g1, v1, g2, v2, variants[k].pi});
      write_text(file, "# form: " + variants[k].form.to_string() + "\n" + splice_text(s));
      std::cout << file.string() << " " << variants[k].form.to_string() << "\n";
    }
    return kExitOk;
  }
  const auto bijection = pi.empty() ? ordered_bijection(g1, v1, g2, v2) : parse_pi(pi, g1, g2);
  const SpliceResult s = splice(SpliceSpec{g1, v1, g2, v2, bijection});
  if (out.empty()) {
    std::cout << splice_text(s);
  } else {
    write_text(out, splice_text(s));
  }
  return kExitOk;
}

int run_construct(std::size_t p, std::size_t q, const std::string& brace, std::size_t anchor, bool verify,
                  bool scramble, const std::string& out_dir) {
  std::optional<AnchoredBrace> h;
  if (!brace.empty()) {
    MultiGraph hg = read_graph_file(brace);
    const VertexId a = vertex_by_number(hg, anchor);
    h = AnchoredBrace{std::move(hg), a};
  }
  const ConstructionTrace t = build_high_kappa_epsilon(p, q, h, BuildOptions{scramble});
  fs::create_directories(out_dir);
  write_graph_file(fs::path(out_dir) / "G0.g", t.g0);
  for (std::size_t i = 1; i < q; ++i) {
    write_graph_file(fs::path(out_dir) / ("J" + std::to_string(i) + ".g"), t.j[i - 1]);
    write_graph_file(fs::path(out_dir) / ("G" + std::to_string(i) + ".g"), t.g[i]);
  }
  std::optional<TraceReport> report;
  if (verify) report = verify_trace(t);
  write_text(fs::path(out_dir) / "trace.json", trace_report(t, report ? &*report : nullptr).dump(2) + "\n");
  std::cout << "final graph: " << t.final_graph().num_vertices() << " vertices, " << t.final_graph().num_edges()
            << " edges, written to " << out_dir << "\n";
  if (!report) return kExitOk;
  for (const TraceCheck& c : report->checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.group << ": " << c.claim << "\n";
  }
  std::cout << "kappa = " << report->kappa << ", epsilon = " << report->epsilon << "\n";
  return report->all_passed() ? kExitOk : kExitInput;
}

struct CorpusRow {
  std::string file;
  std::string status;
  std::string detail;
};

int run_corpus(const std::string& dir, const std::string& suite_name, std::uint64_t seed, bool json) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw DomainError("unknown property suite '" + suite_name + "'");
  if (!fs::is_directory(dir)) throw DomainError(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".g") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusRow> rows(files.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(files.size()); ++k) {
    CorpusRow& row = rows[static_cast<std::size_t>(k)];
    row.file = files[static_cast<std::size_t>(k)].filename().string();
    try {
      const PropertyResult r = run_suite(*suite, read_graph_file(files[static_cast<std::size_t>(k)]), seed);
      row.status = !r.applicable ? "skip" : r.passed ? "pass" : "fail";
      row.detail = r.detail;
    } catch (const CapabilityError& e) {
      row.status = "undecided";
      row.detail = e.what();
    } catch (const std::exception& e) {
      row.status = "error";
      row.detail = e.what();
    }
  }
  bool failed = false;
  bool undecided = false;
  for (const CorpusRow& row : rows) {
    failed = failed || row.status == "fail" || row.status == "error";
    undecided = undecided || row.status == "undecided";
  }
  if (json) {
    Json out;
    out["schema"] = kReportSchema;
    out["suite"] = to_string(*suite);
    out["seed"] = seed;
    Json table = Json::array();
    for (const CorpusRow& row : rows) table.push_back({{"file", row.file}, {"status", row.status}, {"detail", row.detail}});
    out["rows"] = table;
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t width = 4;
    for (const CorpusRow& row : rows) width = std::max(width, row.file.size());
    for (const CorpusRow& row : rows) {
      std::cout << row.file << std::string(width + 2 - row.file.size(), ' ') << row.status;
      if (!row.detail.empty()) std::cout << "  " << row.detail;
      std::cout << "\n";
    }
    std::cout << rows.size() << " files, suite " << to_string(*suite) << ": "
              << (failed ? "FAILED" : undecided ? "undecided" : "ok") << "\n";
  }
  if (failed) return kExitInput;
  return undecided ? kExitUndecided : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivalence classes, tight cuts and splicing for matching covered multigraphs"};
  app.require_subcommand(1);

  bool json = false;
  bool decompose = false;
  bool oracle = false;
  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Report the structure of a graph file");
  analyze->add_option("file", path, "Graph in the text format")->required();
  analyze->add_flag("--json", json, "Emit the JSON report");
  analyze->add_flag("--decompose", decompose, "Include the tight cut decomposition tree");
  analyze->add_flag("--oracle-check", oracle, "Cross-check against perfect matching enumeration");

  std::string g1;
  std::string g2;
  std::size_t v1 = 0;
  std::size_t v2 = 0;
  std::string pi;
  bool all_variants = false;
  std::string out;
  std::string out_dir = ".";
  auto* splice_cmd = app.add_subcommand("splice", "Splice two graphs at a vertex of each");
  splice_cmd->add_option("g1", g1)->required();
  splice_cmd->add_option("v1", v1, "1-based vertex of g1")->required();
  splice_cmd->add_option("g2", g2)->required();
  splice_cmd->add_option("v2", v2, "1-based vertex of g2")->required();
  auto* pi_opt = splice_cmd->add_option("--pi", pi, "Bijection of the stars as g1edge:g2edge,... (default: in order)");
  splice_cmd->add_flag("--all-variants", all_variants, "Write one file per isomorphism type over all bijections")
      ->excludes(pi_opt);
  splice_cmd->add_option("-o,--out", out, "Output file (default: stdout)");
  splice_cmd->add_option("--out-dir", out_dir, "Directory for --all-variants");

  std::size_t p = 0;
  std::size_t q = 0;
  std::string brace;
  std::size_t anchor = 1;
  bool verify = false;
  bool scramble = false;
  std::string construct_dir = "construction";
  auto* construct = app.add_subcommand("construct", "Build a graph with connectivity >= p and a class of size >= q");
  construct->add_option("--p", p)->required();
  construct->add_option("--q", q)->required();
  auto* brace_opt = construct->add_option("--brace", brace, "Brace H (default K_{p+1,p+1})");
  construct->add_option("--anchor", anchor, "1-based vertex of H")->needs(brace_opt);
  construct->add_flag("--verify", verify, "Check every claim of the construction on the result");
  construct->add_flag("--scramble-pi", scramble, "Splice with a bijection that breaks the merge (negative control)");
  construct->add_option("--out", construct_dir, "Output directory");

  std::string dir;
  std::string suite;
  std::uint64_t seed = 0;
  bool corpus_json = false;
  auto* corpus = app.add_subcommand("corpus", "Run a property suite over every .g file of a directory");
  corpus->add_option("--dir", dir)->required();
  corpus->add_option("--check", suite, "bounds, uniqueness, merging or structure")->required();
  corpus->add_option("--seed", seed, "Seed for randomized cut choices");
  corpus->add_flag("--json", corpus_json, "Emit JSON");

  std::string name;
  std::string named_out;
  auto* named = app.add_subcommand("named", "Write a named graph (K4, C8, K3,3, C6bar, prism5, W5, petersen, ...)");
  named->add_option("name", name)->required();
  named->add_option("-o,--out", named_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return run_analyze(path, json, decompose, oracle);
    if (*splice_cmd) return run_splice(g1, v1, g2, v2, pi, all_variants, out, out_dir);
    if (*construct) return run_construct(p, q, brace, anchor, verify, scramble, construct_dir);
    if (*corpus) return run_corpus(dir, suite, seed, corpus_json);
    if (*named) {
      const MultiGraph g = named_graph(name);
      if (named_out.empty()) {
        std::cout << to_text(g);
      } else {
        write_graph_file(named_out, g);
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapabilityError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
