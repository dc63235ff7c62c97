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

#include "matchcover/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "matchcover/error.hpp"

namespace matchcover {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t number(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

MultiGraph parse_graph(std::istream& in) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokens(line);
    if (tok.empty() || tok.front().front() == '#') continue;
    if (tok.front() == "p") {
      if (header) throw ParseError(lineno, "duplicate 'p' line");
      if (tok.size() != 3) throw ParseError(lineno, "expected 'p <numVertices> <numEdges>'");
      header.emplace(number(tok[1], lineno), number(tok[2], lineno));
    } else if (tok.front() == "e") {
      if (!header) throw ParseError(lineno, "'e' line before 'p' line");
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      const std::size_t u = number(tok[1], lineno);
      const std::size_t v = number(tok[2], lineno);
      if (u < 1 || u > header->first || v < 1 || v > header->first) {
        throw ParseError(lineno, "vertex out of range 1.." + std::to_string(header->first));
      }
      if (u == v) throw ParseError(lineno, "loops are not allowed");
      if (edges.size() == header->second) throw ParseError(lineno, "more edges than declared");
      edges.push_back({EdgeId{static_cast<std::uint32_t>(edges.size())}, VertexId{static_cast<std::uint32_t>(u - 1)},
                       VertexId{static_cast<std::uint32_t>(v - 1)}});
    } else {
      throw ParseError(lineno, "unknown line type '" + std::string(tok.front()) + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing 'p' line");
  if (edges.size() != header->second) {
    throw ParseError(lineno, "declared " + std::to_string(header->second) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  std::vector<VertexId> vertices;
  vertices.reserve(header->first);
  for (std::size_t i = 0; i < header->first; ++i) vertices.push_back(VertexId{static_cast<std::uint32_t>(i)});
  return MultiGraph(std::move(vertices), std::move(edges));
}

MultiGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

MultiGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_graph(in);
}

std::size_t file_vertex_number(const MultiGraph& g, VertexId v) { return g.vertex_index(v) + 1; }
std::size_t file_edge_number(const MultiGraph& g, EdgeId e) { return g.edge_index(e) + 1; }

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << g.vertex_index(e.u) + 1 << ' ' << g.vertex_index(e.v) + 1 << '\n';
  }
}

std::string to_text(const MultiGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_graph_file(const std::filesystem::path& path, const MultiGraph& g) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  write_graph(out, g);
}

}  // namespace matchcover
