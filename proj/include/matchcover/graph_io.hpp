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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "matchcover/multigraph.hpp"

namespace matchcover {

// Text format:
//
//   # comment
//   p <numVertices> <numEdges>
//   e <u> <v>        (numEdges lines, 1-indexed vertices)
//
// Vertex k of the file becomes VertexId(k-1) and the i-th `e` line becomes
// EdgeId(i-1). Repeated `e u v` lines are parallel edges.

MultiGraph parse_graph(std::istream& in);
MultiGraph parse_graph(std::string_view text);
MultiGraph read_graph_file(const std::filesystem::path& path);

/// Renumbers vertices densely in id order and writes edges in id order.
void write_graph(std::ostream& out, const MultiGraph& g);
std::string to_text(const MultiGraph& g);
void write_graph_file(const std::filesystem::path& path, const MultiGraph& g);

/// 1-based position of a vertex/edge in the written form.
std::size_t file_vertex_number(const MultiGraph& g, VertexId v);
std::size_t file_edge_number(const MultiGraph& g, EdgeId e);

}  // namespace matchcover
