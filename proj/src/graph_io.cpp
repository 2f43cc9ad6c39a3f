// Copyright 2026 The hechordal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hechordal/graph.hpp"

namespace hechordal {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw GraphError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                     "' is not a non-negative integer");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::vector<std::string_view> header;
  for (; line_no < lines.size(); ++line_no) {
    header = split_ws(lines[line_no]);
    if (!header.empty()) break;
  }
  if (header.size() != 1) {
    throw GraphError("malformed header: expected a single vertex count on the first line");
  }
  header_line = line_no + 1;
  const std::size_t n = parse_index(header[0], header_line);

  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (++line_no; line_no < lines.size(); ++line_no) {
    auto tokens = split_ws(lines[line_no]);
    if (tokens.empty()) continue;
    const std::size_t shown = line_no + 1;
    if (tokens.size() != 2) {
      throw GraphError("line " + std::to_string(shown) + ": expected \"u v\"");
    }
    const std::size_t u = parse_index(tokens[0], shown);
    const std::size_t v = parse_index(tokens[1], shown);
    if (u >= n || v >= n) {
      throw GraphError("line " + std::to_string(shown) + ": endpoint out of range for n=" +
                       std::to_string(n));
    }
    if (u == v) throw GraphError("line " + std::to_string(shown) + ": self-loop");
    if (u > v) throw GraphError("line " + std::to_string(shown) + ": edges must be written as u < v");
    if (!seen.emplace(u, v).second) {
      throw GraphError("line " + std::to_string(shown) + ": duplicate edge");
    }
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write graph file '" + path + "'");
  out << format_graph(g);
}

}  // namespace hechordal
