// Copyright 2026 The dskernel Authors
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

#include "dskernel/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cerrno>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <string_view>
#include <vector>

namespace dskernel {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t ParseNumber(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ": " +
                                         message),
      line_(line) {}

Graph ReadGraph(std::istream& in) {
  Graph g;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t edges_seen = 0;
  std::string raw;
  std::size_t line_no = 0;

  auto vertex = [&](std::string_view token) {
    std::uint64_t k = ParseNumber(token, line_no);
    if (k < 1 || k > n) {
      throw ParseError(line_no, "vertex " + std::string(token) +
                                    " out of range 1.." + std::to_string(n));
    }
    return VertexId{static_cast<std::uint32_t>(k - 1)};
  };

  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = Tokens(raw);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "ds") {
        throw ParseError(line_no, "malformed header, expected 'p ds <n> <m>'");
      }
      n = ParseNumber(tokens[2], line_no);
      m = ParseNumber(tokens[3], line_no);
      if (n > std::uint64_t{0xffffffff}) {
        throw ParseError(line_no, "vertex count too large");
      }
      for (std::uint64_t i = 0; i < n; ++i) g.AddVertex();
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "missing 'p ds' header");

    if (tokens[0] == "w") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'w <u>'");
      g.SetColor(vertex(tokens[1]), Color::kWhite);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected an edge line '<u> <v>'");
    }
    VertexId u = vertex(tokens[0]);
    VertexId v = vertex(tokens[1]);
    if (u == v) throw ParseError(line_no, "self-loop");
    if (g.HasEdge(u, v)) throw ParseError(line_no, "duplicate edge");
    if (++edges_seen > m) {
      throw ParseError(line_no, "more edges than the header's " +
                                    std::to_string(m));
    }
    g.AddEdge(u, v);
  }
  if (!have_header) throw ParseError(0, "missing 'p ds' header");
  if (edges_seen != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges_seen));
  }
  return g;
}

Graph ReadGraphFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::system_error(errno, std::generic_category(),
                            "cannot open " + path.string());
  }
  return ReadGraph(in);
}

void WriteGraph(const Graph& g, std::ostream& out) {
  std::vector<VertexId> vertices = g.Vertices();
  auto number = [&](VertexId v) {
    return std::lower_bound(vertices.begin(), vertices.end(), v) -
           vertices.begin() + 1;
  };
  out << "p ds " << g.VertexCount() << ' ' << g.EdgeCount() << '\n';
  for (VertexId u : vertices) {
    for (VertexId v : g.Neighbors(u)) {
      if (u < v) out << number(u) << ' ' << number(v) << '\n';
    }
  }
  for (VertexId u : vertices) {
    if (!g.IsBlack(u)) out << "w " << number(u) << '\n';
  }
}

std::string WriteGraphToString(const Graph& g) {
  std::ostringstream os;
  WriteGraph(g, os);
  return os.str();
}

}  // namespace dskernel
