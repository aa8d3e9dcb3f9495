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

#ifndef DSKERNEL_GRAPH_IO_HPP_
#define DSKERNEL_GRAPH_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dskernel/graph.hpp"

namespace dskernel {

// Text format:
//
//   c <comment>          ignored anywhere
//   p ds <n> <m>         header, exactly once, before anything else
//   <u> <v>              m edge lines, 1-indexed endpoints
//   w <u>                optional, marks vertex u white
//
// Vertices default to black. Blank lines are ignored.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  // 1-based; 0 when the problem is not tied to a line (e.g. missing header).
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Vertex i of the file becomes VertexId{i - 1}.
Graph ReadGraph(std::istream& in);
Graph ReadGraphFile(const std::filesystem::path& path);

// Renumbers live vertices 1..n by ascending id. Edges are written as "u v"
// with u < v in lexicographic order, then one "w u" line per white vertex.
void WriteGraph(const Graph& g, std::ostream& out);
std::string WriteGraphToString(const Graph& g);

}  // namespace dskernel

#endif  // DSKERNEL_GRAPH_IO_HPP_
