// Copyright 2026 The impsel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "impsel/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace impsel {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
      ++j;
    }
    if (j > i) {
      tokens.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return tokens;
}

std::uint64_t to_uint(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                     "' is not a non-negative integer");
  }
  return value;
}

} // namespace

Digraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Arc> arcs;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two fields");
    }
    if (!have_header) {
      n = to_uint(tokens[0], line_no);
      m = to_uint(tokens[1], line_no);
      if (n > UINT32_MAX) {
        throw ParseError("vertex count too large");
      }
      have_header = true;
      continue;
    }
    std::uint64_t u = to_uint(tokens[0], line_no);
    std::uint64_t v = to_uint(tokens[1], line_no);
    if (u >= n || v >= n) {
      throw GraphError("line " + std::to_string(line_no) +
                       ": endpoint outside [0, " + std::to_string(n) + ")");
    }
    arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  if (!have_header) {
    throw ParseError("missing header line \"n m\"");
  }
  if (arcs.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " arcs but " +
                     std::to_string(arcs.size()) + " were listed");
  }
  return Digraph(n, std::move(arcs));
}

std::string emit_edge_list(const Digraph &g) {
  std::string out;
  out.reserve(16 + g.arc_count() * 12);
  out += std::to_string(g.vertex_count());
  out += ' ';
  out += std::to_string(g.arc_count());
  out += '\n';
  for (const Arc &a : g.arcs()) {
    out += std::to_string(a.from);
    out += ' ';
    out += std::to_string(a.to);
    out += '\n';
  }
  return out;
}

Digraph read_edge_list_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

void write_edge_list_file(const Digraph &g, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write " + path);
  }
  out << emit_edge_list(g);
}

} // namespace impsel
