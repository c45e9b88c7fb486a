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

#ifndef IMPSEL_EDGE_LIST_HPP_
#define IMPSEL_EDGE_LIST_HPP_

#include <string>
#include <string_view>

#include "impsel/digraph.hpp"

namespace impsel {

// Text format: a header line "n m" followed by m lines "u v" (0-indexed,
// whitespace separated). Emission is canonical: single spaces, "\n" line
// endings, arcs in lexicographic order.

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Throws ParseError on a malformed header, a non-integer token or an arc
// count mismatch; graph invariant violations surface as GraphError.
Digraph parse_edge_list(std::string_view text);

std::string emit_edge_list(const Digraph &g);

Digraph read_edge_list_file(const std::string &path);
void write_edge_list_file(const Digraph &g, const std::string &path);

} // namespace impsel

#endif // IMPSEL_EDGE_LIST_HPP_
