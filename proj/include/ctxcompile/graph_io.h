// Copyright 2026 The ctxcompile Authors
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

#ifndef CTXCOMPILE_GRAPH_IO_H
#define CTXCOMPILE_GRAPH_IO_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctxcompile/graph.h"

namespace ctx {

/// Malformed input. `line` is 1-based, or 0 when the problem is not tied to
/// a line (e.g. a JSON field of the wrong type).
struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &message);
    size_t line;
};

enum class GraphFormat { Json, Dimacs };

std::string to_string(GraphFormat format);
/// "json" or "dimacs". Throws std::invalid_argument.
GraphFormat parse_graph_format(const std::string &text);
/// ".json" means Json, everything else Dimacs.
GraphFormat guess_graph_format(const std::string &path);

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

/// JSON:   {"n": 5, "edges": [[0,1], ...], "weights": {"3": 2}}
///         Unlisted weights default to 1.
/// DIMACS: "c" comments, one "p edge n m" header, "e i j" edges and
///         optional "n v w" weights, all 1-indexed.
///
/// Duplicate edges are merged with a warning; self-loops, out-of-range
/// endpoints and zero weights are errors. Throws ParseError.
ParsedGraph parse_graph(std::string_view text, GraphFormat format);

/// Reads `path` and parses it. Throws std::runtime_error if the file cannot
/// be read.
ParsedGraph read_graph_file(const std::string &path, GraphFormat format);

std::string emit_graph(const Graph &g, GraphFormat format);

/// c5, c<odd n>=5>, k<n>, empty<n> (also k(n), empty(n)), petersen,
/// chsh-circulant (8-cycle plus distance-2 chords), fig2-k2 (a single edge).
/// Throws std::invalid_argument listing the entries for an unknown name.
Graph catalog_graph(const std::string &name);

/// One line per entry, for `catalog` listings and error messages.
std::vector<std::string> catalog_entries();

}  // namespace ctx

#endif
