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

#include "ctxcompile/graph_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ctxcompile/serialize.h"

namespace ctx {

ParseError::ParseError(size_t line, const std::string &message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line(line) {}

std::string to_string(GraphFormat format) {
    return format == GraphFormat::Json ? "json" : "dimacs";
}

GraphFormat parse_graph_format(const std::string &text) {
    if (text == "json") {
        return GraphFormat::Json;
    }
    if (text == "dimacs") {
        return GraphFormat::Dimacs;
    }
    throw std::invalid_argument("unknown graph format '" + text + "' (expected json or dimacs)");
}

GraphFormat guess_graph_format(const std::string &path) {
    const std::string ext = ".json";
    if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
        return GraphFormat::Json;
    }
    return GraphFormat::Dimacs;
}

namespace {

constexpr uint64_t kMaxParsedVertices = uint64_t{1} << 20;

ParsedGraph finish(size_t n, const std::vector<Edge> &edges, std::optional<std::vector<uint32_t>> weights,
                   std::vector<std::string> warnings) {
    try {
        Graph g(n, edges, std::move(weights));
        if (g.duplicates_dropped() > 0) {
            warnings.push_back("merged " + std::to_string(g.duplicates_dropped()) + " duplicate edge(s)");
        }
        return {std::move(g), std::move(warnings)};
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
}

size_t line_of_offset(std::string_view text, size_t offset) {
    offset = std::min(offset, text.size());
    size_t line = 1;
    for (size_t k = 0; k < offset; k++) {
        if (text[k] == '\n') {
            line++;
        }
    }
    return line;
}

uint64_t json_count(const Json &j, const std::string &what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<int64_t>() >= 0)) {
        throw ParseError(0, what + " must be a non-negative integer");
    }
    return j.get<uint64_t>();
}

ParsedGraph parse_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        throw ParseError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "invalid JSON");
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw ParseError(0, "graph JSON needs \"n\" and \"edges\"");
    }
    uint64_t n = json_count(j["n"], "n");
    if (n > kMaxParsedVertices) {
        throw ParseError(0, "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxParsedVertices));
    }
    if (!j["edges"].is_array()) {
        throw ParseError(0, "edges must be an array");
    }
    std::vector<Edge> edges;
    for (size_t k = 0; k < j["edges"].size(); k++) {
        const Json &e = j["edges"][k];
        std::string where = "edges[" + std::to_string(k) + "]";
        if (!e.is_array() || e.size() != 2) {
            throw ParseError(0, where + " must be a pair [i, j]");
        }
        uint64_t a = json_count(e[0], where + "[0]");
        uint64_t b = json_count(e[1], where + "[1]");
        if (a >= n || b >= n) {
            throw ParseError(0, where + " has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    std::optional<std::vector<uint32_t>> weights;
    if (j.contains("weights")) {
        const Json &w = j["weights"];
        if (!w.is_object()) {
            throw ParseError(0, "weights must be an object mapping vertex ids to weights");
        }
        if (!w.empty()) {
            weights.emplace(n, 1);
            for (auto it = w.begin(); it != w.end(); ++it) {
                uint64_t v = 0;
                const std::string &key = it.key();
                auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
                if (ec != std::errc() || ptr != key.data() + key.size() || v >= n) {
                    throw ParseError(0, "weights key '" + key + "' is not a vertex id");
                }
                uint64_t value = json_count(it.value(), "weights[" + key + "]");
                if (value > UINT32_MAX) {
                    throw ParseError(0, "weights[" + key + "] is too large");
                }
                (*weights)[v] = static_cast<uint32_t>(value);
            }
        }
    }
    return finish(n, edges, std::move(weights), {});
}

ParsedGraph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    bool have_header = false;
    uint64_t n = 0;
    uint64_t m = 0;
    std::vector<Edge> edges;
    std::vector<uint32_t> weights;
    bool weighted = false;

    auto vertex = [&](std::istringstream &ls, const char *what) {
        int64_t v = 0;
        if (!(ls >> v)) {
            throw ParseError(lineno, std::string("expected ") + what);
        }
        if (v < 1 || static_cast<uint64_t>(v) > n) {
            throw ParseError(lineno, std::string(what) + " " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        return static_cast<Vertex>(v - 1);
    };

    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") {
            continue;
        }
        if (tag == "p") {
            std::string kind;
            if (have_header) {
                throw ParseError(lineno, "second problem line");
            }
            int64_t n_in = -1;
            int64_t m_in = -1;
            if (!(ls >> kind >> n_in >> m_in) || (kind != "edge" && kind != "col") || n_in < 0 || m_in < 0 ||
                static_cast<uint64_t>(n_in) > kMaxParsedVertices) {
                throw ParseError(lineno, "expected 'p edge <n> <m>'");
            }
            n = static_cast<uint64_t>(n_in);
            m = static_cast<uint64_t>(m_in);
            have_header = true;
            weights.assign(n, 1);
        } else if (tag == "e") {
            if (!have_header) {
                throw ParseError(lineno, "edge before the 'p edge' line");
            }
            Vertex a = vertex(ls, "vertex");
            Vertex b = vertex(ls, "vertex");
            if (a == b) {
                throw ParseError(lineno, "self-loop on vertex " + std::to_string(a + 1));
            }
            edges.emplace_back(a, b);
        } else if (tag == "n") {
            if (!have_header) {
                throw ParseError(lineno, "weight before the 'p edge' line");
            }
            Vertex v = vertex(ls, "vertex");
            int64_t w = 0;
            if (!(ls >> w) || w < 1 || w > int64_t{UINT32_MAX}) {
                throw ParseError(lineno, "expected a positive integer weight");
            }
            weights[v] = static_cast<uint32_t>(w);
            weighted = true;
        } else {
            throw ParseError(lineno, "unknown line type '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
        }
    }
    if (!have_header) {
        throw ParseError(0, "missing 'p edge <n> <m>' line");
    }
    std::vector<std::string> warnings;
    if (edges.size() != m) {
        warnings.push_back("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    std::optional<std::vector<uint32_t>> w;
    if (weighted) {
        w = std::move(weights);
    }
    return finish(n, edges, std::move(w), std::move(warnings));
}

}  // namespace

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Json ? parse_json(text) : parse_dimacs(text);
}

ParsedGraph read_graph_file(const std::string &path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str(), format);
}

std::string emit_graph(const Graph &g, GraphFormat format) {
    if (format == GraphFormat::Json) {
        return dump_json(to_json(g), -1) + "\n";
    }
    std::string out = "p edge " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    if (g.is_weighted()) {
        for (Vertex v = 0; v < g.num_vertices(); v++) {
            out += "n " + std::to_string(v + 1) + " " + std::to_string(g.weight(v)) + "\n";
        }
    }
    for (auto [a, b] : g.edges()) {
        out += "e " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    }
    return out;
}

namespace {

Graph circulant(size_t n, const std::vector<size_t> &distances) {
    std::vector<Edge> edges;
    for (size_t v = 0; v < n; v++) {
        for (size_t d : distances) {
            edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + d) % n));
        }
    }
    return Graph(n, edges);
}

/// Parses "<prefix><n>" or "<prefix>(<n>)".
std::optional<size_t> sized(const std::string &name, const std::string &prefix) {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) {
        return std::nullopt;
    }
    std::string rest = name.substr(prefix.size());
    if (rest.front() == '(') {
        if (rest.back() != ')') {
            return std::nullopt;
        }
        rest = rest.substr(1, rest.size() - 2);
    }
    size_t n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        return std::nullopt;
    }
    return n;
}

constexpr size_t kCatalogMaxVertices = 256;

}  // namespace

std::vector<std::string> catalog_entries() {
    return {
        "c5              pentagon",
        "c<n>, c(<n>)    odd cycle, n >= 5",
        "k<n>, k(<n>)    complete graph, n >= 1",
        "empty<n>        n isolated vertices, n >= 1",
        "petersen        Petersen graph",
        "chsh-circulant  8-vertex circulant, distances 1 and 2",
        "fig2-k2         a single edge",
    };
}

Graph catalog_graph(const std::string &name) {
    auto unknown = [&](const std::string &why) {
        std::string msg = "unknown catalog entry '" + name + "'" + why + "; available:";
        for (const auto &e : catalog_entries()) {
            msg += "\n  " + e;
        }
        return std::invalid_argument(msg);
    };
    if (name == "petersen") {
        return petersen_graph();
    }
    if (name == "chsh-circulant") {
        return circulant(8, {1, 2});
    }
    if (name == "fig2-k2") {
        return complete_graph(2);
    }
    if (auto n = sized(name, "empty")) {
        if (*n < 1 || *n > kCatalogMaxVertices) {
            throw unknown(" (size out of range)");
        }
        return empty_graph(*n);
    }
    if (auto n = sized(name, "k")) {
        if (*n < 1 || *n > kCatalogMaxVertices) {
            throw unknown(" (size out of range)");
        }
        return complete_graph(*n);
    }
    if (auto n = sized(name, "c")) {
        if (*n < 5 || *n % 2 == 0 || *n > kCatalogMaxVertices) {
            throw unknown(" (cycles must be odd with n >= 5)");
        }
        return cycle_graph(*n);
    }
    throw unknown("");
}

}  // namespace ctx
