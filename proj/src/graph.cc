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

#include "ctxcompile/graph.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ctx {

Graph::Graph(size_t n, const std::vector<Edge> &edges, std::optional<std::vector<uint32_t>> weights)
    : n_(n), adjacency_(n), weights_(std::move(weights)) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) {
            std::stringstream ss;
            ss << "edge (" << a << "," << b << ") has an endpoint outside 0.." << (n == 0 ? 0 : n - 1);
            throw std::invalid_argument(ss.str());
        }
        if (a == b) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        }
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    auto last = std::unique(edges_.begin(), edges_.end());
    duplicates_dropped_ = static_cast<size_t>(edges_.end() - last);
    edges_.erase(last, edges_.end());
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto &row : adjacency_) {
        std::sort(row.begin(), row.end());
    }

    if (weights_.has_value()) {
        if (weights_->size() != n) {
            throw std::invalid_argument(
                "weight vector has " + std::to_string(weights_->size()) + " entries for " + std::to_string(n) +
                " vertices");
        }
        for (size_t v = 0; v < n; v++) {
            if ((*weights_)[v] == 0) {
                throw std::invalid_argument("vertex " + std::to_string(v) + " has weight 0; weights must be >= 1");
            }
        }
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) {
        return false;
    }
    const auto &row = adjacency_[a];
    return std::binary_search(row.begin(), row.end(), b);
}

uint32_t Graph::weight(Vertex v) const {
    return weights_.has_value() ? (*weights_)[v] : 1;
}

Graph Graph::unweighted() const {
    return Graph(n_, edges_);
}

uint64_t Graph::canonical_hash() const {
    uint64_t h = 14695981039346656037ULL;
    auto mix = [&](uint64_t x) {
        for (int k = 0; k < 8; k++) {
            h ^= (x >> (8 * k)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(n_);
    mix(edges_.size());
    for (auto [a, b] : edges_) {
        mix(a);
        mix(b);
    }
    if (weights_.has_value()) {
        for (auto w : *weights_) {
            mix(w);
        }
    }
    return h;
}

std::string Graph::str() const {
    std::stringstream ss;
    ss << "Graph(n=" << n_ << ", edges={";
    for (size_t k = 0; k < edges_.size(); k++) {
        if (k) {
            ss << ",";
        }
        ss << "(" << edges_[k].first << "," << edges_[k].second << ")";
    }
    ss << "}";
    if (weights_.has_value()) {
        ss << ", weights=[";
        for (size_t v = 0; v < n_; v++) {
            ss << (v ? "," : "") << (*weights_)[v];
        }
        ss << "]";
    }
    ss << ")";
    return ss.str();
}

Graph complete_graph(size_t n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; a++) {
        for (Vertex b = a + 1; b < n; b++) {
            edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

Graph empty_graph(size_t n) {
    return Graph(n, {});
}

Graph cycle_graph(size_t n) {
    if (n < 3) {
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (Vertex k = 0; k < n; k++) {
        edges.emplace_back(k, static_cast<Vertex>((k + 1) % n));
    }
    return Graph(n, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex k = 0; k < 5; k++) {
        edges.emplace_back(k, (k + 1) % 5);          // outer pentagon
        edges.emplace_back(k, k + 5);                // spokes
        edges.emplace_back(k + 5, (k + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, edges);
}

Graph complement(const Graph &g) {
    std::vector<Edge> edges;
    size_t n = g.num_vertices();
    for (Vertex a = 0; a < n; a++) {
        for (Vertex b = a + 1; b < n; b++) {
            if (!g.has_edge(a, b)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Graph(n, edges);
}

WeightedExpansion expand_weighted(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<Vertex> first_copy(n);
    std::vector<Vertex> origin;
    for (Vertex v = 0; v < n; v++) {
        first_copy[v] = static_cast<Vertex>(origin.size());
        for (uint32_t c = 0; c < g.weight(v); c++) {
            origin.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        for (uint32_t ca = 0; ca < g.weight(a); ca++) {
            for (uint32_t cb = 0; cb < g.weight(b); cb++) {
                edges.emplace_back(first_copy[a] + ca, first_copy[b] + cb);
            }
        }
    }
    return {Graph(origin.size(), edges), std::move(origin)};
}

}  // namespace ctx
