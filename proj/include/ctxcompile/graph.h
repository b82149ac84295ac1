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

#ifndef CTXCOMPILE_GRAPH_H
#define CTXCOMPILE_GRAPH_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctx {

using Vertex = uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with optional positive integer
/// vertex weights. Edges are kept sorted with the smaller endpoint first.
///
/// Each vertex stands for the probability of a yes-no test; an edge joins
/// two tests whose "yes" outcomes are exclusive.
class Graph {
   public:
    Graph() = default;

    /// Validates and normalizes. Duplicate edges (in either orientation) are
    /// merged; `duplicates_dropped()` reports how many.
    /// Throws std::invalid_argument on self-loops, out-of-range endpoints or
    /// zero weights.
    Graph(size_t n, const std::vector<Edge> &edges, std::optional<std::vector<uint32_t>> weights = std::nullopt);

    size_t num_vertices() const {
        return n_;
    }
    size_t num_edges() const {
        return edges_.size();
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const std::vector<Vertex> &neighbors(Vertex v) const {
        return adjacency_[v];
    }
    bool has_edge(Vertex a, Vertex b) const;
    size_t degree(Vertex v) const {
        return adjacency_[v].size();
    }

    bool is_weighted() const {
        return weights_.has_value();
    }
    /// Weight of v; 1 when the graph is unweighted.
    uint32_t weight(Vertex v) const;
    const std::optional<std::vector<uint32_t>> &weights() const {
        return weights_;
    }
    size_t duplicates_dropped() const {
        return duplicates_dropped_;
    }

    /// Same structure, weights discarded.
    Graph unweighted() const;

    /// FNV-1a over (n, sorted edges, weights). Stable across runs and platforms.
    uint64_t canonical_hash() const;

    std::string str() const;

    bool operator==(const Graph &other) const {
        return n_ == other.n_ && edges_ == other.edges_ && weights_ == other.weights_;
    }

   private:
    size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::optional<std::vector<uint32_t>> weights_;
    size_t duplicates_dropped_ = 0;
};

Graph complete_graph(size_t n);
Graph empty_graph(size_t n);
Graph cycle_graph(size_t n);
Graph petersen_graph();

/// Edge present in the result iff absent in `g`. Weights are dropped.
Graph complement(const Graph &g);

struct WeightedExpansion {
    Graph graph;
    /// origin[k] is the vertex of the weighted input that copy k came from.
    std::vector<Vertex> origin;
};

/// Replaces every vertex of weight w by w pairwise non-adjacent copies, each
/// adjacent to all copies of the original neighbors. Copies of a vertex are
/// numbered consecutively, vertices in increasing id order.
WeightedExpansion expand_weighted(const Graph &g);

}  // namespace ctx

#endif
