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

#ifndef CTXCOMPILE_ALPHA_H
#define CTXCOMPILE_ALPHA_H

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ctxcompile/graph.h"

namespace ctx {

/// Thrown when an exact search is asked to handle a graph above its limit.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

/// Largest vertex count the bitset search can represent at all.
constexpr size_t kMaxAlphaCapacity = 256;
constexpr size_t kDefaultAlphaVertexLimit = 64;
constexpr size_t kBruteForceVertexLimit = 24;

struct IndependenceResult {
    size_t alpha = 0;
    /// One maximum independent set, ascending.
    std::vector<Vertex> witness;
    uint64_t node_count = 0;
};

/// Exact independence number by branch and bound: branch on a vertex of
/// maximum degree in the remaining subgraph (lowest id on ties), prune with a
/// greedy clique-cover bound.
///
/// Throws SizeLimitError if n(g) > vertex_limit (or > kMaxAlphaCapacity).
IndependenceResult independence_number(const Graph &g, size_t vertex_limit = kDefaultAlphaVertexLimit);

/// Throws std::out_of_range for a vertex outside g.
bool is_independent(const Graph &g, const std::vector<Vertex> &vertices);

/// Exhaustive subset enumeration; test oracle only. Throws SizeLimitError
/// above kBruteForceVertexLimit vertices.
size_t brute_force_alpha(const Graph &g);

/// Same enumeration, maximizing the total vertex weight.
uint64_t brute_force_weighted_alpha(const Graph &g);

/// Value of sum_i a_i - sum_{(i,j) in E} a_i a_j for a 0/1 assignment.
/// Negative when the assignment puts 1 on both ends of many edges.
int64_t noncontextual_assignment_value(const Graph &g, const std::vector<uint8_t> &assignment);

/// Max of noncontextual_assignment_value over all 2^n assignments.
int64_t max_noncontextual_value(const Graph &g);

}  // namespace ctx

#endif
