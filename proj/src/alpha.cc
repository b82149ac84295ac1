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

#include "ctxcompile/alpha.h"

#include <array>
#include <bit>
#include <limits>

namespace ctx {

namespace {

/// Fixed-capacity vertex set.
struct VertexSet {
    static constexpr size_t kWords = kMaxAlphaCapacity / 64;
    std::array<uint64_t, kWords> w{};

    void set(size_t v) {
        w[v >> 6] |= uint64_t{1} << (v & 63);
    }
    void reset(size_t v) {
        w[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }
    bool test(size_t v) const {
        return (w[v >> 6] >> (v & 63)) & 1;
    }
    bool empty() const {
        for (auto x : w) {
            if (x) {
                return false;
            }
        }
        return true;
    }
    size_t count() const {
        size_t c = 0;
        for (auto x : w) {
            c += std::popcount(x);
        }
        return c;
    }
    /// Lowest member; call only when non-empty.
    size_t first() const {
        for (size_t k = 0; k < kWords; k++) {
            if (w[k]) {
                return k * 64 + std::countr_zero(w[k]);
            }
        }
        return kMaxAlphaCapacity;
    }
    VertexSet operator&(const VertexSet &o) const {
        VertexSet r;
        for (size_t k = 0; k < kWords; k++) {
            r.w[k] = w[k] & o.w[k];
        }
        return r;
    }
    VertexSet minus(const VertexSet &o) const {
        VertexSet r;
        for (size_t k = 0; k < kWords; k++) {
            r.w[k] = w[k] & ~o.w[k];
        }
        return r;
    }
    size_t count_and(const VertexSet &o) const {
        size_t c = 0;
        for (size_t k = 0; k < kWords; k++) {
            c += std::popcount(w[k] & o.w[k]);
        }
        return c;
    }
    template <typename F>
    void for_each(F &&f) const {
        for (size_t k = 0; k < kWords; k++) {
            uint64_t x = w[k];
            while (x) {
                f(k * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

struct Search {
    std::vector<VertexSet> adj;
    VertexSet current;
    size_t current_size = 0;
    VertexSet best;
    size_t best_size = 0;
    uint64_t nodes = 0;

    size_t clique_cover_bound(VertexSet p) const {
        size_t cliques = 0;
        while (!p.empty()) {
            size_t v = p.first();
            p.reset(v);
            VertexSet cand = p & adj[v];
            while (!cand.empty()) {
                size_t u = cand.first();
                p.reset(u);
                cand.reset(u);
                cand = cand & adj[u];
            }
            cliques++;
        }
        return cliques;
    }

    void record_if_better() {
        if (current_size > best_size) {
            best_size = current_size;
            best = current;
        }
    }

    void expand(VertexSet p) {
        nodes++;
        if (p.empty()) {
            record_if_better();
            return;
        }
        if (current_size + clique_cover_bound(p) <= best_size) {
            return;
        }

        size_t pivot = 0;
        size_t pivot_degree = 0;
        bool found = false;
        p.for_each([&](size_t v) {
            size_t d = p.count_and(adj[v]);
            if (!found || d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
                found = true;
            }
        });

        if (pivot_degree == 0) {
            // No edges left: every remaining vertex joins.
            VertexSet saved = current;
            size_t saved_size = current_size;
            p.for_each([&](size_t v) { current.set(v); });
            current_size += p.count();
            record_if_better();
            current = saved;
            current_size = saved_size;
            return;
        }

        // Include the pivot.
        VertexSet with = p.minus(adj[pivot]);
        with.reset(pivot);
        current.set(pivot);
        current_size++;
        expand(with);
        current.reset(pivot);
        current_size--;

        // Exclude it.
        p.reset(pivot);
        expand(p);
    }
};

void check_vertex_count(const Graph &g, size_t limit, const char *what) {
    if (g.num_vertices() > limit) {
        throw SizeLimitError(
            std::string(what) + ": graph has " + std::to_string(g.num_vertices()) + " vertices, limit is " +
            std::to_string(limit));
    }
}

}  // namespace

IndependenceResult independence_number(const Graph &g, size_t vertex_limit) {
    check_vertex_count(g, std::min(vertex_limit, kMaxAlphaCapacity), "independence_number");
    size_t n = g.num_vertices();
    Search s;
    s.adj.resize(n);
    for (auto [a, b] : g.edges()) {
        s.adj[a].set(b);
        s.adj[b].set(a);
    }
    VertexSet all;
    for (size_t v = 0; v < n; v++) {
        all.set(v);
    }
    s.expand(all);

    IndependenceResult result;
    result.alpha = s.best_size;
    result.node_count = s.nodes;
    s.best.for_each([&](size_t v) { result.witness.push_back(static_cast<Vertex>(v)); });
    return result;
}

bool is_independent(const Graph &g, const std::vector<Vertex> &vertices) {
    for (Vertex v : vertices) {
        if (v >= g.num_vertices()) {
            throw std::out_of_range("vertex " + std::to_string(v) + " is not in the graph");
        }
    }
    for (size_t p = 0; p < vertices.size(); p++) {
        for (size_t q = p + 1; q < vertices.size(); q++) {
            if (g.has_edge(vertices[p], vertices[q])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

/// Calls f(mask) for every independent subset, built incrementally from the
/// subset with its lowest bit removed.
template <typename F>
void for_each_independent_subset(const Graph &g, F &&f) {
    check_vertex_count(g, kBruteForceVertexLimit, "brute force enumeration");
    size_t n = g.num_vertices();
    std::vector<uint32_t> adj(n, 0);
    for (auto [a, b] : g.edges()) {
        adj[a] |= uint32_t{1} << b;
        adj[b] |= uint32_t{1} << a;
    }
    uint32_t total = uint32_t{1} << n;
    std::vector<uint8_t> independent(total, 0);
    independent[0] = 1;
    f(uint32_t{0});
    for (uint32_t mask = 1; mask < total; mask++) {
        uint32_t low = std::countr_zero(mask);
        uint32_t rest = mask & (mask - 1);
        if (independent[rest] && !(adj[low] & rest)) {
            independent[mask] = 1;
            f(mask);
        }
    }
}

}  // namespace

size_t brute_force_alpha(const Graph &g) {
    size_t best = 0;
    for_each_independent_subset(g, [&](uint32_t mask) { best = std::max<size_t>(best, std::popcount(mask)); });
    return best;
}

uint64_t brute_force_weighted_alpha(const Graph &g) {
    uint64_t best = 0;
    for_each_independent_subset(g, [&](uint32_t mask) {
        uint64_t w = 0;
        for (uint32_t m = mask; m; m &= m - 1) {
            w += g.weight(std::countr_zero(m));
        }
        best = std::max(best, w);
    });
    return best;
}

int64_t noncontextual_assignment_value(const Graph &g, const std::vector<uint8_t> &assignment) {
    if (assignment.size() != g.num_vertices()) {
        throw std::invalid_argument("assignment must cover every vertex");
    }
    int64_t value = 0;
    for (auto a : assignment) {
        value += a ? 1 : 0;
    }
    for (auto [i, j] : g.edges()) {
        value -= (assignment[i] && assignment[j]) ? 1 : 0;
    }
    return value;
}

int64_t max_noncontextual_value(const Graph &g) {
    check_vertex_count(g, kBruteForceVertexLimit, "max_noncontextual_value");
    size_t n = g.num_vertices();
    int64_t best = std::numeric_limits<int64_t>::min();
    std::vector<uint8_t> assignment(n);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
        for (size_t v = 0; v < n; v++) {
            assignment[v] = (mask >> v) & 1;
        }
        best = std::max(best, noncontextual_assignment_value(g, assignment));
    }
    return best;
}

}  // namespace ctx
