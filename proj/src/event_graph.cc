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

#include "ctxcompile/event_graph.h"

#include <algorithm>
#include <stdexcept>

namespace ctx {

EventLabel EventLabel::pair(const Graph &g, Vertex a, Vertex b, uint8_t out_a, uint8_t out_b) {
    if (!g.has_edge(a, b)) {
        throw std::invalid_argument(
            "pair event on (" + std::to_string(a) + "," + std::to_string(b) + ") which is not an edge");
    }
    if (a > b) {
        std::swap(a, b);
        std::swap(out_a, out_b);
    }
    return {Kind::Pair, a, b, static_cast<uint8_t>(out_a & 1), static_cast<uint8_t>(out_b & 1)};
}

std::string EventLabel::str() const {
    if (is_single()) {
        return std::to_string(out_a) + "|" + std::to_string(obs_a);
    }
    return std::to_string(out_a) + std::to_string(out_b) + "|" + std::to_string(obs_a) + "," + std::to_string(obs_b);
}

bool are_exclusive(const EventLabel &e1, const EventLabel &e2, const Graph &g) {
    for (size_t p = 0; p < e1.arity(); p++) {
        for (size_t q = 0; q < e2.arity(); q++) {
            Vertex o1 = e1.observable(p);
            Vertex o2 = e2.observable(q);
            uint8_t r1 = e1.outcome(p);
            uint8_t r2 = e2.outcome(q);
            if (o1 == o2 && r1 != r2) {
                return true;
            }
            if (r1 == 1 && r2 == 1 && g.has_edge(o1, o2)) {
                return true;
            }
        }
    }
    return false;
}

EventGraph build_two_point_graph(const Graph &g) {
    if (g.is_weighted()) {
        throw std::invalid_argument("build_two_point_graph needs an unweighted graph; apply expand_weighted first");
    }
    std::vector<EventLabel> labels;
    labels.reserve(g.num_vertices() + 3 * g.num_edges());
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        labels.push_back(EventLabel::single(v, 1));
    }
    for (auto [a, b] : g.edges()) {
        labels.push_back(EventLabel::pair(g, a, b, 0, 0));
        labels.push_back(EventLabel::pair(g, a, b, 0, 1));
        labels.push_back(EventLabel::pair(g, a, b, 1, 0));
    }

    std::vector<Edge> edges;
    for (Vertex p = 0; p < labels.size(); p++) {
        for (Vertex q = p + 1; q < labels.size(); q++) {
            if (are_exclusive(labels[p], labels[q], g)) {
                edges.emplace_back(p, q);
            }
        }
    }
    Graph compiled(labels.size(), edges);
    return {g, std::move(labels), std::move(compiled)};
}

}  // namespace ctx
