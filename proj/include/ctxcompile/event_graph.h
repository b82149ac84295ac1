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

#ifndef CTXCOMPILE_EVENT_GRAPH_H
#define CTXCOMPILE_EVENT_GRAPH_H

#include <string>
#include <vector>

#include "ctxcompile/graph.h"

namespace ctx {

/// A measurement event: either a single observable with one outcome, or an
/// ordered pair of compatible observables (an edge of the source graph, the
/// smaller id first) with an outcome for each.
struct EventLabel {
    enum class Kind : uint8_t { Single, Pair };

    Kind kind = Kind::Single;
    Vertex obs_a = 0;
    Vertex obs_b = 0;
    uint8_t out_a = 0;
    uint8_t out_b = 0;

    static EventLabel single(Vertex obs, uint8_t outcome) {
        return {Kind::Single, obs, obs, outcome, outcome};
    }
    /// Throws std::invalid_argument unless (a, b) is an edge of `g`.
    static EventLabel pair(const Graph &g, Vertex a, Vertex b, uint8_t out_a, uint8_t out_b);

    bool is_single() const {
        return kind == Kind::Single;
    }
    /// Observables touched by this event, with their assigned outcomes.
    size_t arity() const {
        return is_single() ? 1 : 2;
    }
    Vertex observable(size_t k) const {
        return k == 0 ? obs_a : obs_b;
    }
    uint8_t outcome(size_t k) const {
        return k == 0 ? out_a : out_b;
    }

    /// "1|3" or "01|2,5".
    std::string str() const;

    bool operator==(const EventLabel &) const = default;
};

/// True iff the two events cannot both occur: some observable gets two
/// different outcomes, or two observables adjacent in `g` both get outcome 1.
bool are_exclusive(const EventLabel &e1, const EventLabel &e2, const Graph &g);

/// The compiled two-point graph. Vertex k of `graph` is the event
/// `labels[k]`; edges are exactly the exclusive label pairs.
struct EventGraph {
    Graph source;
    std::vector<EventLabel> labels;
    Graph graph;
};

/// Compiles `g` (unweighted) into its two-point event graph: one Single(i,1)
/// per vertex in id order, then for each edge (i,j) in sorted order the
/// events 00, 01, 10. The 11 event is never a vertex.
///
/// Throws std::invalid_argument for weighted input; expand it first.
EventGraph build_two_point_graph(const Graph &g);

}  // namespace ctx

#endif
