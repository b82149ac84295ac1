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

#include <gtest/gtest.h>

#include <set>

#include "ctxcompile/event_graph.h"
#include "oracles.h"

namespace ctx {
namespace {

TEST(EventLabel, Strings) {
    Graph g = complete_graph(3);
    EXPECT_EQ(EventLabel::single(3, 1).str(), "1|3");
    EXPECT_EQ(EventLabel::pair(g, 0, 2, 0, 1).str(), "01|0,2");
}

TEST(EventLabel, PairNeedsAnEdge) {
    Graph g(3, {{0, 1}});
    EXPECT_THROW(EventLabel::pair(g, 0, 2, 0, 0), std::invalid_argument);
}

TEST(EventLabel, PairIsStoredSmallerFirst) {
    Graph g(3, {{0, 1}});
    EventLabel e = EventLabel::pair(g, 1, 0, 1, 0);
    EXPECT_EQ(e.obs_a, 0u);
    EXPECT_EQ(e.out_a, 0);
    EXPECT_EQ(e.out_b, 1);
}

TEST(Exclusivity, Examples) {
    Graph g = complete_graph(2);
    auto s0 = EventLabel::single(0, 1);
    auto s1 = EventLabel::single(1, 1);
    EXPECT_TRUE(are_exclusive(s0, s1, g));
    EXPECT_TRUE(are_exclusive(s0, EventLabel::pair(g, 0, 1, 0, 0), g));
    EXPECT_FALSE(are_exclusive(s0, EventLabel::pair(g, 0, 1, 1, 0), g));
    EXPECT_TRUE(are_exclusive(EventLabel::pair(g, 0, 1, 0, 1), EventLabel::pair(g, 0, 1, 1, 0), g));
}

TEST(Exclusivity, AcrossGadgets) {
    // Path 0-1-2. 10 on (0,1) and 01 on (1,2) agree on vertex 1; 0 and 2
    // are both 1 but not adjacent.
    Graph g(3, {{0, 1}, {1, 2}});
    auto a = EventLabel::pair(g, 0, 1, 1, 0);
    auto b = EventLabel::pair(g, 1, 2, 0, 1);
    EXPECT_FALSE(are_exclusive(a, b, g));
    // 01 on (0,1) and 10 on (1,2) give vertex 1 the same outcome 1 twice: fine.
    EXPECT_FALSE(are_exclusive(EventLabel::pair(g, 0, 1, 0, 1), EventLabel::pair(g, 1, 2, 1, 0), g));
    // 01 on (0,1) vs 00 on (1,2): vertex 1 gets 1 and 0.
    EXPECT_TRUE(are_exclusive(EventLabel::pair(g, 0, 1, 0, 1), EventLabel::pair(g, 1, 2, 0, 0), g));
    // Single 1|0 and 01 on (1,2): 0 and 1 are adjacent and both 1.
    EXPECT_TRUE(are_exclusive(EventLabel::single(0, 1), EventLabel::pair(g, 1, 2, 1, 0), g));
}

TEST(TwoPointGraph, K2GadgetExact) {
    EventGraph eg = build_two_point_graph(complete_graph(2));
    ASSERT_EQ(eg.graph.num_vertices(), 5u);
    std::vector<std::string> labels;
    for (const auto &l : eg.labels) {
        labels.push_back(l.str());
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"1|0", "1|1", "00|0,1", "01|0,1", "10|0,1"}));
    // 1|a, 1|b, 00, 01, 10 = vertices 0..4.
    std::vector<Edge> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    EXPECT_EQ(eg.graph.edges(), expected);
}

TEST(TwoPointGraph, SizeAndOrder) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; t++) {
        Graph g = oracle::random_graph(1 + t % 7, 0.5, rng);
        EventGraph eg = build_two_point_graph(g);
        ASSERT_EQ(eg.graph.num_vertices(), g.num_vertices() + 3 * g.num_edges());
        for (Vertex v = 0; v < g.num_vertices(); v++) {
            EXPECT_EQ(eg.labels[v], EventLabel::single(v, 1));
        }
        size_t k = g.num_vertices();
        for (auto [a, b] : g.edges()) {
            EXPECT_EQ(eg.labels[k++].str(), "00|" + std::to_string(a) + "," + std::to_string(b));
            EXPECT_EQ(eg.labels[k++].str(), "01|" + std::to_string(a) + "," + std::to_string(b));
            EXPECT_EQ(eg.labels[k++].str(), "10|" + std::to_string(a) + "," + std::to_string(b));
        }
    }
}

TEST(TwoPointGraph, EdgesMatchAssignmentOracle) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; t++) {
        Graph g = oracle::random_graph(2 + t % 6, 0.2 + 0.3 * (t % 3), rng);
        EventGraph eg = build_two_point_graph(g);
        size_t n = eg.labels.size();
        for (Vertex a = 0; a < n; a++) {
            EXPECT_FALSE(are_exclusive(eg.labels[a], eg.labels[a], g)) << "irreflexive";
            for (Vertex b = a + 1; b < n; b++) {
                bool expected = oracle::exclusive_by_assignments(eg.labels[a], eg.labels[b], g);
                EXPECT_EQ(eg.graph.has_edge(a, b), expected) << eg.labels[a].str() << " " << eg.labels[b].str();
                EXPECT_EQ(are_exclusive(eg.labels[a], eg.labels[b], g),
                          are_exclusive(eg.labels[b], eg.labels[a], g));
            }
        }
    }
}

TEST(TwoPointGraph, EmptyGraphIsUnchanged) {
    EventGraph eg = build_two_point_graph(empty_graph(4));
    EXPECT_EQ(eg.graph, empty_graph(4));
}

TEST(TwoPointGraph, RejectsWeighted) {
    Graph g(2, {{0, 1}}, std::vector<uint32_t>{2, 1});
    EXPECT_THROW(build_two_point_graph(g), std::invalid_argument);
}

TEST(TwoPointGraph, Deterministic) {
    Graph g = petersen_graph();
    EXPECT_EQ(build_two_point_graph(g).graph, build_two_point_graph(g).graph);
}

}  // namespace
}  // namespace ctx
