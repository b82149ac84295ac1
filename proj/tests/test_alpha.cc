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

#include "ctxcompile/alpha.h"
#include "ctxcompile/event_graph.h"
#include "oracles.h"

namespace ctx {
namespace {

TEST(Alpha, Families) {
    EXPECT_EQ(independence_number(cycle_graph(5)).alpha, 2u);
    EXPECT_EQ(independence_number(cycle_graph(9)).alpha, 4u);
    EXPECT_EQ(independence_number(complete_graph(6)).alpha, 1u);
    EXPECT_EQ(independence_number(empty_graph(6)).alpha, 6u);
    EXPECT_EQ(independence_number(petersen_graph()).alpha, 4u);
    EXPECT_EQ(independence_number(Graph(0, {})).alpha, 0u);
}

TEST(Alpha, WitnessIsIndependentAndSorted) {
    IndependenceResult r = independence_number(petersen_graph());
    EXPECT_EQ(r.witness.size(), r.alpha);
    EXPECT_TRUE(is_independent(petersen_graph(), r.witness));
    EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
}

TEST(Alpha, IsIndependent) {
    Graph g = cycle_graph(5);
    EXPECT_TRUE(is_independent(g, {0, 2}));
    EXPECT_FALSE(is_independent(g, {0, 1}));
    EXPECT_TRUE(is_independent(g, {}));
    EXPECT_THROW(is_independent(g, {7}), std::out_of_range);
}

TEST(Alpha, VertexLimit) {
    EXPECT_THROW(independence_number(empty_graph(65)), SizeLimitError);
    EXPECT_EQ(independence_number(empty_graph(65), 65).alpha, 65u);
    EXPECT_THROW(independence_number(empty_graph(257), 1000), SizeLimitError);
    EXPECT_THROW(brute_force_alpha(empty_graph(25)), SizeLimitError);
}

TEST(Alpha, BranchAndBoundAgreesWithOracles) {
    std::mt19937_64 rng(2024);
    const double densities[] = {0.2, 0.5, 0.8};
    int count = 0;
    for (int t = 0; t < 240; t++) {
        size_t n = 1 + t % 16;
        Graph g = oracle::random_graph(n, densities[t % 3], rng);
        size_t expected = oracle::alpha(g);
        IndependenceResult r = independence_number(g);
        ASSERT_EQ(r.alpha, expected) << g.str();
        ASSERT_EQ(brute_force_alpha(g), expected);
        ASSERT_TRUE(is_independent(g, r.witness));
        ASSERT_EQ(r.witness.size(), r.alpha);
        count++;
    }
    EXPECT_GE(count, 200);
}

TEST(Alpha, LargerSparseGraphs) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 10; t++) {
        Graph g = oracle::random_graph(30, 0.15, rng);
        EXPECT_EQ(independence_number(g).alpha, oracle::alpha(g));
    }
}

TEST(Alpha, WeightedBruteForce) {
    Graph c5w(5, cycle_graph(5).edges(), std::vector<uint32_t>{2, 1, 1, 1, 1});
    EXPECT_EQ(brute_force_weighted_alpha(c5w), 3u);
    EXPECT_EQ(oracle::weighted_alpha(c5w), 3u);
    Graph k2w(2, {{0, 1}}, std::vector<uint32_t>{2, 1});
    EXPECT_EQ(brute_force_weighted_alpha(k2w), 2u);
    EXPECT_EQ(independence_number(expand_weighted(k2w).graph).alpha, 2u);
}

TEST(Alpha, K2GadgetAlpha) {
    EventGraph eg = build_two_point_graph(complete_graph(2));
    EXPECT_EQ(independence_number(eg.graph).alpha, 2u);
    EXPECT_EQ(oracle::alpha(eg.graph), 2u);
}

TEST(NoncontextualValue, Examples) {
    Graph g = complete_graph(2);
    EXPECT_EQ(noncontextual_assignment_value(g, {0, 0}), 0);
    EXPECT_EQ(noncontextual_assignment_value(g, {1, 1}), 1);
    EXPECT_EQ(noncontextual_assignment_value(g, {1, 0}), 1);
    EXPECT_THROW(noncontextual_assignment_value(g, {1}), std::invalid_argument);
    EXPECT_EQ(noncontextual_assignment_value(cycle_graph(5), {1, 1, 1, 1, 1}), 0);
}

TEST(NoncontextualValue, MaximumEqualsAlpha) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 60; t++) {
        Graph g = oracle::random_graph(1 + t % 12, 0.2 + 0.3 * (t % 3), rng);
        int64_t best = max_noncontextual_value(g);
        EXPECT_EQ(best, oracle::classical_max(g));
        EXPECT_EQ(best, static_cast<int64_t>(oracle::alpha(g)));
    }
}

}  // namespace
}  // namespace ctx
