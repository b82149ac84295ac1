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

#include <cmath>

#include "ctxcompile/event_graph.h"
#include "ctxcompile/theta.h"
#include "oracles.h"

namespace ctx {
namespace {

constexpr double kTol = kDefaultThetaTolerance;

void expect_certified(const Graph &g, const SdpSolution &s) {
    ASSERT_EQ(s.status, SdpStatus::Converged) << g.str();
    EXPECT_LE(std::abs(s.gap()), s.tolerance);
    FeasibilityReport r = verify_feasibility(g, s.X, s.tolerance);
    EXPECT_TRUE(r.ok()) << "min eig " << r.min_eigenvalue << " trace " << r.trace_error << " edge "
                        << r.max_edge_entry;
}

TEST(Theta, OddCycleFormula) {
    EXPECT_NEAR(odd_cycle_theta(5), std::sqrt(5.0), 1e-12);
    // n cos(pi/n) / (1 + cos(pi/n)), evaluated outside this code base.
    EXPECT_NEAR(odd_cycle_theta(7), 3.317667207394096, 1e-12);
    EXPECT_NEAR(odd_cycle_theta(9), 4.360089581434065, 1e-12);
    EXPECT_THROW(odd_cycle_theta(6), std::invalid_argument);
    EXPECT_THROW(odd_cycle_theta(3), std::invalid_argument);
}

TEST(Theta, OddCycles) {
    for (size_t n : {5, 7, 9, 11, 13}) {
        Graph g = cycle_graph(n);
        SdpSolution s = theta(g);
        expect_certified(g, s);
        EXPECT_NEAR(s.primal_value, odd_cycle_theta(n), 10 * kTol) << n;
    }
}

TEST(Theta, TrivialFamilies) {
    for (size_t n : {1, 2, 3, 6}) {
        EXPECT_NEAR(theta(empty_graph(n)).primal_value, static_cast<double>(n), 10 * kTol);
        EXPECT_NEAR(theta(complete_graph(n)).primal_value, 1.0, 10 * kTol);
    }
}

TEST(Theta, SingleVertexShortCircuit) {
    SdpSolution s = theta(Graph(1, {}));
    EXPECT_EQ(s.primal_value, 1.0);
    EXPECT_EQ(s.status, SdpStatus::Converged);
    EXPECT_EQ(s.iterations, 0);
}

TEST(Theta, Petersen) {
    Graph g = petersen_graph();
    SdpSolution s = theta(g);
    expect_certified(g, s);
    EXPECT_NEAR(s.primal_value, 4.0, 10 * kTol);
}

TEST(Theta, RejectsBadInput) {
    EXPECT_THROW(theta(Graph(0, {})), std::invalid_argument);
    EXPECT_THROW(theta(cycle_graph(5), {1e-11, 100}), std::invalid_argument);
    EXPECT_THROW(theta(cycle_graph(5), {1e-2, 100}), std::invalid_argument);
}

TEST(Theta, IterationCapReportsStatus) {
    SdpSolution s = theta(cycle_graph(7), {1e-10, 2});
    EXPECT_EQ(s.status, SdpStatus::MaxIterations);
    EXPECT_EQ(s.X.rows(), 7);
}

// For vertex-transitive graphs theta(G) theta(complement G) = n.
TEST(Theta, VertexTransitiveProduct) {
    for (const Graph &g : {cycle_graph(5), cycle_graph(7), petersen_graph(), cycle_graph(8)}) {
        double a = theta(g).primal_value;
        double b = theta(complement(g)).primal_value;
        EXPECT_NEAR(a * b, static_cast<double>(g.num_vertices()), 1e-5) << g.str();
    }
}

// Disjoint union adds, and for perfect graphs (here bipartite) theta = alpha.
TEST(Theta, UnionAndPerfectGraphs) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < 5; v++) {
        e.emplace_back(v, (v + 1) % 5);
        e.emplace_back(5 + v, 5 + (v + 1) % 5);
    }
    EXPECT_NEAR(theta(Graph(10, e)).primal_value, 2 * std::sqrt(5.0), 10 * kTol);

    std::mt19937_64 rng(4);
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < 10; t++) {
        std::vector<Edge> bip;
        for (Vertex a = 0; a < 4; a++) {
            for (Vertex b = 4; b < 9; b++) {
                if (coin(rng)) {
                    bip.emplace_back(a, b);
                }
            }
        }
        Graph g(9, bip);
        EXPECT_NEAR(theta(g).primal_value, static_cast<double>(oracle::alpha(g)), 10 * kTol) << g.str();
    }
}

TEST(Theta, MonotoneUnderEdgeInsertion) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 15; t++) {
        Graph g = oracle::random_graph(7, 0.3, rng);
        Graph c = complement(g);
        if (c.num_edges() == 0) {
            continue;
        }
        std::vector<Edge> more = g.edges();
        more.push_back(c.edges()[static_cast<size_t>(t) % c.num_edges()]);
        Graph h(g.num_vertices(), more);
        EXPECT_LE(theta(h).primal_value, theta(g).primal_value + kTol);
    }
}

TEST(Theta, SandwichAndCertificates) {
    std::mt19937_64 rng(21);
    const double densities[] = {0.2, 0.5, 0.8};
    for (int t = 0; t < 30; t++) {
        Graph g = oracle::random_graph(3 + t % 7, densities[t % 3], rng);
        Sandwich s = theta_sandwich(g);
        expect_certified(g, s.solution);
        EXPECT_EQ(s.alpha, oracle::alpha(g));
        EXPECT_LE(static_cast<double>(s.alpha), s.theta + kTol);
    }
}

TEST(Theta, SandwichExamples) {
    Sandwich c5 = theta_sandwich(cycle_graph(5));
    EXPECT_EQ(c5.alpha, 2u);
    EXPECT_NEAR(c5.theta, 2.2360680, 1e-6);
    Sandwich gadget = theta_sandwich(build_two_point_graph(complete_graph(2)).graph);
    EXPECT_EQ(gadget.alpha, 2u);
    EXPECT_NEAR(gadget.theta, 2.0, 1e-6);
    Sandwich e3 = theta_sandwich(empty_graph(3));
    EXPECT_EQ(e3.alpha, 3u);
    EXPECT_NEAR(e3.theta, 3.0, 1e-6);
}

TEST(Theta, TransferIdentitySmallGraphs) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 12; t++) {
        Graph g = oracle::random_graph(3 + t % 7, 0.2 + 0.3 * (t % 3), rng);
        double base = theta(g).primal_value;
        SdpSolution lifted = theta(build_two_point_graph(g).graph);
        ASSERT_EQ(lifted.status, SdpStatus::Converged);
        EXPECT_NEAR(lifted.primal_value - base, static_cast<double>(g.num_edges()), 10 * kTol) << g.str();
    }
}

TEST(VerifyFeasibility, Examples) {
    Graph e = empty_graph(4);
    Eigen::MatrixXd J = Eigen::MatrixXd::Constant(4, 4, 0.25);
    FeasibilityReport r = verify_feasibility(e, J, 1e-9);
    EXPECT_TRUE(r.ok());
    EXPECT_NEAR(r.trace_error, 0.0, 1e-15);
    EXPECT_EQ(r.max_edge_entry, 0.0);

    Graph k2 = complete_graph(2);
    Eigen::MatrixXd X(2, 2);
    X << 0.5, 0.01, 0.01, 0.5;
    r = verify_feasibility(k2, X, 1e-6);
    EXPECT_FALSE(r.edges_ok);
    EXPECT_TRUE(r.trace_ok);
    EXPECT_TRUE(r.psd_ok);

    X << 1.5, 0, 0, -0.5;
    r = verify_feasibility(k2, X, 1e-6);
    EXPECT_FALSE(r.psd_ok);

    EXPECT_THROW(verify_feasibility(k2, Eigen::MatrixXd::Identity(3, 3), 1e-6), std::invalid_argument);
}

}  // namespace
}  // namespace ctx
