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

#include "ctxcompile/ortho_rep.h"
#include "oracles.h"

namespace ctx {
namespace {

constexpr double kTol = kDefaultThetaTolerance;

TEST(KcbsRep, Construction) {
    OrthoRep rep = builtin_kcbs_rep();
    ASSERT_EQ(rep.dimension(), 3u);
    ASSERT_EQ(rep.vectors.size(), 5u);
    EXPECT_TRUE(rep.is_real());
    for (int k = 0; k < 5; k++) {
        EXPECT_NEAR(rep.vectors[k].norm(), 1.0, 1e-15);
        EXPECT_NEAR(std::norm(rep.vectors[k].dot(rep.psi)), 1 / std::sqrt(5.0), 1e-15);
        EXPECT_NEAR(std::abs(rep.vectors[k].dot(rep.vectors[(k + 1) % 5])), 0.0, 1e-15);
        EXPECT_GT(std::abs(rep.vectors[k].dot(rep.vectors[(k + 2) % 5])), 0.1);
    }
    EXPECT_NEAR(rep.overlap_sum(), std::sqrt(5.0), 1e-14);
    EXPECT_TRUE(verify_ortho_rep(cycle_graph(5), rep, 1e-12, std::sqrt(5.0)).ok());
}

TEST(VerifyOrthoRep, DetectsBrokenReps) {
    Graph c5 = cycle_graph(5);
    OrthoRep bad = builtin_kcbs_rep();
    bad.vectors[2] = bad.psi;
    OrthoRepReport r = verify_ortho_rep(c5, bad, 1e-9, std::sqrt(5.0));
    EXPECT_FALSE(r.orthogonality_ok);

    OrthoRep scaled = builtin_kcbs_rep();
    scaled.psi *= 2;
    for (auto &v : scaled.vectors) {
        v *= 2;
    }
    r = verify_ortho_rep(c5, scaled, 1e-9, std::sqrt(5.0));
    EXPECT_FALSE(r.norms_ok);

    r = verify_ortho_rep(c5, builtin_kcbs_rep(), 1e-9, 2.0);
    EXPECT_FALSE(r.sum_ok);
    EXPECT_TRUE(r.orthogonality_ok);

    EXPECT_THROW(verify_ortho_rep(cycle_graph(7), builtin_kcbs_rep(), 1e-9, 1), std::invalid_argument);
    OrthoRep mixed = builtin_kcbs_rep();
    mixed.vectors[0] = Eigen::VectorXcd::Ones(4);
    EXPECT_THROW(verify_ortho_rep(c5, mixed, 1e-9, 1), std::invalid_argument);
}

TEST(Extract, Pentagon) {
    Graph g = cycle_graph(5);
    SdpSolution s = theta(g);
    OrthoRep rep = extract_ortho_rep(g, s, kTol);
    EXPECT_EQ(rep.dimension(), 3u);
    EXPECT_TRUE(rep.is_real());
    EXPECT_NEAR(rep.overlap_sum(), std::sqrt(5.0), 100 * kTol);
    // Same overlaps as the hand-built representation.
    for (const auto &v : rep.vectors) {
        EXPECT_NEAR(std::norm(v.dot(rep.psi)), 1 / std::sqrt(5.0), 100 * kTol);
    }
}

TEST(Extract, EmptyGraphCollapsesOntoPsi) {
    Graph g = empty_graph(4);
    OrthoRep rep = extract_ortho_rep(g, theta(g), kTol);
    EXPECT_NEAR(rep.overlap_sum(), 4.0, 100 * kTol);
    for (const auto &v : rep.vectors) {
        EXPECT_NEAR(std::abs(v.dot(rep.psi)), 1.0, 100 * kTol);
    }
}

TEST(Extract, SingleVertex) {
    Graph g(1, {});
    OrthoRep rep = extract_ortho_rep(g, theta(g), kTol);
    EXPECT_NEAR(std::abs(rep.vectors[0].dot(rep.psi)), 1.0, 1e-12);
}

TEST(Extract, RequiresConvergence) {
    Graph g = cycle_graph(5);
    SdpSolution s = theta(g);
    s.status = SdpStatus::MaxIterations;
    EXPECT_THROW(extract_ortho_rep(g, s, kTol), ExtractionError);
}

TEST(Extract, RejectsCorruptedOptimum) {
    Graph g = cycle_graph(5);
    SdpSolution s = theta(g);
    s.primal_value += 0.1;
    EXPECT_THROW(extract_ortho_rep(g, s, kTol), ExtractionError);
}

// Complete graphs have one nonzero X_ii at the optimum: every other column
// vanishes and has to be completed orthogonally, growing the dimension.
TEST(Extract, ZeroColumnsAreCompleted) {
    Graph g = complete_graph(4);
    SdpSolution s = theta(g);
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(4, 4);
    X(2, 2) = 1;
    s.X = X;
    s.primal_value = 1;
    OrthoRep rep = extract_ortho_rep(g, s, kTol);
    EXPECT_EQ(rep.dimension(), 4u);
    EXPECT_TRUE(verify_ortho_rep(g, rep, 1e-12, 1.0).ok());
}

// Vertices 0 and 3 have the same neighborhood up to each other, so their
// optimal vectors coincide and only differ by solver noise. That noise must
// not be treated as a second direction when fixing their common neighbor 1.
TEST(Extract, NearDuplicateNeighbors) {
    Graph g(7, {{0, 1}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 5}, {2, 6}, {3, 4}, {3, 5}, {5, 6}});
    SdpSolution s = theta(g);
    OrthoRep rep = extract_ortho_rep(g, s, kTol);
    EXPECT_TRUE(verify_ortho_rep(g, rep, 100 * kTol, s.primal_value).ok());
}

TEST(Extract, RandomGraphsVerify) {
    std::mt19937_64 rng(77);
    const double densities[] = {0.2, 0.5, 0.8};
    for (int t = 0; t < 40; t++) {
        Graph g = oracle::random_graph(2 + t % 8, densities[t % 3], rng);
        SdpSolution s = theta(g);
        ASSERT_EQ(s.status, SdpStatus::Converged);
        OrthoRep rep = extract_ortho_rep(g, s, kTol);
        EXPECT_TRUE(verify_ortho_rep(g, rep, 100 * kTol, s.primal_value).ok()) << g.str();
    }
}

}  // namespace
}  // namespace ctx
