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

#include "ctxcompile/certify.h"
#include "oracles.h"

namespace ctx {
namespace {

CertifyOptions exact_only() {
    CertifyOptions o;
    o.monte_carlo = false;
    return o;
}

bool all_pass(const CertifyReport &r) {
    for (const auto &c : checks(r)) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

TEST(Certify, Pentagon) {
    CertifyReport r = certify(cycle_graph(5), exact_only());
    ASSERT_TRUE(r.complete());
    EXPECT_EQ(r.alpha->alpha, 2u);
    EXPECT_NEAR(r.theta->primal_value, std::sqrt(5.0), 1e-6);
    EXPECT_EQ(*r.compiled_vertices, 20u);
    EXPECT_EQ(r.alpha_prime->alpha, 7u);
    EXPECT_NEAR(r.theta_prime->primal_value, 5 + std::sqrt(5.0), 1e-5);
    EXPECT_NEAR(*r.S_exact, std::sqrt(5.0), 1e-5);
    EXPECT_TRUE(all_pass(r));
    EXPECT_EQ(exit_code(r), 0);
}

TEST(Certify, SingleEdge) {
    CertifyReport r = certify(complete_graph(2), exact_only());
    ASSERT_TRUE(r.complete());
    EXPECT_EQ(r.alpha->alpha, 1u);
    EXPECT_NEAR(r.theta->primal_value, 1.0, 1e-6);
    EXPECT_EQ(*r.compiled_vertices, 5u);
    EXPECT_EQ(*r.compiled_edges, 8u);
    EXPECT_EQ(r.alpha_prime->alpha, 2u);
    EXPECT_NEAR(r.theta_prime->primal_value, 2.0, 1e-6);
    EXPECT_NEAR(*r.S_exact, 1.0, 1e-6);
    EXPECT_TRUE(all_pass(r));
}

TEST(Certify, EmptyGraph) {
    CertifyReport r = certify(empty_graph(4), exact_only());
    ASSERT_TRUE(r.complete());
    EXPECT_EQ(r.alpha->alpha, 4u);
    EXPECT_NEAR(r.theta->primal_value, 4.0, 1e-6);
    EXPECT_EQ(*r.compiled_vertices, 4u);
    EXPECT_EQ(*r.compiled_edges, 0u);
    EXPECT_TRUE(all_pass(r));
}

TEST(Certify, WeightedPentagon) {
    Graph g(5, cycle_graph(5).edges(), std::vector<uint32_t>{2, 1, 1, 1, 1});
    CertifyReport r = certify(g, exact_only());
    ASSERT_TRUE(r.complete());
    EXPECT_EQ(r.graph.num_vertices(), 6u);
    EXPECT_EQ(r.alpha->alpha, oracle::weighted_alpha(g));
    EXPECT_TRUE(all_pass(r));
}

TEST(Certify, StageErrorIsReported) {
    CertifyOptions o = exact_only();
    o.alpha_vertex_limit = 10;
    CertifyReport r = certify(cycle_graph(5), o);
    ASSERT_FALSE(r.complete());
    EXPECT_EQ(r.error->stage, "alpha_prime");
    EXPECT_TRUE(r.alpha.has_value());
    EXPECT_FALSE(r.alpha_prime.has_value());
    EXPECT_EQ(exit_code(r), 1);
    Json j = to_json(r);
    EXPECT_EQ(j["complete"], false);
    EXPECT_EQ(j["error"]["stage"], "alpha_prime");
    EXPECT_NE(to_text(r).find("INCOMPLETE"), std::string::npos);
}

TEST(Certify, ChecksAreRecomputed) {
    CertifyReport r = certify(cycle_graph(5), exact_only());
    ASSERT_EQ(exit_code(r), 0);
    r.alpha_prime->alpha += 1;
    EXPECT_EQ(exit_code(r), 2);
    Json j = to_json(r);
    EXPECT_EQ(j["pass"], false);
}

TEST(Certify, BadOptionsAreOperational) {
    CertifyOptions o;
    o.noise.depolarizing_p = 2;
    CertifyReport r = certify(cycle_graph(5), o);
    EXPECT_FALSE(r.complete());
    EXPECT_EQ(r.error->stage, "options");
    EXPECT_EQ(exit_code(r), 1);
}

TEST(Certify, MonteCarloSection) {
    CertifyOptions o;
    o.shots = 20000;
    o.seed = 5;
    CertifyReport r = certify(cycle_graph(5), o);
    ASSERT_TRUE(r.complete());
    ASSERT_TRUE(r.experiment.has_value());
    EXPECT_TRUE(all_pass(r));
    Json j = to_json(r);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["montecarlo"]["epsilon"].size(), 10u);
    EXPECT_EQ(j["montecarlo"]["shots"], 20000);
}

TEST(Certify, SerializationIsDeterministic) {
    CertifyOptions o;
    o.shots = 5000;
    o.seed = 77;
    o.noise = NoiseModel{0.05, 0.02, 0.01};
    std::string a = dump_json(to_json(certify(petersen_graph(), o)));
    std::string b = dump_json(to_json(certify(petersen_graph(), o)));
    EXPECT_EQ(a, b);
    CertifyReport r = certify(petersen_graph(), o);
    EXPECT_EQ(dump_json(to_json(r)), dump_json(to_json(r)));
}

TEST(Certify, TextHasOneLinePerCheck) {
    CertifyReport r = certify(cycle_graph(5), exact_only());
    std::string text = to_text(r);
    size_t lines = 0;
    for (size_t pos = 0; (pos = text.find("PASS ", pos)) != std::string::npos; pos++) {
        lines++;
    }
    EXPECT_EQ(lines, checks(r).size());
    EXPECT_EQ(text.find("FAIL"), std::string::npos);
}

TEST(Certify, RandomGraphsPass) {
    std::mt19937_64 rng(1234);
    const double densities[] = {0.2, 0.5, 0.8};
    for (int t = 0; t < 15; t++) {
        Graph g = oracle::random_graph(2 + t % 6, densities[t % 3], rng);
        CertifyReport r = certify(g, exact_only());
        ASSERT_TRUE(r.complete()) << r.error->stage << ": " << r.error->message;
        EXPECT_TRUE(all_pass(r)) << to_text(r);
    }
}

}  // namespace
}  // namespace ctx
