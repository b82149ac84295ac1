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

#ifndef CTXCOMPILE_CERTIFY_H
#define CTXCOMPILE_CERTIFY_H

#include <optional>
#include <string>
#include <vector>

#include "ctxcompile/alpha.h"
#include "ctxcompile/graph.h"
#include "ctxcompile/ortho_rep.h"
#include "ctxcompile/quantum_sim.h"
#include "ctxcompile/serialize.h"
#include "ctxcompile/theta.h"

namespace ctx {

constexpr int kReportSchema = 1;

struct CertifyOptions {
    double tolerance = kDefaultThetaTolerance;
    int max_iterations = kDefaultThetaIterationCap;
    /// Applies to both alpha(G) and alpha(G'); compiled graphs are much
    /// larger than their sources.
    size_t alpha_vertex_limit = kMaxAlphaCapacity;
    bool monte_carlo = true;
    uint64_t shots = 100000;
    uint64_t seed = 1;
    NoiseModel noise;
    Scheme scheme = Scheme::Projective;
    /// Include the primal matrices in the JSON report.
    bool dump_matrix = false;
};

struct StageError {
    std::string stage;
    std::string message;
    /// True for a failed verification (exit code 2) as opposed to an
    /// operational failure (exit code 1).
    bool verification = false;
};

/// Everything certify computed. Fields after a failed stage stay empty.
struct CertifyReport {
    CertifyOptions options;
    Graph input;
    /// The graph everything below refers to: the input, or its weighted
    /// expansion.
    Graph graph;
    std::optional<IndependenceResult> alpha;
    std::optional<SdpSolution> theta;
    std::optional<size_t> compiled_vertices;
    std::optional<size_t> compiled_edges;
    std::optional<IndependenceResult> alpha_prime;
    std::optional<SdpSolution> theta_prime;
    std::optional<OrthoRep> rep;
    std::optional<OrthoRepReport> rep_report;
    std::optional<double> S_exact;
    std::optional<double> S_prime_exact;
    std::optional<double> max_exact_epsilon;
    std::optional<double> max_exact_epsilon_prime;
    std::optional<ExperimentRecord> experiment;
    std::optional<StageError> error;

    bool complete() const {
        return !error.has_value();
    }
};

struct Check {
    std::string name;
    /// Human-readable form of the compared quantity.
    std::string detail;
    bool pass = false;
};

/// Runs expand_weighted, alpha and theta of G, the two-point compilation,
/// alpha and theta of G', the identity checks, representation extraction,
/// exact S and S', and optionally the Monte Carlo experiment. Never
/// throws for stage failures; they end up in `error`.
CertifyReport certify(const Graph &g, const CertifyOptions &options = {});

/// Pass/fail of every check the report has the numbers for, recomputed from
/// those numbers on each call.
std::vector<Check> checks(const CertifyReport &report);

/// 0 when complete and every check passes, 2 when a check or verification
/// failed, 1 for an operational failure.
int exit_code(const CertifyReport &report);

Json to_json(const CertifyReport &report);
/// Aligned summary followed by one PASS/FAIL line per check.
std::string to_text(const CertifyReport &report);

}  // namespace ctx

#endif
