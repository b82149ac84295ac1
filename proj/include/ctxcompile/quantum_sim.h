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

#ifndef CTXCOMPILE_QUANTUM_SIM_H
#define CTXCOMPILE_QUANTUM_SIM_H

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctxcompile/graph.h"
#include "ctxcompile/ortho_rep.h"

namespace ctx {

/// Density matrix. Construction validates unit trace (1e-12), hermiticity
/// and positivity (smallest eigenvalue >= -1e-10).
class QState {
   public:
    explicit QState(Eigen::MatrixXcd rho);

    static QState pure(const Eigen::VectorXcd &psi);
    static QState maximally_mixed(size_t d);

    size_t dimension() const {
        return static_cast<size_t>(rho_.rows());
    }
    const Eigen::MatrixXcd &rho() const {
        return rho_;
    }

    /// (1-p) rho + p I/d.
    QState depolarized(double p) const;

   private:
    Eigen::MatrixXcd rho_;
};

struct NoiseModel {
    double depolarizing_p = 0;
    /// Each measurement vector is rotated by this angle (radians) towards an
    /// independently drawn orthogonal direction.
    double vector_misalignment_angle = 0;
    double outcome_flip_p = 0;

    /// Throws std::invalid_argument when a parameter is out of range.
    void validate() const;
    bool is_noiseless() const {
        return depolarizing_p == 0 && vector_misalignment_angle == 0 && outcome_flip_p == 0;
    }
};

/// Measure `first`, then `second`; (first, second) must be an edge.
struct TwoPointContext {
    Vertex first = 0;
    Vertex second = 0;

    /// Throws std::invalid_argument if the pair is not an edge of g.
    static TwoPointContext checked(const Graph &g, Vertex first, Vertex second);
};

/// P(a, b) stored at index 2a + b.
using JointProbs = std::array<double, 4>;

inline double p11(const JointProbs &p) {
    return p[3];
}

enum class Scheme { Projective, DemolitionReprepare };

std::string to_string(Scheme scheme);
/// Accepts "projective" or "demolition". Throws std::invalid_argument.
Scheme parse_scheme(const std::string &text);

/// <v|rho|v>, clamped to [0, 1]. Throws std::invalid_argument on a
/// dimension mismatch.
double born_single(const QState &state, const Eigen::VectorXcd &v);

/// Lüders update for the binary measurement of |v><v|: outcome 1 projects
/// onto v, outcome 0 onto its complement. Throws std::domain_error if the
/// outcome has probability <= 1e-12.
QState luders_update(const QState &state, const Eigen::VectorXcd &v, int outcome);

/// Sequential projective measurement of the two context vectors.
JointProbs joint_probs_projective(const QState &state, const TwoPointContext &ctx, const OrthoRep &rep);

/// First measurement is destructive; outcome 1 re-prepares |first>,
/// outcome 0 re-prepares the Lüders outcome-0 state of the input. Agrees
/// with joint_probs_projective to rounding.
JointProbs joint_probs_demolition(const QState &state, const TwoPointContext &ctx, const OrthoRep &rep);

JointProbs joint_probs(const QState &state, const TwoPointContext &ctx, const OrthoRep &rep, Scheme scheme);

/// Keyed by edge (smaller endpoint first), measured in that order.
using PairTable = std::map<Edge, double>;
using JointTable = std::map<Edge, JointProbs>;

/// sum_i P(1|i) - sum_{(i,j) in E} P(1,1|i,j). Throws std::invalid_argument
/// when `singles` does not have one entry per vertex or an edge is missing.
double evaluate_S(const Graph &g, const std::vector<double> &singles, const PairTable &pairs);

/// sum_i P(1|i) + sum_{(i,j) in E} [P(0,0) + P(0,1) + P(1,0)].
double evaluate_S_prime(const Graph &g, const std::vector<double> &singles, const JointTable &tables);

struct ExactStatistics {
    std::vector<double> singles;
    JointTable joint;

    PairTable pairs() const;
};

/// Exact Born-rule statistics of every vertex and every edge (in canonical
/// order) for `state` and `rep`.
ExactStatistics exact_statistics(const Graph &g, const OrthoRep &rep, const QState &state, Scheme scheme);

struct SingleCounts {
    Vertex vertex = 0;
    uint64_t n0 = 0;
    uint64_t n1 = 0;
};

struct ContextCounts {
    TwoPointContext context;
    /// counts[2a + b].
    std::array<uint64_t, 4> counts{};
};

struct Estimate {
    double value = 0;
    double std_error = 0;
};

/// Binomial standard error sqrt(p(1-p)/N), floored at sqrt(0.25/N) when the
/// estimate is exactly 0 or 1.
double binomial_std_error(double p_hat, uint64_t shots);

/// One entry of a signaling table. For epsilon, `observable` is the second
/// measurement and `setting_1`, `setting_2` the two first measurements; for
/// epsilon prime the roles are swapped.
struct SignalingEntry {
    Vertex observable = 0;
    Vertex setting_1 = 0;
    Vertex setting_2 = 0;
    int outcome = 0;
    double value = 0;
    double std_error = 0;
};

struct ExperimentRecord {
    uint64_t shots = 0;
    uint64_t seed = 0;
    Scheme scheme = Scheme::Projective;
    NoiseModel noise;
    std::vector<SingleCounts> singles;
    /// Both orders of every edge: (i,j) then (j,i), edges in sorted order.
    std::vector<ContextCounts> contexts;

    Estimate single_estimate(Vertex v) const;
    /// P(a, b | first, second) estimated from that ordered context.
    Estimate pair_estimate(Vertex first, Vertex second, int a, int b) const;
    /// Marginal of the first (`of_first`) or second measurement of a context.
    Estimate marginal(Vertex first, Vertex second, bool of_first, int outcome) const;
    /// S from the single contexts and the canonical-order pair contexts;
    /// the standard error combines all contributions in quadrature.
    Estimate S_estimate(const Graph &g) const;

   private:
    const ContextCounts &find(Vertex first, Vertex second) const;
};

/// Samples every single-observable context and both orders of every edge
/// context, `shots` times each. Deterministic in `seed`: context k draws
/// from its own stream seeded by stream_seed(seed, k), with k = vertex id
/// for single contexts and n + position for ordered pair contexts. The
/// misalignment rotations use stream key 2^32.
///
/// Throws std::invalid_argument for shots == 0 or invalid noise.
ExperimentRecord run_experiment(const OrthoRep &rep, const Graph &g, uint64_t shots, uint64_t seed,
                                const NoiseModel &noise, Scheme scheme);

/// splitmix64(master + (key + 1) * 0x9E3779B97F4A7C15).
uint64_t stream_seed(uint64_t master, uint64_t key);

/// The representation after the misalignment stage of `noise`, as used by
/// run_experiment for the same seed.
OrthoRep misaligned(const OrthoRep &rep, double angle, uint64_t seed);

/// For every second observable B, pair of first settings A < A' sharing B,
/// and outcome b: |P(b | A,B) - P(b | A',B)| with propagated error.
std::vector<SignalingEntry> epsilon_signaling(const ExperimentRecord &record, const Graph &g);

/// For every first observable A, pair of second settings B < B' and
/// outcome a: |P(a | A,B) - P(a | A,B')|. Zero in expectation by causality.
std::vector<SignalingEntry> epsilon_prime(const ExperimentRecord &record, const Graph &g);

/// Same tables from exact probabilities (standard errors zero).
std::vector<SignalingEntry> exact_epsilon_signaling(const Graph &g, const OrthoRep &rep, const QState &state,
                                                    Scheme scheme);
std::vector<SignalingEntry> exact_epsilon_prime(const Graph &g, const OrthoRep &rep, const QState &state,
                                                Scheme scheme);

struct SignalingSummary {
    size_t entries = 0;
    double max_value = 0;
    /// Mean propagated standard error: the experimental error scale.
    double mean_std_error = 0;
    double rms_value = 0;
    /// Largest value / std_error.
    double max_z = 0;
};

SignalingSummary summarize(const std::vector<SignalingEntry> &table);

}  // namespace ctx

#endif
