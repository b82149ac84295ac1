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

#include "ctxcompile/quantum_sim.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ctx {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

QState::QState(MatrixXcd rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
        throw std::invalid_argument("density matrix must be square and non-empty");
    }
    if (std::abs(rho_.trace() - std::complex<double>(1, 0)) > 1e-12) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(rho_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues()(0) < -1e-10) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

QState QState::pure(const VectorXcd &psi) {
    VectorXcd unit = psi / psi.norm();
    return QState(unit * unit.adjoint());
}

QState QState::maximally_mixed(size_t d) {
    auto di = static_cast<Eigen::Index>(d);
    return QState(MatrixXcd::Identity(di, di) / static_cast<double>(d));
}

QState QState::depolarized(double p) const {
    auto d = rho_.rows();
    return QState((1 - p) * rho_ + p * MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

void NoiseModel::validate() const {
    if (!(depolarizing_p >= 0 && depolarizing_p <= 1)) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    }
    if (!(outcome_flip_p >= 0 && outcome_flip_p <= 1)) {
        throw std::invalid_argument("outcome flip probability must lie in [0, 1]");
    }
    if (!std::isfinite(vector_misalignment_angle)) {
        throw std::invalid_argument("misalignment angle must be finite");
    }
}

TwoPointContext TwoPointContext::checked(const Graph &g, Vertex first, Vertex second) {
    if (!g.has_edge(first, second)) {
        throw std::invalid_argument(
            "(" + std::to_string(first) + "," + std::to_string(second) + ") is not a compatible pair (edge)");
    }
    return {first, second};
}

std::string to_string(Scheme scheme) {
    return scheme == Scheme::Projective ? "projective" : "demolition";
}

Scheme parse_scheme(const std::string &text) {
    if (text == "projective") {
        return Scheme::Projective;
    }
    if (text == "demolition") {
        return Scheme::DemolitionReprepare;
    }
    throw std::invalid_argument("unknown scheme '" + text + "' (expected projective or demolition)");
}

double born_single(const QState &state, const VectorXcd &v) {
    if (static_cast<size_t>(v.size()) != state.dimension()) {
        throw std::invalid_argument(
            "vector of dimension " + std::to_string(v.size()) + " measured on a state of dimension " +
            std::to_string(state.dimension()));
    }
    double p = v.dot(state.rho() * v).real();
    return std::clamp(p, 0.0, 1.0);
}

namespace {

MatrixXcd projector(const VectorXcd &v, int outcome) {
    MatrixXcd p = v * v.adjoint();
    if (outcome == 1) {
        return p;
    }
    return MatrixXcd::Identity(v.size(), v.size()) - p;
}

/// Normalized Π rho Π without the constructor's validation, for conditional
/// states whose trace is only 1 up to rounding.
MatrixXcd conditioned(const MatrixXcd &rho, const MatrixXcd &proj) {
    MatrixXcd out = proj * rho * proj;
    double t = out.trace().real();
    out /= t;
    out = 0.5 * (out + out.adjoint());
    out /= out.trace().real();
    return out;
}

double born(const MatrixXcd &rho, const VectorXcd &v) {
    return std::clamp(v.dot(rho * v).real(), 0.0, 1.0);
}

void check_rep(const QState &state, const TwoPointContext &ctx, const OrthoRep &rep) {
    if (ctx.first >= rep.vectors.size() || ctx.second >= rep.vectors.size()) {
        throw std::invalid_argument("context refers to a vertex without a vector");
    }
    if (rep.dimension() != state.dimension()) {
        throw std::invalid_argument("representation and state dimensions differ");
    }
}

/// Normalizes after clamping, so the four entries sum to 1.
JointProbs normalized(JointProbs p) {
    double total = 0;
    for (double &x : p) {
        x = std::clamp(x, 0.0, 1.0);
        total += x;
    }
    if (total > 0) {
        for (double &x : p) {
            x /= total;
        }
    }
    return p;
}

}  // namespace

QState luders_update(const QState &state, const VectorXcd &v, int outcome) {
    double p1 = born_single(state, v);
    double p = outcome == 1 ? p1 : 1 - p1;
    if (p <= 1e-12) {
        throw std::domain_error("cannot condition on an outcome of probability " + std::to_string(p));
    }
    return QState(conditioned(state.rho(), projector(v, outcome)));
}

JointProbs joint_probs_projective(const QState &state, const TwoPointContext &ctx, const OrthoRep &rep) {
    check_rep(state, ctx, rep);
    const VectorXcd &vi = rep.vectors[ctx.first];
    const VectorXcd &vj = rep.vectors[ctx.second];
    JointProbs out{};
    for (int a = 0; a < 2; a++) {
        MatrixXcd pa = projector(vi, a);
        MatrixXcd post = pa * state.rho() * pa;
        double prob_a = post.trace().real();
        if (prob_a <= 1e-15) {
            continue;
        }
        // P(a, 1) = tr(Π_j Π_a rho Π_a), no division needed.
        double both = std::clamp(vj.dot(post * vj).real(), 0.0, prob_a);
        out[2 * a + 1] = both;
        out[2 * a] = prob_a - both;
    }
    return normalized(out);
}

JointProbs joint_probs_demolition(const QState &state, const TwoPointContext &ctx, const OrthoRep &rep) {
    check_rep(state, ctx, rep);
    const VectorXcd &vi = rep.vectors[ctx.first];
    const VectorXcd &vj = rep.vectors[ctx.second];
    double p1 = born_single(state, vi);
    double p0 = 1 - p1;
    JointProbs out{};

    // Outcome 1: the system is absorbed and a fresh |i> is prepared.
    if (p1 > 1e-15) {
        double q = born(vi * vi.adjoint() / vi.squaredNorm(), vj);
        out[3] = p1 * q;
        out[2] = p1 * (1 - q);
    }
    // Outcome 0: prepare the Lüders outcome-0 state of the input.
    if (p0 > 1e-15) {
        MatrixXcd rho0 = conditioned(state.rho(), projector(vi, 0));
        double q = born(rho0, vj);
        out[1] = p0 * q;
        out[0] = p0 * (1 - q);
    }
    return normalized(out);
}

JointProbs joint_probs(const QState &state, const TwoPointContext &ctx, const OrthoRep &rep, Scheme scheme) {
    return scheme == Scheme::Projective ? joint_probs_projective(state, ctx, rep)
                                        : joint_probs_demolition(state, ctx, rep);
}

namespace {

void check_singles(const Graph &g, const std::vector<double> &singles) {
    if (singles.size() != g.num_vertices()) {
        throw std::invalid_argument(
            "expected " + std::to_string(g.num_vertices()) + " single probabilities, got " +
            std::to_string(singles.size()));
    }
}

template <typename Map>
const typename Map::mapped_type &lookup(const Map &m, const Edge &e) {
    auto it = m.find(e);
    if (it == m.end()) {
        throw std::invalid_argument(
            "missing pair entry for edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    }
    return it->second;
}

}  // namespace

double evaluate_S(const Graph &g, const std::vector<double> &singles, const PairTable &pairs) {
    check_singles(g, singles);
    double s = 0;
    for (double p : singles) {
        s += p;
    }
    for (const auto &e : g.edges()) {
        s -= lookup(pairs, e);
    }
    return s;
}

double evaluate_S_prime(const Graph &g, const std::vector<double> &singles, const JointTable &tables) {
    check_singles(g, singles);
    double s = 0;
    for (double p : singles) {
        s += p;
    }
    for (const auto &e : g.edges()) {
        const JointProbs &p = lookup(tables, e);
        s += p[0] + p[1] + p[2];
    }
    return s;
}

PairTable ExactStatistics::pairs() const {
    PairTable out;
    for (const auto &[e, p] : joint) {
        out[e] = p11(p);
    }
    return out;
}

ExactStatistics exact_statistics(const Graph &g, const OrthoRep &rep, const QState &state, Scheme scheme) {
    if (rep.vectors.size() != g.num_vertices()) {
        throw std::invalid_argument("representation does not have one vector per vertex");
    }
    ExactStatistics out;
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        out.singles.push_back(born_single(state, rep.vectors[v]));
    }
    for (const auto &e : g.edges()) {
        out.joint[e] = joint_probs(state, TwoPointContext{e.first, e.second}, rep, scheme);
    }
    return out;
}

double binomial_std_error(double p_hat, uint64_t shots) {
    double n = static_cast<double>(shots);
    if (p_hat <= 0 || p_hat >= 1) {
        return std::sqrt(0.25 / n);
    }
    return std::sqrt(p_hat * (1 - p_hat) / n);
}

const ContextCounts &ExperimentRecord::find(Vertex first, Vertex second) const {
    for (const auto &c : contexts) {
        if (c.context.first == first && c.context.second == second) {
            return c;
        }
    }
    throw std::invalid_argument(
        "record has no context (" + std::to_string(first) + "," + std::to_string(second) + ")");
}

Estimate ExperimentRecord::single_estimate(Vertex v) const {
    for (const auto &s : singles) {
        if (s.vertex == v) {
            double p = static_cast<double>(s.n1) / static_cast<double>(shots);
            return {p, binomial_std_error(p, shots)};
        }
    }
    throw std::invalid_argument("record has no single context for vertex " + std::to_string(v));
}

Estimate ExperimentRecord::pair_estimate(Vertex first, Vertex second, int a, int b) const {
    const auto &c = find(first, second);
    double p = static_cast<double>(c.counts[2 * a + b]) / static_cast<double>(shots);
    return {p, binomial_std_error(p, shots)};
}

Estimate ExperimentRecord::marginal(Vertex first, Vertex second, bool of_first, int outcome) const {
    const auto &c = find(first, second);
    uint64_t k = of_first ? c.counts[2 * outcome] + c.counts[2 * outcome + 1] : c.counts[outcome] + c.counts[2 + outcome];
    double p = static_cast<double>(k) / static_cast<double>(shots);
    return {p, binomial_std_error(p, shots)};
}

Estimate ExperimentRecord::S_estimate(const Graph &g) const {
    Estimate s;
    double var = 0;
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        Estimate e = single_estimate(v);
        s.value += e.value;
        var += e.std_error * e.std_error;
    }
    for (auto [a, b] : g.edges()) {
        Estimate e = pair_estimate(a, b, 1, 1);
        s.value -= e.value;
        var += e.std_error * e.std_error;
    }
    s.std_error = std::sqrt(var);
    return s;
}

uint64_t stream_seed(uint64_t master, uint64_t key) {
    uint64_t z = master + (key + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

/// Uniform double in [0, 1) from the top 53 bits.
double uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Box-Muller; avoids std::normal_distribution so streams are identical
/// across standard libraries.
double gaussian(std::mt19937_64 &rng) {
    double u1 = 1.0 - uniform(rng);
    double u2 = uniform(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

constexpr uint64_t kMisalignmentStream = uint64_t{1} << 32;

}  // namespace

OrthoRep misaligned(const OrthoRep &rep, double angle, uint64_t seed) {
    if (angle == 0) {
        return rep;
    }
    std::mt19937_64 rng(stream_seed(seed, kMisalignmentStream));
    bool real = rep.is_real();
    OrthoRep out = rep;
    for (auto &v : out.vectors) {
        VectorXcd dir(v.size());
        for (Eigen::Index k = 0; k < v.size(); k++) {
            double re = gaussian(rng);
            double im = real ? 0.0 : gaussian(rng);
            dir(k) = {re, im};
        }
        dir -= v * v.dot(dir);
        double norm = dir.norm();
        if (norm < 1e-12) {
            continue;
        }
        v = std::cos(angle) * v + std::sin(angle) * dir / norm;
        v /= v.norm();
    }
    return out;
}

namespace {

int sample_bit(std::mt19937_64 &rng, double p_one) {
    return uniform(rng) < p_one ? 1 : 0;
}

int recorded(std::mt19937_64 &rng, int bit, double flip_p) {
    if (flip_p > 0 && uniform(rng) < flip_p) {
        return 1 - bit;
    }
    return bit;
}

}  // namespace

ExperimentRecord run_experiment(const OrthoRep &rep, const Graph &g, uint64_t shots, uint64_t seed,
                                const NoiseModel &noise, Scheme scheme) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    noise.validate();
    if (rep.vectors.size() != g.num_vertices()) {
        throw std::invalid_argument("representation does not have one vector per vertex");
    }

    ExperimentRecord record;
    record.shots = shots;
    record.seed = seed;
    record.scheme = scheme;
    record.noise = noise;

    // Preparation, then measurement devices, then readout.
    QState state = QState::pure(rep.psi).depolarized(noise.depolarizing_p);
    OrthoRep devices = misaligned(rep, noise.vector_misalignment_angle, seed);

    const uint64_t n = g.num_vertices();
    for (Vertex v = 0; v < n; v++) {
        std::mt19937_64 rng(stream_seed(seed, v));
        double p1 = born_single(state, devices.vectors[v]);
        SingleCounts c{v, 0, 0};
        for (uint64_t s = 0; s < shots; s++) {
            int bit = recorded(rng, sample_bit(rng, p1), noise.outcome_flip_p);
            (bit ? c.n1 : c.n0)++;
        }
        record.singles.push_back(c);
    }

    uint64_t position = 0;
    for (auto [a, b] : g.edges()) {
        for (auto [first, second] : {Edge{a, b}, Edge{b, a}}) {
            std::mt19937_64 rng(stream_seed(seed, n + position));
            position++;
            TwoPointContext ctx{first, second};
            JointProbs p = joint_probs(state, ctx, devices, scheme);
            double p_first = p[2] + p[3];
            double p_second_given[2] = {
                p[0] + p[1] > 0 ? p[1] / (p[0] + p[1]) : 0.0,
                p[2] + p[3] > 0 ? p[3] / (p[2] + p[3]) : 0.0,
            };
            ContextCounts c{ctx, {}};
            for (uint64_t s = 0; s < shots; s++) {
                int x = sample_bit(rng, p_first);
                int y = sample_bit(rng, p_second_given[x]);
                x = recorded(rng, x, noise.outcome_flip_p);
                y = recorded(rng, y, noise.outcome_flip_p);
                c.counts[2 * x + y]++;
            }
            record.contexts.push_back(c);
        }
    }
    return record;
}

namespace {

/// Calls f(observable, setting_1, setting_2) for every observable with two
/// distinct neighbors setting_1 < setting_2.
template <typename F>
void for_each_shared_pair(const Graph &g, F &&f) {
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        const auto &nb = g.neighbors(v);
        for (size_t p = 0; p < nb.size(); p++) {
            for (size_t q = p + 1; q < nb.size(); q++) {
                f(v, nb[p], nb[q]);
            }
        }
    }
}

SignalingEntry difference(Vertex obs, Vertex s1, Vertex s2, int outcome, Estimate x, Estimate y) {
    return {obs, s1, s2, outcome, std::abs(x.value - y.value),
            std::sqrt(x.std_error * x.std_error + y.std_error * y.std_error)};
}

}  // namespace

std::vector<SignalingEntry> epsilon_signaling(const ExperimentRecord &record, const Graph &g) {
    std::vector<SignalingEntry> out;
    for_each_shared_pair(g, [&](Vertex b_obs, Vertex a1, Vertex a2) {
        for (int b = 0; b < 2; b++) {
            out.push_back(difference(b_obs, a1, a2, b, record.marginal(a1, b_obs, false, b),
                                     record.marginal(a2, b_obs, false, b)));
        }
    });
    return out;
}

std::vector<SignalingEntry> epsilon_prime(const ExperimentRecord &record, const Graph &g) {
    std::vector<SignalingEntry> out;
    for_each_shared_pair(g, [&](Vertex a_obs, Vertex b1, Vertex b2) {
        for (int a = 0; a < 2; a++) {
            out.push_back(difference(a_obs, b1, b2, a, record.marginal(a_obs, b1, true, a),
                                     record.marginal(a_obs, b2, true, a)));
        }
    });
    return out;
}

namespace {

double exact_marginal(const QState &state, const OrthoRep &rep, Scheme scheme, Vertex first, Vertex second,
                      bool of_first, int outcome) {
    JointProbs p = joint_probs(state, TwoPointContext{first, second}, rep, scheme);
    return of_first ? p[2 * outcome] + p[2 * outcome + 1] : p[outcome] + p[2 + outcome];
}

}  // namespace

std::vector<SignalingEntry> exact_epsilon_signaling(const Graph &g, const OrthoRep &rep, const QState &state,
                                                    Scheme scheme) {
    std::vector<SignalingEntry> out;
    for_each_shared_pair(g, [&](Vertex b_obs, Vertex a1, Vertex a2) {
        for (int b = 0; b < 2; b++) {
            out.push_back(difference(b_obs, a1, a2, b, {exact_marginal(state, rep, scheme, a1, b_obs, false, b), 0},
                                     {exact_marginal(state, rep, scheme, a2, b_obs, false, b), 0}));
        }
    });
    return out;
}

std::vector<SignalingEntry> exact_epsilon_prime(const Graph &g, const OrthoRep &rep, const QState &state,
                                                Scheme scheme) {
    std::vector<SignalingEntry> out;
    for_each_shared_pair(g, [&](Vertex a_obs, Vertex b1, Vertex b2) {
        for (int a = 0; a < 2; a++) {
            out.push_back(difference(a_obs, b1, b2, a, {exact_marginal(state, rep, scheme, a_obs, b1, true, a), 0},
                                     {exact_marginal(state, rep, scheme, a_obs, b2, true, a), 0}));
        }
    });
    return out;
}

SignalingSummary summarize(const std::vector<SignalingEntry> &table) {
    SignalingSummary s;
    s.entries = table.size();
    if (table.empty()) {
        return s;
    }
    double se_sum = 0;
    double sq_sum = 0;
    for (const auto &e : table) {
        s.max_value = std::max(s.max_value, e.value);
        se_sum += e.std_error;
        sq_sum += e.value * e.value;
        if (e.std_error > 0) {
            s.max_z = std::max(s.max_z, e.value / e.std_error);
        }
    }
    s.mean_std_error = se_sum / static_cast<double>(table.size());
    s.rms_value = std::sqrt(sq_sum / static_cast<double>(table.size()));
    return s;
}

}  // namespace ctx
