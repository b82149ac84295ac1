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

#include "ctxcompile/serialize.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace ctx {

namespace {

void emit_float(std::string &out, double x) {
    if (!std::isfinite(x)) {
        out += "null";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
    if (std::strpbrk(buf, ".eE") == nullptr) {
        out += ".0";
    }
}

bool is_flat(const Json &j) {
    for (const auto &el : j) {
        if (el.is_structured()) {
            return false;
        }
    }
    return true;
}

void emit(std::string &out, const Json &j, int indent, int depth) {
    auto newline = [&](int d) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
        case Json::value_t::null:
        case Json::value_t::discarded:
            out += "null";
            return;
        case Json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case Json::value_t::number_integer:
            out += std::to_string(j.get<int64_t>());
            return;
        case Json::value_t::number_unsigned:
            out += std::to_string(j.get<uint64_t>());
            return;
        case Json::value_t::number_float:
            emit_float(out, j.get<double>());
            return;
        case Json::value_t::string:
            out += j.dump();
            return;
        case Json::value_t::binary:
            throw std::invalid_argument("binary JSON values are not supported");
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            bool flat = is_flat(j) || indent < 0;
            out += '[';
            bool first = true;
            for (const auto &el : j) {
                if (!first) {
                    out += flat && indent >= 0 ? ", " : ",";
                }
                first = false;
                if (!flat) {
                    newline(depth + 1);
                }
                emit(out, el, indent, depth + 1);
            }
            if (!flat) {
                newline(depth);
            }
            out += ']';
            return;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += indent >= 0 ? ": " : ":";
                emit(out, it.value(), indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
    }
}

Json complex_vector(const Eigen::VectorXcd &v) {
    Json arr = Json::array();
    for (Eigen::Index k = 0; k < v.size(); k++) {
        arr.push_back(Json::array({v(k).real(), v(k).imag()}));
    }
    return arr;
}

Eigen::VectorXcd complex_vector_from(const Json &j, const std::string &what) {
    if (!j.is_array()) {
        throw std::invalid_argument(what + " must be an array");
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
    for (size_t k = 0; k < j.size(); k++) {
        const Json &x = j[k];
        auto idx = static_cast<Eigen::Index>(k);
        if (x.is_number()) {
            v(idx) = {x.get<double>(), 0.0};
        } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
            v(idx) = {x[0].get<double>(), x[1].get<double>()};
        } else {
            throw std::invalid_argument(what + "[" + std::to_string(k) + "] must be a number or [re, im]");
        }
    }
    return v;
}

Json estimate(const Estimate &e) {
    return {{"value", e.value}, {"std_error", e.std_error}};
}

Json signaling_table(const std::vector<SignalingEntry> &table) {
    Json arr = Json::array();
    for (const auto &e : table) {
        arr.push_back(to_json(e));
    }
    return arr;
}

}  // namespace

std::string dump_json(const Json &j, int indent) {
    std::string out;
    emit(out, j, indent, 0);
    return out;
}

Json to_json(const Graph &g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back(Json::array({a, b}));
    }
    Json j = {{"n", g.num_vertices()}, {"edges", edges}};
    if (g.is_weighted()) {
        Json w = Json::object();
        for (Vertex v = 0; v < g.num_vertices(); v++) {
            w[std::to_string(v)] = g.weight(v);
        }
        j["weights"] = w;
    }
    return j;
}

Json to_json(const EventLabel &label) {
    Json obs = Json::array();
    Json out = Json::array();
    for (size_t k = 0; k < label.arity(); k++) {
        obs.push_back(label.observable(k));
        out.push_back(label.outcome(k));
    }
    return {{"kind", label.is_single() ? "single" : "pair"}, {"obs", obs}, {"out", out}};
}

Json to_json(const EventGraph &eg) {
    Json j = to_json(eg.graph);
    Json labels = Json::array();
    for (const auto &l : eg.labels) {
        labels.push_back(to_json(l));
    }
    j["labels"] = labels;
    j["source"] = to_json(eg.source);
    return j;
}

Json to_json(const OrthoRep &rep) {
    Json vectors = Json::array();
    for (const auto &v : rep.vectors) {
        vectors.push_back(complex_vector(v));
    }
    return {{"d", rep.dimension()}, {"psi", complex_vector(rep.psi)}, {"vectors", vectors}};
}

OrthoRep ortho_rep_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("psi") || !j.contains("vectors")) {
        throw std::invalid_argument("representation JSON needs \"psi\" and \"vectors\"");
    }
    OrthoRep rep;
    rep.psi = complex_vector_from(j["psi"], "psi");
    if (!j["vectors"].is_array()) {
        throw std::invalid_argument("vectors must be an array");
    }
    for (size_t k = 0; k < j["vectors"].size(); k++) {
        rep.vectors.push_back(complex_vector_from(j["vectors"][k], "vectors[" + std::to_string(k) + "]"));
        if (rep.vectors.back().size() != rep.psi.size()) {
            throw std::invalid_argument("vectors[" + std::to_string(k) + "] does not have the dimension of psi");
        }
    }
    if (j.contains("d") && (!j["d"].is_number_integer() || j["d"].get<int64_t>() != rep.psi.size())) {
        throw std::invalid_argument("\"d\" does not match the length of psi");
    }
    return rep;
}

Json to_json(const OrthoRepReport &r) {
    return {{"max_edge_overlap", r.max_edge_overlap},
            {"max_norm_error", r.max_norm_error},
            {"overlap_sum", r.overlap_sum},
            {"sum_error", r.sum_error},
            {"orthogonality_ok", r.orthogonality_ok},
            {"norms_ok", r.norms_ok},
            {"sum_ok", r.sum_ok},
            {"ok", r.ok()}};
}

Json to_json(const FeasibilityReport &r) {
    return {{"min_eigenvalue", r.min_eigenvalue}, {"trace_error", r.trace_error},
            {"max_edge_entry", r.max_edge_entry}, {"psd_ok", r.psd_ok},
            {"trace_ok", r.trace_ok},             {"edges_ok", r.edges_ok}};
}

Json to_json(const SdpSolution &s, bool with_matrix) {
    Json j = {{"primal_value", s.primal_value}, {"dual_value", s.dual_value},   {"gap", s.gap()},
              {"tolerance", s.tolerance},       {"status", to_string(s.status)}, {"iterations", s.iterations},
              {"residuals", to_json(s.residuals)}};
    if (with_matrix) {
        Json rows = Json::array();
        for (Eigen::Index r = 0; r < s.X.rows(); r++) {
            Json row = Json::array();
            for (Eigen::Index c = 0; c < s.X.cols(); c++) {
                row.push_back(s.X(r, c));
            }
            rows.push_back(row);
        }
        j["X"] = rows;
    }
    return j;
}

Json to_json(const NoiseModel &noise) {
    return {{"depolarizing_p", noise.depolarizing_p},
            {"vector_misalignment_angle", noise.vector_misalignment_angle},
            {"outcome_flip_p", noise.outcome_flip_p}};
}

Json to_json(const SignalingEntry &e) {
    return {{"observable", e.observable}, {"setting_1", e.setting_1}, {"setting_2", e.setting_2},
            {"outcome", e.outcome},       {"value", e.value},         {"std_error", e.std_error}};
}

Json to_json(const SignalingSummary &s) {
    return {{"entries", s.entries},
            {"max_value", s.max_value},
            {"mean_std_error", s.mean_std_error},
            {"rms_value", s.rms_value},
            {"max_z", s.max_z}};
}

Json to_json(const ExperimentRecord &record, const Graph &g) {
    Json singles = Json::array();
    for (const auto &s : record.singles) {
        singles.push_back({{"vertex", s.vertex},
                           {"counts", Json::array({s.n0, s.n1})},
                           {"p1", estimate(record.single_estimate(s.vertex))}});
    }
    Json contexts = Json::array();
    for (const auto &c : record.contexts) {
        Json probs = Json::array();
        for (int ab = 0; ab < 4; ab++) {
            probs.push_back(estimate(record.pair_estimate(c.context.first, c.context.second, ab / 2, ab % 2)));
        }
        contexts.push_back({{"first", c.context.first},
                            {"second", c.context.second},
                            {"counts", Json::array({c.counts[0], c.counts[1], c.counts[2], c.counts[3]})},
                            {"probabilities", probs}});
    }
    auto eps = epsilon_signaling(record, g);
    auto eps_prime = epsilon_prime(record, g);
    return {{"shots", record.shots},
            {"seed", record.seed},
            {"scheme", to_string(record.scheme)},
            {"noise", to_json(record.noise)},
            {"singles", singles},
            {"contexts", contexts},
            {"S", estimate(record.S_estimate(g))},
            {"epsilon", signaling_table(eps)},
            {"epsilon_prime", signaling_table(eps_prime)},
            {"epsilon_summary", to_json(summarize(eps))},
            {"epsilon_prime_summary", to_json(summarize(eps_prime))}};
}

}  // namespace ctx
