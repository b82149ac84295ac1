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

#include "ctxcompile/certify.h"

#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "ctxcompile/event_graph.h"

namespace ctx {

namespace {

std::string fmt(const char *format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

std::string hex(uint64_t x) {
    return fmt("%016llx", static_cast<unsigned long long>(x));
}

double max_value(const std::vector<SignalingEntry> &table) {
    return summarize(table).max_value;
}

/// Convergence judged from the reported residuals and gap.
bool converged(const SdpSolution &s, double tol) {
    const auto &r = s.residuals;
    return r.min_eigenvalue >= -tol && r.trace_error <= tol && r.max_edge_entry <= tol &&
           std::abs(s.gap()) <= tol;
}

}  // namespace

CertifyReport certify(const Graph &g, const CertifyOptions &options) {
    CertifyReport r;
    r.options = options;
    r.input = g;
    r.graph = g;
    std::string stage = "options";
    try {
        options.noise.validate();
        if (options.monte_carlo && options.shots == 0) {
            throw std::invalid_argument("shots must be at least 1");
        }
        const ThetaOptions theta_options{options.tolerance, options.max_iterations};

        stage = "expand";
        if (g.is_weighted()) {
            r.graph = expand_weighted(g).graph;
        }
        const Graph &graph = r.graph;

        stage = "alpha";
        r.alpha = independence_number(graph, options.alpha_vertex_limit);
        stage = "theta";
        r.theta = theta(graph, theta_options);

        stage = "transform";
        EventGraph eg = build_two_point_graph(graph);
        r.compiled_vertices = eg.graph.num_vertices();
        r.compiled_edges = eg.graph.num_edges();

        stage = "alpha_prime";
        r.alpha_prime = independence_number(eg.graph, options.alpha_vertex_limit);
        stage = "theta_prime";
        r.theta_prime = theta(eg.graph, theta_options);

        stage = "orthorep";
        r.rep = extract_ortho_rep(graph, *r.theta, options.tolerance);
        r.rep_report = verify_ortho_rep(graph, *r.rep, 100 * options.tolerance, r.theta->primal_value);

        stage = "exact";
        QState state = QState::pure(r.rep->psi);
        ExactStatistics stats = exact_statistics(graph, *r.rep, state, options.scheme);
        r.S_exact = evaluate_S(graph, stats.singles, stats.pairs());
        r.S_prime_exact = evaluate_S_prime(graph, stats.singles, stats.joint);
        r.max_exact_epsilon = max_value(exact_epsilon_signaling(graph, *r.rep, state, options.scheme));
        r.max_exact_epsilon_prime = max_value(exact_epsilon_prime(graph, *r.rep, state, options.scheme));

        if (options.monte_carlo) {
            stage = "montecarlo";
            r.experiment = run_experiment(*r.rep, graph, options.shots, options.seed, options.noise, options.scheme);
        }
    } catch (const ExtractionError &e) {
        r.error = StageError{stage, e.what(), true};
    } catch (const std::exception &e) {
        r.error = StageError{stage, e.what(), false};
    }
    return r;
}

std::vector<Check> checks(const CertifyReport &r) {
    const double tol = r.options.tolerance;
    const double edges = static_cast<double>(r.graph.num_edges());
    std::vector<Check> out;

    if (r.theta) {
        out.push_back({"theta(G) converged",
                       fmt("gap %.3g, min eig %.3g, edge %.3g", r.theta->gap(), r.theta->residuals.min_eigenvalue,
                           r.theta->residuals.max_edge_entry),
                       converged(*r.theta, tol)});
    }
    if (r.alpha && r.theta) {
        double a = static_cast<double>(r.alpha->alpha);
        out.push_back({"alpha(G) <= theta(G)", fmt("%zu <= %.12g", r.alpha->alpha, r.theta->primal_value),
                       a <= r.theta->primal_value + tol});
    }
    if (r.theta_prime) {
        out.push_back({"theta(G') converged",
                       fmt("gap %.3g, min eig %.3g, edge %.3g", r.theta_prime->gap(),
                           r.theta_prime->residuals.min_eigenvalue, r.theta_prime->residuals.max_edge_entry),
                       converged(*r.theta_prime, tol)});
    }
    if (r.alpha_prime && r.theta_prime) {
        double a = static_cast<double>(r.alpha_prime->alpha);
        out.push_back({"alpha(G') <= theta(G')",
                       fmt("%zu <= %.12g", r.alpha_prime->alpha, r.theta_prime->primal_value),
                       a <= r.theta_prime->primal_value + tol});
    }
    if (r.alpha && r.alpha_prime) {
        auto diff = static_cast<int64_t>(r.alpha_prime->alpha) - static_cast<int64_t>(r.alpha->alpha) -
                    static_cast<int64_t>(r.graph.num_edges());
        out.push_back({"alpha(G') - alpha(G) - |E| = 0", fmt("%lld", static_cast<long long>(diff)), diff == 0});
    }
    if (r.theta && r.theta_prime) {
        double diff = r.theta_prime->primal_value - r.theta->primal_value - edges;
        out.push_back({"theta(G') - theta(G) - |E| = 0", fmt("%.3g (tolerance %.3g)", diff, 10 * tol),
                       std::abs(diff) <= 10 * tol});
    }
    if (r.rep_report) {
        const auto &rr = *r.rep_report;
        double t = 100 * tol;
        out.push_back({"representation verified",
                       fmt("overlap %.3g, norm %.3g, sum error %.3g (tolerance %.3g)", rr.max_edge_overlap,
                           rr.max_norm_error, rr.sum_error, t),
                       rr.max_edge_overlap <= t && rr.max_norm_error <= t && rr.sum_error <= t});
    }
    if (r.S_exact && r.theta) {
        double diff = *r.S_exact - r.theta->primal_value;
        out.push_back({"exact S = theta(G)", fmt("S = %.12g, difference %.3g", *r.S_exact, diff),
                       std::abs(diff) <= 100 * tol});
    }
    if (r.S_exact && r.S_prime_exact) {
        double diff = *r.S_prime_exact - edges - *r.S_exact;
        out.push_back({"S' - |E| = S", fmt("%.3g", diff), std::abs(diff) <= 1e-10});
    }
    if (r.max_exact_epsilon && r.max_exact_epsilon_prime) {
        out.push_back({"exact epsilon = epsilon' = 0",
                       fmt("max %.3g, %.3g", *r.max_exact_epsilon, *r.max_exact_epsilon_prime),
                       *r.max_exact_epsilon <= 1e-10 && *r.max_exact_epsilon_prime <= 1e-10});
    }
    if (r.experiment && r.S_exact) {
        const Graph &g = r.graph;
        const auto &noise = r.experiment->noise;
        Estimate s = r.experiment->S_estimate(g);
        if (noise.is_noiseless()) {
            double z = std::abs(s.value - *r.S_exact) / s.std_error;
            out.push_back({"Monte Carlo S within 5 standard errors",
                           fmt("%.9g +- %.3g, z = %.3g", s.value, s.std_error, z), z <= 5});
        }
        SignalingSummary eps = summarize(epsilon_signaling(*r.experiment, g));
        SignalingSummary eps_prime = summarize(epsilon_prime(*r.experiment, g));
        out.push_back({"epsilon' within 5 standard errors", fmt("max z = %.3g over %zu", eps_prime.max_z,
                                                                eps_prime.entries),
                       eps_prime.max_z <= 5});
        // Misaligned vectors are no longer orthogonal, so signaling is
        // expected and the epsilon test is informational only.
        if (noise.vector_misalignment_angle == 0) {
            out.push_back({"epsilon within 5 standard errors",
                           fmt("max z = %.3g over %zu", eps.max_z, eps.entries), eps.max_z <= 5});
        }
        if (eps.entries > 0 && eps_prime.entries > 0) {
            double ratio = eps.mean_std_error / eps_prime.mean_std_error;
            out.push_back({"epsilon and epsilon' error scales agree",
                           fmt("ratio %.4g (allowed 0.5 to 2)", ratio), ratio >= 0.5 && ratio <= 2});
        }
    }
    return out;
}

int exit_code(const CertifyReport &r) {
    if (r.error && !r.error->verification) {
        return 1;
    }
    if (r.error) {
        return 2;
    }
    for (const auto &c : checks(r)) {
        if (!c.pass) {
            return 2;
        }
    }
    return 0;
}

namespace {

Json graph_summary(const Graph &g) {
    return {{"n", g.num_vertices()}, {"m", g.num_edges()}, {"weighted", g.is_weighted()},
            {"hash", hex(g.canonical_hash())}};
}

Json independence(const IndependenceResult &a) {
    return {{"value", a.alpha}, {"witness", a.witness}, {"nodes", a.node_count}};
}

}  // namespace

Json to_json(const CertifyReport &r) {
    const auto &o = r.options;
    Json j;
    j["schema"] = kReportSchema;
    j["complete"] = r.complete();
    if (r.error) {
        j["error"] = {{"stage", r.error->stage}, {"message", r.error->message},
                      {"verification", r.error->verification}};
    }
    j["options"] = {{"tolerance", o.tolerance},
                    {"max_iterations", o.max_iterations},
                    {"alpha_vertex_limit", o.alpha_vertex_limit},
                    {"monte_carlo", o.monte_carlo},
                    {"shots", o.shots},
                    {"seed", o.seed},
                    {"noise", to_json(o.noise)},
                    {"scheme", to_string(o.scheme)}};
    j["input"] = graph_summary(r.input);
    j["input"]["graph"] = to_json(r.input);
    j["graph"] = graph_summary(r.graph);
    if (r.alpha) {
        j["alpha"] = independence(*r.alpha);
    }
    if (r.theta) {
        j["theta"] = to_json(*r.theta, o.dump_matrix);
    }
    if (r.compiled_vertices) {
        j["compiled"] = {{"n", *r.compiled_vertices}, {"m", *r.compiled_edges}};
        if (r.alpha_prime) {
            j["compiled"]["alpha"] = independence(*r.alpha_prime);
        }
        if (r.theta_prime) {
            j["compiled"]["theta"] = to_json(*r.theta_prime, o.dump_matrix);
        }
    }
    if (r.rep) {
        j["representation"] = to_json(*r.rep);
        j["representation"]["report"] = to_json(*r.rep_report);
    }
    if (r.S_exact) {
        j["exact"] = {{"S", *r.S_exact},
                      {"S_prime", *r.S_prime_exact},
                      {"max_epsilon", *r.max_exact_epsilon},
                      {"max_epsilon_prime", *r.max_exact_epsilon_prime}};
    }
    if (r.experiment) {
        j["montecarlo"] = to_json(*r.experiment, r.graph);
    }
    Json cs = Json::array();
    bool all = true;
    for (const auto &c : checks(r)) {
        cs.push_back({{"name", c.name}, {"detail", c.detail}, {"pass", c.pass}});
        all = all && c.pass;
    }
    j["checks"] = cs;
    j["pass"] = r.complete() && all;
    return j;
}

std::string to_text(const CertifyReport &r) {
    std::string out;
    auto line = [&](const std::string &label, const std::string &value) {
        out += fmt("%-12s %s\n", label.c_str(), value.c_str());
    };
    line("input", fmt("n=%zu m=%zu%s", r.input.num_vertices(), r.input.num_edges(),
                      r.input.is_weighted() ? " weighted" : ""));
    if (r.input.is_weighted()) {
        line("expanded", fmt("n=%zu m=%zu", r.graph.num_vertices(), r.graph.num_edges()));
    }
    if (r.alpha) {
        line("alpha(G)", fmt("%zu", r.alpha->alpha));
    }
    if (r.theta) {
        line("theta(G)", fmt("%.12g (%s, gap %.2g)", r.theta->primal_value, to_string(r.theta->status).c_str(),
                             r.theta->gap()));
    }
    if (r.compiled_vertices) {
        line("G'", fmt("n=%zu m=%zu", *r.compiled_vertices, *r.compiled_edges));
    }
    if (r.alpha_prime) {
        line("alpha(G')", fmt("%zu", r.alpha_prime->alpha));
    }
    if (r.theta_prime) {
        line("theta(G')", fmt("%.12g (%s, gap %.2g)", r.theta_prime->primal_value,
                              to_string(r.theta_prime->status).c_str(), r.theta_prime->gap()));
    }
    if (r.rep) {
        line("rep", fmt("d=%zu", r.rep->dimension()));
    }
    if (r.S_exact) {
        line("S exact", fmt("%.12g", *r.S_exact));
        line("S' exact", fmt("%.12g", *r.S_prime_exact));
    }
    if (r.experiment) {
        Estimate s = r.experiment->S_estimate(r.graph);
        line("S estimate", fmt("%.9g +- %.3g (%llu shots, seed %llu, %s)", s.value, s.std_error,
                               static_cast<unsigned long long>(r.experiment->shots),
                               static_cast<unsigned long long>(r.experiment->seed),
                               to_string(r.experiment->scheme).c_str()));
        SignalingSummary eps = summarize(epsilon_signaling(*r.experiment, r.graph));
        SignalingSummary eps_prime = summarize(epsilon_prime(*r.experiment, r.graph));
        line("epsilon", fmt("max %.3g, rms %.3g, mean se %.3g, max z %.3g (%zu entries)", eps.max_value,
                            eps.rms_value, eps.mean_std_error, eps.max_z, eps.entries));
        line("epsilon'", fmt("max %.3g, rms %.3g, mean se %.3g, max z %.3g (%zu entries)", eps_prime.max_value,
                             eps_prime.rms_value, eps_prime.mean_std_error, eps_prime.max_z, eps_prime.entries));
    }
    for (const auto &c : checks(r)) {
        out += fmt("%s %s: ", c.pass ? "PASS" : "FAIL", c.name.c_str()) + c.detail + "\n";
    }
    if (r.error) {
        out += "INCOMPLETE at stage " + r.error->stage + ": " + r.error->message + "\n";
    }
    return out;
}

}  // namespace ctx
