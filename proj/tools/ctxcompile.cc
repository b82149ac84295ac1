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

// ctxcompile: exclusivity-graph bounds, two-point compilation and
// simulation from the command line.
//
//   ctxcompile certify --catalog c5
//   ctxcompile theta --graph g.dimacs --format text
//   ctxcompile simulate --catalog c5 --shots 1000000 --seed 7

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "ctxcompile/alpha.h"
#include "ctxcompile/certify.h"
#include "ctxcompile/event_graph.h"
#include "ctxcompile/graph_io.h"
#include "ctxcompile/serialize.h"

namespace {

using namespace ctx;

struct GraphInput {
    std::string path;
    std::string catalog;
    std::string inline_text;
    std::string format;

    void add_to(CLI::App *app) {
        auto *g = app->add_option("--graph", path, "Graph file (JSON or DIMACS)");
        auto *c = app->add_option("--catalog", catalog, "Named graph, see `ctxcompile catalog`");
        auto *i = app->add_option("--inline", inline_text, "Graph text given on the command line");
        g->excludes(c)->excludes(i);
        c->excludes(i);
        app->add_option("--input-format", format, "json or dimacs (default: from extension, or json inline)")
            ->check(CLI::IsMember({"json", "dimacs"}));
    }

    Graph load() const {
        ParsedGraph parsed;
        if (!catalog.empty()) {
            return catalog_graph(catalog);
        }
        if (!path.empty()) {
            parsed = read_graph_file(path, format.empty() ? guess_graph_format(path) : parse_graph_format(format));
        } else if (!inline_text.empty()) {
            parsed = parse_graph(inline_text, format.empty() ? GraphFormat::Json : parse_graph_format(format));
        } else {
            throw std::invalid_argument("no graph given; use --graph, --catalog or --inline");
        }
        for (const auto &w : parsed.warnings) {
            std::fprintf(stderr, "warning: %s\n", w.c_str());
        }
        return parsed.graph;
    }
};

struct Output {
    std::string format = "json";
    std::string path;

    void add_to(CLI::App *app) {
        app->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        app->add_option("--output", path, "Write to this file instead of stdout");
    }

    bool json() const {
        return format == "json";
    }

    void write(const std::string &text) const {
        if (path.empty()) {
            std::fwrite(text.data(), 1, text.size(), stdout);
            return;
        }
        std::ofstream out(path, std::ios::binary);
        out << text;
        if (!out) {
            throw std::runtime_error("cannot write " + path);
        }
    }

    void write_json(const Json &j) const {
        write(dump_json(j) + "\n");
    }
};

struct SimulationFlags {
    uint64_t shots = 100000;
    uint64_t seed = 1;
    NoiseModel noise;
    std::string scheme = "projective";

    void add_to(CLI::App *app) {
        app->add_option("--shots", shots, "Shots per context")->check(CLI::PositiveNumber);
        app->add_option("--seed", seed, "Master seed");
        app->add_option("--noise-depol", noise.depolarizing_p, "Depolarizing probability")->check(CLI::Range(0.0, 1.0));
        app->add_option("--noise-angle", noise.vector_misalignment_angle, "Misalignment angle (radians)");
        app->add_option("--noise-flip", noise.outcome_flip_p, "Outcome flip probability")->check(CLI::Range(0.0, 1.0));
        app->add_option("--scheme", scheme, "projective or demolition")
            ->check(CLI::IsMember({"projective", "demolition"}));
    }
};

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string witness_text(const std::vector<Vertex> &w) {
    std::string s;
    for (size_t k = 0; k < w.size(); k++) {
        s += (k ? " " : "") + std::to_string(w[k]);
    }
    return s;
}

/// Weighted graphs are expanded before any bound is computed.
Graph prepared(const Graph &g) {
    return g.is_weighted() ? expand_weighted(g).graph : g;
}

int run_alpha(const GraphInput &in, const Output &out, size_t limit) {
    Graph g = prepared(in.load());
    IndependenceResult r = independence_number(g, limit);
    if (out.json()) {
        out.write_json(Json{{"alpha", r.alpha}, {"witness", r.witness}, {"nodes", r.node_count}, {"n", g.num_vertices()}});
    } else {
        out.write("alpha    " + std::to_string(r.alpha) + "\nwitness  " + witness_text(r.witness) + "\n");
    }
    return 0;
}

int run_theta(const GraphInput &in, const Output &out, const ThetaOptions &opts, size_t limit, bool dump) {
    Graph g = prepared(in.load());
    Sandwich s = theta_sandwich(g, opts, limit);
    bool ok = s.solution.status == SdpStatus::Converged;
    if (out.json()) {
        Json j = to_json(s.solution, dump);
        j["alpha"] = s.alpha;
        j["theta"] = s.theta;
        out.write_json(j);
    } else {
        out.write("alpha    " + std::to_string(s.alpha) + "\ntheta    " + fmt_double(s.theta) + "\nstatus   " +
                  to_string(s.solution.status) + "\ngap      " + fmt_double(s.solution.gap()) + "\n");
    }
    return ok ? 0 : 2;
}

int run_transform(const GraphInput &in, const Output &out, const std::string &emit) {
    Graph g = prepared(in.load());
    EventGraph eg = build_two_point_graph(g);
    if (!emit.empty()) {
        out.write(emit_graph(eg.graph, parse_graph_format(emit)));
    } else if (out.json()) {
        out.write_json(to_json(eg));
    } else {
        std::string s = "n " + std::to_string(eg.graph.num_vertices()) + "  m " +
                        std::to_string(eg.graph.num_edges()) + "\n";
        for (size_t k = 0; k < eg.labels.size(); k++) {
            s += std::to_string(k) + "  " + eg.labels[k].str() + "\n";
        }
        for (auto [a, b] : eg.graph.edges()) {
            s += eg.labels[a].str() + " -- " + eg.labels[b].str() + "\n";
        }
        out.write(s);
    }
    return 0;
}

int run_orthorep(const GraphInput &in, const Output &out, const ThetaOptions &opts) {
    Graph g = prepared(in.load());
    SdpSolution sol = theta(g, opts);
    OrthoRep rep;
    try {
        rep = extract_ortho_rep(g, sol, opts.tolerance);
    } catch (const ExtractionError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    OrthoRepReport report = verify_ortho_rep(g, rep, 100 * opts.tolerance, sol.primal_value);
    if (out.json()) {
        Json j = to_json(rep);
        j["report"] = to_json(report);
        j["theta"] = sol.primal_value;
        out.write_json(j);
    } else {
        std::string s = "d        " + std::to_string(rep.dimension()) + "\ntheta    " + fmt_double(sol.primal_value) +
                        "\nsum      " + fmt_double(report.overlap_sum) + "\noverlap  " +
                        fmt_double(report.max_edge_overlap) + "\n";
        out.write(s);
    }
    return report.ok() ? 0 : 2;
}

int run_simulate(const GraphInput &in, const Output &out, const ThetaOptions &opts, const SimulationFlags &sim,
                 const std::string &rep_path) {
    Graph g = prepared(in.load());
    OrthoRep rep;
    if (!rep_path.empty()) {
        std::ifstream f(rep_path);
        if (!f) {
            throw std::runtime_error("cannot open " + rep_path);
        }
        rep = ortho_rep_from_json(Json::parse(f));
        verify_ortho_rep(g, rep, 1e-6, 0);
    } else {
        rep = extract_ortho_rep(g, theta(g, opts), opts.tolerance);
    }
    Scheme scheme = parse_scheme(sim.scheme);
    ExperimentRecord record = run_experiment(rep, g, sim.shots, sim.seed, sim.noise, scheme);
    QState ideal = QState::pure(rep.psi);
    ExactStatistics exact = exact_statistics(g, rep, ideal, scheme);
    double s_exact = evaluate_S(g, exact.singles, exact.pairs());
    if (out.json()) {
        Json j = to_json(record, g);
        j["S_exact"] = s_exact;
        out.write_json(j);
    } else {
        Estimate s = record.S_estimate(g);
        SignalingSummary eps = summarize(epsilon_signaling(record, g));
        SignalingSummary eps_prime = summarize(epsilon_prime(record, g));
        char buf[512];
        std::snprintf(buf, sizeof buf,
                      "S exact     %.12g\nS estimate  %.9g +- %.3g\n"
                      "            max      rms      mean se  max z\n"
                      "epsilon     %-8.3g %-8.3g %-8.3g %.3g\n"
                      "epsilon'    %-8.3g %-8.3g %-8.3g %.3g\n",
                      s_exact, s.value, s.std_error, eps.max_value, eps.rms_value, eps.mean_std_error, eps.max_z,
                      eps_prime.max_value, eps_prime.rms_value, eps_prime.mean_std_error, eps_prime.max_z);
        out.write(buf);
    }
    return 0;
}

int run_certify(const GraphInput &in, const Output &out, CertifyOptions opts, const SimulationFlags &sim) {
    Graph g = in.load();
    opts.shots = sim.shots;
    opts.seed = sim.seed;
    opts.noise = sim.noise;
    opts.scheme = parse_scheme(sim.scheme);
    CertifyReport report = certify(g, opts);
    if (out.json()) {
        out.write_json(to_json(report));
    } else {
        out.write(to_text(report));
    }
    return exit_code(report);
}

int run_catalog(const std::string &name, const std::string &emit, const Output &out) {
    if (name.empty()) {
        std::string s;
        for (const auto &e : catalog_entries()) {
            s += e + "\n";
        }
        out.write(s);
        return 0;
    }
    Graph g = catalog_graph(name);
    out.write(emit_graph(g, emit.empty() ? GraphFormat::Json : parse_graph_format(emit)));
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exclusivity-graph bounds, two-point compilation and contextuality simulation"};
    app.require_subcommand(1);

    GraphInput input;
    Output output;
    SimulationFlags sim;
    ThetaOptions theta_opts;
    size_t alpha_limit = kDefaultAlphaVertexLimit;
    bool dump_matrix = false;
    bool skip_montecarlo = false;
    std::string emit;
    std::string rep_path;
    std::string catalog_name;

    auto add_theta = [&](CLI::App *sub) {
        sub->add_option("--tolerance", theta_opts.tolerance, "SDP tolerance")->check(CLI::Range(1e-10, 1e-3));
        sub->add_option("--max-iterations", theta_opts.max_iterations, "SDP iteration cap")
            ->check(CLI::PositiveNumber);
    };
    auto add_alpha_limit = [&](CLI::App *sub, size_t default_limit) {
        alpha_limit = default_limit;
        sub->add_option("--alpha-limit", alpha_limit, "Vertex limit for exact alpha")
            ->check(CLI::Range(size_t{1}, kMaxAlphaCapacity));
    };

    auto *alpha_cmd = app.add_subcommand("alpha", "Independence number (classical bound)");
    input.add_to(alpha_cmd);
    output.add_to(alpha_cmd);
    add_alpha_limit(alpha_cmd, kDefaultAlphaVertexLimit);

    auto *theta_cmd = app.add_subcommand("theta", "Lovász number (quantum bound) with alpha");
    input.add_to(theta_cmd);
    output.add_to(theta_cmd);
    add_theta(theta_cmd);
    theta_cmd->add_option("--alpha-limit", alpha_limit, "Vertex limit for exact alpha")
        ->check(CLI::Range(size_t{1}, kMaxAlphaCapacity));
    theta_cmd->add_flag("--dump-matrix", dump_matrix, "Include the primal matrix");

    auto *transform_cmd = app.add_subcommand("transform", "Compile G into its two-point event graph G'");
    input.add_to(transform_cmd);
    output.add_to(transform_cmd);
    transform_cmd->add_option("--emit", emit, "Write G' only, as json or dimacs")
        ->check(CLI::IsMember({"json", "dimacs"}));

    auto *orthorep_cmd = app.add_subcommand("orthorep", "Optimal orthogonal representation");
    input.add_to(orthorep_cmd);
    output.add_to(orthorep_cmd);
    add_theta(orthorep_cmd);

    auto *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo two-measurement experiment");
    input.add_to(simulate_cmd);
    output.add_to(simulate_cmd);
    add_theta(simulate_cmd);
    sim.add_to(simulate_cmd);
    simulate_cmd->add_option("--rep", rep_path, "Representation JSON instead of the extracted optimum");

    auto *certify_cmd = app.add_subcommand("certify", "Full pipeline with identity checks");
    input.add_to(certify_cmd);
    output.add_to(certify_cmd);
    add_theta(certify_cmd);
    sim.add_to(certify_cmd);
    certify_cmd->add_option("--alpha-limit", alpha_limit, "Vertex limit for exact alpha of G and G'")
        ->check(CLI::Range(size_t{1}, kMaxAlphaCapacity));
    certify_cmd->add_flag("--dump-matrix", dump_matrix, "Include primal matrices in the report");
    certify_cmd->add_flag("--skip-montecarlo", skip_montecarlo, "Exact statistics only");

    auto *catalog_cmd = app.add_subcommand("catalog", "List named graphs or print one");
    catalog_cmd->add_option("name", catalog_name, "Entry to print");
    catalog_cmd->add_option("--emit", emit, "json or dimacs")->check(CLI::IsMember({"json", "dimacs"}));
    catalog_cmd->add_option("--output", output.path, "Write to this file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (alpha_cmd->parsed()) {
            return run_alpha(input, output, alpha_limit);
        }
        if (theta_cmd->parsed()) {
            return run_theta(input, output, theta_opts, alpha_limit, dump_matrix);
        }
        if (transform_cmd->parsed()) {
            return run_transform(input, output, emit);
        }
        if (orthorep_cmd->parsed()) {
            return run_orthorep(input, output, theta_opts);
        }
        if (simulate_cmd->parsed()) {
            return run_simulate(input, output, theta_opts, sim, rep_path);
        }
        if (certify_cmd->parsed()) {
            CertifyOptions opts;
            opts.tolerance = theta_opts.tolerance;
            opts.max_iterations = theta_opts.max_iterations;
            if (certify_cmd->count("--alpha-limit") > 0) {
                opts.alpha_vertex_limit = alpha_limit;
            }
            opts.dump_matrix = dump_matrix;
            opts.monte_carlo = !skip_montecarlo;
            return run_certify(input, output, opts, sim);
        }
        return run_catalog(catalog_name, emit, output);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
