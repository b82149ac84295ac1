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

// Thin bindings. Structured results (reports, experiment records) cross the
// boundary as the same JSON the CLI emits, decoded into dicts.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctxcompile/alpha.h"
#include "ctxcompile/certify.h"
#include "ctxcompile/event_graph.h"
#include "ctxcompile/graph.h"
#include "ctxcompile/graph_io.h"
#include "ctxcompile/ortho_rep.h"
#include "ctxcompile/quantum_sim.h"
#include "ctxcompile/serialize.h"
#include "ctxcompile/theta.h"

namespace py = pybind11;
using namespace ctx;

namespace {

py::object to_python(const Json &j) {
    return py::module_::import("json").attr("loads")(dump_json(j, -1));
}

py::tuple label_tuple(const EventLabel &label) {
    if (label.is_single()) {
        return py::make_tuple(label.obs_a, label.out_a);
    }
    return py::make_tuple(label.obs_a, label.obs_b, label.out_a, label.out_b);
}

NoiseModel noise_model(double depolarizing, double misalignment, double flip) {
    NoiseModel noise{depolarizing, misalignment, flip};
    noise.validate();
    return noise;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact alpha, Lovasz theta, two-point compilation and simulation.";

    py::register_exception<ExtractionError>(m, "ExtractionError", PyExc_RuntimeError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.attr("DEFAULT_TOLERANCE") = kDefaultThetaTolerance;
    m.attr("DEFAULT_ALPHA_LIMIT") = kDefaultAlphaVertexLimit;
    m.attr("MAX_ALPHA_CAPACITY") = kMaxAlphaCapacity;

    py::class_<Graph>(m, "Graph")
        .def(py::init<size_t, const std::vector<Edge> &, std::optional<std::vector<uint32_t>>>(), py::arg("n"),
             py::arg("edges"), py::arg("weights") = py::none())
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def_property_readonly("edges", &Graph::edges)
        .def_property_readonly("weights", &Graph::weights)
        .def_property_readonly("is_weighted", &Graph::is_weighted)
        .def_property_readonly("duplicates_dropped", &Graph::duplicates_dropped)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("a"), py::arg("b"))
        .def("unweighted", &Graph::unweighted)
        .def("canonical_hash", &Graph::canonical_hash)
        .def("to_dict", [](const Graph &g) { return to_python(to_json(g)); })
        .def("__eq__", &Graph::operator==)
        .def("__repr__", &Graph::str);

    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("empty_graph", &empty_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("petersen_graph", &petersen_graph);
    m.def("complement", &complement, py::arg("g"));
    m.def("expand_weighted", [](const Graph &g) {
        WeightedExpansion e = expand_weighted(g);
        return py::make_tuple(e.graph, e.origin);
    }, py::arg("g"), "Blow-up of a weighted graph: (graph, origin of each copy).");

    m.def("catalog_graph", &catalog_graph, py::arg("name"));
    m.def("catalog_entries", &catalog_entries);
    m.def("parse_graph", [](const std::string &text, const std::string &format) {
        ParsedGraph p = parse_graph(text, parse_graph_format(format));
        return py::make_tuple(p.graph, p.warnings);
    }, py::arg("text"), py::arg("format") = "json", "Returns (graph, warnings).");
    m.def("emit_graph", [](const Graph &g, const std::string &format) {
        return emit_graph(g, parse_graph_format(format));
    }, py::arg("g"), py::arg("format") = "json");

    m.def("independence_number", [](const Graph &g, size_t vertex_limit) {
        IndependenceResult r = independence_number(g, vertex_limit);
        return py::make_tuple(r.alpha, r.witness);
    }, py::arg("g"), py::arg("vertex_limit") = kDefaultAlphaVertexLimit, "Returns (alpha, witness).");
    m.def("brute_force_alpha", &brute_force_alpha, py::arg("g"));
    m.def("max_noncontextual_value", &max_noncontextual_value, py::arg("g"));

    py::class_<SdpSolution>(m, "SdpSolution")
        .def_readonly("X", &SdpSolution::X)
        .def_readonly("primal_value", &SdpSolution::primal_value)
        .def_readonly("dual_value", &SdpSolution::dual_value)
        .def_readonly("tolerance", &SdpSolution::tolerance)
        .def_readonly("iterations", &SdpSolution::iterations)
        .def_property_readonly("gap", &SdpSolution::gap)
        .def_property_readonly("status", [](const SdpSolution &s) { return to_string(s.status); })
        .def_property_readonly("converged", [](const SdpSolution &s) { return s.status == SdpStatus::Converged; })
        .def("__repr__", [](const SdpSolution &s) {
            return "SdpSolution(primal=" + std::to_string(s.primal_value) + ", status=" + to_string(s.status) + ")";
        });

    m.def("theta", [](const Graph &g, double tolerance, int max_iterations) {
        py::gil_scoped_release release;
        return theta(g, ThetaOptions{tolerance, max_iterations});
    }, py::arg("g"), py::arg("tolerance") = kDefaultThetaTolerance,
          py::arg("max_iterations") = kDefaultThetaIterationCap);
    m.def("odd_cycle_theta", &odd_cycle_theta, py::arg("n"));

    py::class_<EventGraph>(m, "EventGraph")
        .def_readonly("source", &EventGraph::source)
        .def_readonly("graph", &EventGraph::graph)
        .def_property_readonly("labels", [](const EventGraph &eg) {
            py::list out;
            for (const auto &label : eg.labels) {
                out.append(label_tuple(label));
            }
            return out;
        }, "(obs, out) for singles, (a, b, out_a, out_b) for pair events.");
    m.def("build_two_point_graph", &build_two_point_graph, py::arg("g"));

    py::class_<OrthoRep>(m, "OrthoRep")
        .def(py::init([](const Eigen::VectorXcd &psi, const std::vector<Eigen::VectorXcd> &vectors) {
            return OrthoRep{psi, vectors};
        }), py::arg("psi"), py::arg("vectors"))
        .def_readonly("psi", &OrthoRep::psi)
        .def_readonly("vectors", &OrthoRep::vectors)
        .def_property_readonly("dimension", &OrthoRep::dimension)
        .def("overlap_sum", &OrthoRep::overlap_sum)
        .def("is_real", &OrthoRep::is_real);
    m.def("extract_ortho_rep", &extract_ortho_rep, py::arg("g"), py::arg("solution"),
          py::arg("tolerance") = kDefaultThetaTolerance);
    m.def("verify_ortho_rep", [](const Graph &g, const OrthoRep &rep, double tolerance, double target) {
        return to_python(to_json(verify_ortho_rep(g, rep, tolerance, target)));
    }, py::arg("g"), py::arg("rep"), py::arg("tolerance"), py::arg("theta_target"));
    m.def("kcbs_rep", &builtin_kcbs_rep);

    m.def("joint_probs", [](const Eigen::MatrixXcd &rho, const Graph &g, const OrthoRep &rep, Vertex first,
                            Vertex second, const std::string &scheme) {
        return joint_probs(QState(rho), TwoPointContext::checked(g, first, second), rep, parse_scheme(scheme));
    }, py::arg("rho"), py::arg("g"), py::arg("rep"), py::arg("first"), py::arg("second"),
          py::arg("scheme") = "projective", "[P(0,0), P(0,1), P(1,0), P(1,1)] for measuring first then second.");
    m.def("exact_S", [](const Graph &g, const OrthoRep &rep, const std::string &scheme) {
        ExactStatistics stats = exact_statistics(g, rep, QState::pure(rep.psi), parse_scheme(scheme));
        return py::make_tuple(evaluate_S(g, stats.singles, stats.pairs()),
                              evaluate_S_prime(g, stats.singles, stats.joint));
    }, py::arg("g"), py::arg("rep"), py::arg("scheme") = "projective", "Returns (S, S') in the state psi.");
    m.def("stream_seed", &stream_seed, py::arg("master"), py::arg("key"));

    m.def("run_experiment", [](const Graph &g, const OrthoRep &rep, uint64_t shots, uint64_t seed,
                               double depolarizing, double misalignment, double flip, const std::string &scheme) {
        NoiseModel noise = noise_model(depolarizing, misalignment, flip);
        Scheme s = parse_scheme(scheme);
        ExperimentRecord record = [&] {
            py::gil_scoped_release release;
            return run_experiment(rep, g, shots, seed, noise, s);
        }();
        return to_python(to_json(record, g));
    }, py::arg("g"), py::arg("rep"), py::arg("shots") = 100000, py::arg("seed") = 1, py::arg("depolarizing") = 0.0,
          py::arg("misalignment") = 0.0, py::arg("flip") = 0.0, py::arg("scheme") = "projective");

    m.def("certify", [](const Graph &g, double tolerance, size_t alpha_limit, bool monte_carlo, uint64_t shots,
                        uint64_t seed, double depolarizing, double misalignment, double flip,
                        const std::string &scheme) {
        CertifyOptions options;
        options.tolerance = tolerance;
        options.alpha_vertex_limit = alpha_limit;
        options.monte_carlo = monte_carlo;
        options.shots = shots;
        options.seed = seed;
        options.noise = NoiseModel{depolarizing, misalignment, flip};
        options.scheme = parse_scheme(scheme);
        CertifyReport report = [&] {
            py::gil_scoped_release release;
            return certify(g, options);
        }();
        py::dict out = to_python(to_json(report));
        out["exit_code"] = exit_code(report);
        return out;
    }, py::arg("g"), py::arg("tolerance") = kDefaultThetaTolerance, py::arg("alpha_limit") = kMaxAlphaCapacity,
          py::arg("monte_carlo") = true, py::arg("shots") = 100000, py::arg("seed") = 1,
          py::arg("depolarizing") = 0.0, py::arg("misalignment") = 0.0, py::arg("flip") = 0.0,
          py::arg("scheme") = "projective");
}
