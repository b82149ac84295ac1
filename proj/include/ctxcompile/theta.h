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

#ifndef CTXCOMPILE_THETA_H
#define CTXCOMPILE_THETA_H

#include <Eigen/Dense>
#include <string>

#include "ctxcompile/graph.h"

namespace ctx {

constexpr double kDefaultThetaTolerance = 1e-7;
constexpr int kDefaultThetaIterationCap = 10000;

enum class SdpStatus { Converged, MaxIterations, Infeasible };

std::string to_string(SdpStatus status);

/// Independent feasibility check of a candidate primal matrix.
struct FeasibilityReport {
    double min_eigenvalue = 0;
    double trace_error = 0;
    double max_edge_entry = 0;
    bool psd_ok = false;
    bool trace_ok = false;
    bool edges_ok = false;

    bool ok() const {
        return psd_ok && trace_ok && edges_ok;
    }
};

struct SdpSolution {
    /// Primal optimum of  max <J,X>  s.t. tr X = 1, X_ij = 0 on edges, X psd.
    Eigen::MatrixXd X;
    /// <J,X>; a lower bound on theta when X is feasible.
    double primal_value = 0;
    /// Dual objective; an upper bound when the dual slack is psd.
    double dual_value = 0;
    double tolerance = kDefaultThetaTolerance;
    SdpStatus status = SdpStatus::MaxIterations;
    int iterations = 0;
    FeasibilityReport residuals;

    double gap() const {
        return dual_value - primal_value;
    }
};

struct ThetaOptions {
    double tolerance = kDefaultThetaTolerance;
    int max_iterations = kDefaultThetaIterationCap;
};

/// Lovász number of g. A primal-dual interior point method (HKM direction,
/// Mehrotra predictor-corrector) runs from the strictly feasible pair
/// X = I/n, Z = (n+1)I - J. If its Newton systems become too ill-conditioned
/// before the gap closes, which happens on degenerate programs such as
/// compiled two-point graphs, the iterate is polished by a warm-started
/// boundary point (ADMM) method.
///
/// The reported X has edge entries zeroed and unit trace. dual_value is
/// lambda_max(J - sum_e y_e E_e), an upper bound for any multipliers y.
/// Converged means |gap| and all three residuals, recomputed by
/// verify_feasibility, are within the tolerance. Otherwise the last iterate
/// is returned with status MaxIterations.
///
/// Throws std::invalid_argument for an empty graph (n = 0) or a tolerance
/// outside [1e-10, 1e-3].
SdpSolution theta(const Graph &g, const ThetaOptions &options = {});

/// Recomputes min eigenvalue of X, |tr X - 1| and max |X_ij| over edges.
/// Throws std::invalid_argument if X is not n x n.
FeasibilityReport verify_feasibility(const Graph &g, const Eigen::MatrixXd &X, double tolerance);

/// n cos(pi/n) / (1 + cos(pi/n)), the Lovász number of the odd cycle C_n.
/// Throws std::invalid_argument for even n or n < 5.
double odd_cycle_theta(size_t n);

struct Sandwich {
    size_t alpha = 0;
    double theta = 0;
    SdpSolution solution;
};

/// alpha(g) and theta(g) together. Throws std::logic_error if
/// alpha > theta + tolerance (a solver or search defect).
Sandwich theta_sandwich(const Graph &g, const ThetaOptions &options = {}, size_t alpha_vertex_limit = 64);

}  // namespace ctx

#endif
