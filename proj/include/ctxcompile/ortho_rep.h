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

#ifndef CTXCOMPILE_ORTHO_REP_H
#define CTXCOMPILE_ORTHO_REP_H

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "ctxcompile/graph.h"
#include "ctxcompile/theta.h"

namespace ctx {

/// A handle state psi and one unit vector per vertex, with vectors of
/// adjacent vertices orthogonal. Measuring the projectors |v><v| on psi
/// realizes the vertex probabilities |<v|psi>|^2.
struct OrthoRep {
    Eigen::VectorXcd psi;
    std::vector<Eigen::VectorXcd> vectors;

    size_t dimension() const {
        return static_cast<size_t>(psi.size());
    }
    /// True when every coordinate has zero imaginary part.
    bool is_real() const;
    /// sum_i |<v_i|psi>|^2.
    double overlap_sum() const;
};

struct ExtractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrthoRepReport {
    double max_edge_overlap = 0;
    double max_norm_error = 0;
    double overlap_sum = 0;
    double sum_error = 0;
    bool orthogonality_ok = false;
    bool norms_ok = false;
    bool sum_ok = false;

    bool ok() const {
        return orthogonality_ok && norms_ok && sum_ok;
    }
};

/// Checks edge orthogonality, unit norms (vectors and psi) and
/// |overlap_sum - theta_target| against `tolerance`.
/// Throws std::invalid_argument if the vertex count or dimensions disagree.
OrthoRepReport verify_ortho_rep(const Graph &g, const OrthoRep &rep, double tolerance, double theta_target);

/// Factors the primal optimum X = W^T W (eigenvalues at or below
/// `tolerance` dropped), takes normalized columns as vertex vectors and the
/// normalized column sum as psi.
///
/// Columns are fixed up in order of decreasing X_ii: each is projected off
/// the span of its already-fixed neighbors. A column that vanishes under
/// the projection is replaced by a unit vector of that orthogonal
/// complement; if the complement is trivial the dimension grows by one.
///
/// Throws ExtractionError if `solution` did not converge or the result
/// fails verify_ortho_rep at 100 * tolerance against the primal value.
OrthoRep extract_ortho_rep(const Graph &g, const SdpSolution &solution, double tolerance);

/// The qutrit pentagon representation: psi = (1,0,0),
/// v_k = (cos t, sin t cos(4 pi k/5), sin t sin(4 pi k/5)) with
/// cos^2 t = cos(pi/5) / (1 + cos(pi/5)). v_k is orthogonal to v_{k+-1},
/// so it represents cycle_graph(5); every overlap is 1/sqrt(5).
OrthoRep builtin_kcbs_rep();

}  // namespace ctx

#endif
