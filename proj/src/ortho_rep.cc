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

#include "ctxcompile/ortho_rep.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace ctx {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;

bool OrthoRep::is_real() const {
    auto real = [](const VectorXcd &v) { return v.imag().cwiseAbs().maxCoeff() == 0.0; };
    if (psi.size() > 0 && !real(psi)) {
        return false;
    }
    return std::all_of(vectors.begin(), vectors.end(), [&](const VectorXcd &v) { return v.size() == 0 || real(v); });
}

double OrthoRep::overlap_sum() const {
    double total = 0;
    for (const auto &v : vectors) {
        total += std::norm(v.dot(psi));
    }
    return total;
}

OrthoRepReport verify_ortho_rep(const Graph &g, const OrthoRep &rep, double tolerance, double theta_target) {
    if (rep.vectors.size() != g.num_vertices()) {
        throw std::invalid_argument(
            "representation has " + std::to_string(rep.vectors.size()) + " vectors for " +
            std::to_string(g.num_vertices()) + " vertices");
    }
    for (const auto &v : rep.vectors) {
        if (v.size() != rep.psi.size()) {
            throw std::invalid_argument("representation vectors do not all have the dimension of psi");
        }
    }
    OrthoRepReport r;
    for (auto [a, b] : g.edges()) {
        r.max_edge_overlap = std::max(r.max_edge_overlap, std::abs(rep.vectors[a].dot(rep.vectors[b])));
    }
    r.max_norm_error = std::abs(rep.psi.norm() - 1.0);
    for (const auto &v : rep.vectors) {
        r.max_norm_error = std::max(r.max_norm_error, std::abs(v.norm() - 1.0));
    }
    r.overlap_sum = rep.overlap_sum();
    r.sum_error = std::abs(r.overlap_sum - theta_target);
    r.orthogonality_ok = r.max_edge_overlap <= tolerance;
    r.norms_ok = r.max_norm_error <= tolerance;
    r.sum_ok = r.sum_error <= tolerance;
    return r;
}

namespace {

/// Orthonormal basis (columns) for the span of `cols`.
MatrixXcd span_basis(const MatrixXcd &cols, double threshold) {
    if (cols.cols() == 0) {
        return MatrixXcd(cols.rows(), 0);
    }
    // Directions with singular value at most `threshold` are left out: the
    // overlap they leave behind is at most `threshold`, while projecting
    // them out would amplify noise between near-identical neighbors into a
    // large, arbitrary correction.
    Eigen::JacobiSVD<MatrixXcd> svd(cols, Eigen::ComputeThinU);
    Index rank = 0;
    while (rank < svd.singularValues().size() && svd.singularValues()(rank) > threshold) {
        rank++;
    }
    return svd.matrixU().leftCols(rank);
}

/// Unit vector orthogonal to the columns of the orthonormal Q, or an empty
/// vector when Q already spans the space.
VectorXcd complement_vector(const MatrixXcd &Q, Index d) {
    if (Q.cols() >= d) {
        return VectorXcd();
    }
    VectorXcd best;
    double best_norm = 0;
    for (Index k = 0; k < d; k++) {
        VectorXcd e = VectorXcd::Zero(d);
        e(k) = 1;
        e -= Q * (Q.adjoint() * e);
        if (e.norm() > best_norm) {
            best_norm = e.norm();
            best = e;
        }
    }
    return best_norm > 1e-8 ? VectorXcd(best / best_norm) : VectorXcd();
}

VectorXcd padded(const VectorXcd &v, Index d) {
    VectorXcd out = VectorXcd::Zero(d);
    out.head(v.size()) = v;
    return out;
}

}  // namespace

OrthoRep extract_ortho_rep(const Graph &g, const SdpSolution &solution, double tolerance) {
    if (solution.status != SdpStatus::Converged) {
        throw ExtractionError("cannot extract a representation from an SDP solution with status " +
                              to_string(solution.status));
    }
    auto n = static_cast<Index>(g.num_vertices());
    if (solution.X.rows() != n || solution.X.cols() != n) {
        throw std::invalid_argument("SDP solution does not match the graph size");
    }

    MatrixXd X = 0.5 * (solution.X + solution.X.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(X);
    std::vector<Index> kept;
    for (Index k = n - 1; k >= 0; k--) {
        if (eig.eigenvalues()(k) > tolerance) {
            kept.push_back(k);
        }
    }
    if (kept.empty()) {
        throw ExtractionError("primal matrix has no eigenvalue above the tolerance");
    }
    auto d = static_cast<Index>(kept.size());
    MatrixXd W(d, n);
    for (Index r = 0; r < d; r++) {
        W.row(r) = std::sqrt(eig.eigenvalues()(kept[r])) * eig.eigenvectors().col(kept[r]).transpose();
    }

    OrthoRep rep;
    VectorXcd sum = W.rowwise().sum().cast<std::complex<double>>();
    if (sum.norm() == 0) {
        throw ExtractionError("column sum of the factor vanishes");
    }
    rep.psi = sum / sum.norm();
    rep.vectors.assign(static_cast<size_t>(n), VectorXcd());

    std::vector<Vertex> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return X(a, a) > X(b, b); });

    std::vector<bool> fixed(static_cast<size_t>(n), false);
    for (Vertex v : order) {
        std::vector<Vertex> done;
        for (Vertex u : g.neighbors(v)) {
            if (fixed[u]) {
                done.push_back(u);
            }
        }
        MatrixXcd cols(d, static_cast<Index>(done.size()));
        for (size_t k = 0; k < done.size(); k++) {
            cols.col(static_cast<Index>(k)) = rep.vectors[done[k]];
        }
        MatrixXcd Q = span_basis(cols, tolerance);

        VectorXcd w = W.col(v).cast<std::complex<double>>();
        w -= Q * (Q.adjoint() * w);
        if (w.norm() <= 1e-12) {
            w = complement_vector(Q, d);
            if (w.size() == 0) {
                d += 1;
                rep.psi = padded(rep.psi, d);
                for (auto &vec : rep.vectors) {
                    if (vec.size() > 0) {
                        vec = padded(vec, d);
                    }
                }
                MatrixXd grown = MatrixXd::Zero(d, n);
                grown.topRows(d - 1) = W;
                W = std::move(grown);
                w = VectorXcd::Zero(d);
                w(d - 1) = 1;
            }
        }
        rep.vectors[v] = w / w.norm();
        fixed[v] = true;
    }

    OrthoRepReport report = verify_ortho_rep(g, rep, 100 * tolerance, solution.primal_value);
    if (!report.ok()) {
        std::stringstream ss;
        ss << "extracted representation failed verification: max edge overlap " << report.max_edge_overlap
           << ", max norm error " << report.max_norm_error << ", overlap sum " << report.overlap_sum << " vs theta "
           << solution.primal_value;
        throw ExtractionError(ss.str());
    }
    return rep;
}

OrthoRep builtin_kcbs_rep() {
    const double c = std::cos(std::numbers::pi / 5);
    const double cos_t = std::sqrt(c / (1 + c));
    const double sin_t = std::sqrt(1 - cos_t * cos_t);
    OrthoRep rep;
    rep.psi = VectorXcd::Zero(3);
    rep.psi(0) = 1;
    for (int k = 0; k < 5; k++) {
        double phi = 4 * std::numbers::pi * k / 5;
        VectorXcd v(3);
        v << cos_t, sin_t * std::cos(phi), sin_t * std::sin(phi);
        rep.vectors.push_back(v);
    }
    return rep;
}

}  // namespace ctx
