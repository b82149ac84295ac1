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

#include "ctxcompile/theta.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ctxcompile/alpha.h"

namespace ctx {

std::string to_string(SdpStatus status) {
    switch (status) {
        case SdpStatus::Converged:
            return "converged";
        case SdpStatus::MaxIterations:
            return "max_iterations";
        case SdpStatus::Infeasible:
            return "infeasible";
    }
    return "unknown";
}

FeasibilityReport verify_feasibility(const Graph &g, const Eigen::MatrixXd &X, double tolerance) {
    auto n = static_cast<Eigen::Index>(g.num_vertices());
    if (X.rows() != n || X.cols() != n) {
        throw std::invalid_argument(
            "matrix is " + std::to_string(X.rows()) + "x" + std::to_string(X.cols()) + ", graph has " +
            std::to_string(n) + " vertices");
    }
    FeasibilityReport r;
    Eigen::MatrixXd sym = 0.5 * (X + X.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = n > 0 ? eig.eigenvalues()(0) : 0.0;
    r.trace_error = std::abs(X.trace() - 1.0);
    r.max_edge_entry = 0;
    for (auto [a, b] : g.edges()) {
        r.max_edge_entry = std::max({r.max_edge_entry, std::abs(X(a, b)), std::abs(X(b, a))});
    }
    r.psd_ok = r.min_eigenvalue >= -tolerance;
    r.trace_ok = r.trace_error <= tolerance;
    r.edges_ok = r.max_edge_entry <= tolerance;
    return r;
}

double odd_cycle_theta(size_t n) {
    if (n < 5 || n % 2 == 0) {
        throw std::invalid_argument("odd_cycle_theta needs an odd n >= 5, got " + std::to_string(n));
    }
    double c = std::cos(std::numbers::pi / static_cast<double>(n));
    return static_cast<double>(n) * c / (1.0 + c);
}

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Constraint 0 is tr X = 1; constraint 1+k is <E_k, X> = 2 X_ij = 0 for
/// the k-th edge, with E_k = e_i e_j^T + e_j e_i^T.
class ThetaProgram {
   public:
    explicit ThetaProgram(const Graph &g) : n_(static_cast<Index>(g.num_vertices())), edges_(g.edges()) {
    }

    Index n() const {
        return n_;
    }
    Index m() const {
        return static_cast<Index>(edges_.size()) + 1;
    }

    /// A(W) for a possibly non-symmetric W.
    VectorXd apply(const MatrixXd &W) const {
        VectorXd out(m());
        out(0) = W.trace();
        for (size_t k = 0; k < edges_.size(); k++) {
            auto [i, j] = edges_[k];
            out(static_cast<Index>(k) + 1) = W(i, j) + W(j, i);
        }
        return out;
    }

    /// A^T(y) = y_0 I + sum_k y_k E_k.
    MatrixXd adjoint(const VectorXd &y) const {
        MatrixXd out = y(0) * MatrixXd::Identity(n_, n_);
        for (size_t k = 0; k < edges_.size(); k++) {
            auto [i, j] = edges_[k];
            double v = y(static_cast<Index>(k) + 1);
            out(i, j) += v;
            out(j, i) += v;
        }
        return out;
    }

    /// Schur complement M_kl = <A_k, P A_l Q> with P = Z^{-1}, Q = X.
    MatrixXd schur(const MatrixXd &P, const MatrixXd &Q) const {
        Index mm = m();
        MatrixXd M(mm, mm);
        M(0, 0) = (P * Q).trace();
        MatrixXd PQ = P * Q;
        for (size_t k = 0; k < edges_.size(); k++) {
            auto [i, j] = edges_[k];
            Index r = static_cast<Index>(k) + 1;
            double v = PQ(i, j) + PQ(j, i);
            M(0, r) = v;
            M(r, 0) = v;
        }
        for (size_t a = 0; a < edges_.size(); a++) {
            auto [i, j] = edges_[a];
            for (size_t b = a; b < edges_.size(); b++) {
                auto [k, l] = edges_[b];
                double v = P(j, k) * Q(i, l) + P(j, l) * Q(i, k) + P(i, k) * Q(j, l) + P(i, l) * Q(j, k);
                M(static_cast<Index>(a) + 1, static_cast<Index>(b) + 1) = v;
                M(static_cast<Index>(b) + 1, static_cast<Index>(a) + 1) = v;
            }
        }
        return M;
    }

   private:
    Index n_;
    std::vector<Edge> edges_;
};

/// Largest t with S + t dS still positive definite, given the Cholesky
/// factor of S. Returns +inf when dS does not decrease any direction.
double max_step(const Eigen::LLT<MatrixXd> &chol, const MatrixXd &dS) {
    MatrixXd L = chol.matrixL();
    MatrixXd tmp = L.triangularView<Eigen::Lower>().solve(dS);
    MatrixXd S = L.triangularView<Eigen::Lower>().solve(tmp.transpose()).transpose();
    S = 0.5 * (S + S.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(S, Eigen::EigenvaluesOnly);
    double lo = eig.eigenvalues()(0);
    if (lo >= 0) {
        return std::numeric_limits<double>::infinity();
    }
    return -1.0 / lo;
}

MatrixXd symmetrized(const MatrixXd &A) {
    return 0.5 * (A + A.transpose());
}

}  // namespace

namespace {

struct Iterate {
    MatrixXd X;
    VectorXd y;
    MatrixXd Z;
};

/// Rigorous upper bound from dual multipliers alone:
/// theta <= lambda_max(J - sum_e y_e E_e) for any edge multipliers.
double dual_bound(const ThetaProgram &prog, const VectorXd &y) {
    VectorXd edge_only = y;
    edge_only(0) = 0;
    MatrixXd S = MatrixXd::Ones(prog.n(), prog.n()) - prog.adjoint(edge_only);
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(S, Eigen::EigenvaluesOnly);
    return eig.eigenvalues()(prog.n() - 1);
}

/// Zeroes edge entries and rescales to unit trace.
MatrixXd cleaned(const Graph &g, const MatrixXd &X) {
    MatrixXd out = symmetrized(X);
    for (auto [a, b] : g.edges()) {
        out(a, b) = 0;
        out(b, a) = 0;
    }
    double t = out.trace();
    if (t > 0) {
        out /= t;
    }
    return out;
}

/// The test the final status uses: the cleaned primal matrix is feasible and
/// its value is within tol of the dual bound.
bool certified(const Graph &g, const ThetaProgram &prog, const Iterate &it, double tol) {
    MatrixXd Xc = cleaned(g, it.X);
    return verify_feasibility(g, Xc, tol).ok() && std::abs(dual_bound(prog, it.y) - Xc.sum()) <= tol;
}

/// Primal-dual path following. Stops on convergence or when the Newton
/// direction degrades (tiny steps, non-finite values). Returns the number
/// of iterations used; `it` holds the last iterate that was strictly
/// feasible in the cone.
int interior_point(const Graph &g, const ThetaProgram &prog, int max_iterations, double tol, Iterate &it,
                   bool &converged) {
    const Index n = prog.n();
    const double nd = static_cast<double>(n);
    const MatrixXd C = MatrixXd::Ones(n, n);
    VectorXd b = VectorXd::Zero(prog.m());
    b(0) = 1;

    it.X = MatrixXd::Identity(n, n) / nd;
    it.y = VectorXd::Zero(prog.m());
    it.y(0) = nd + 1;
    it.Z = prog.adjoint(it.y) - C;
    converged = false;

    int iter = 0;
    while (iter < max_iterations) {
        iter++;
        const MatrixXd &X = it.X;
        const MatrixXd &Z = it.Z;
        Eigen::LLT<MatrixXd> cholZ(Z);
        Eigen::LLT<MatrixXd> cholX(X);
        if (cholZ.info() != Eigen::Success || cholX.info() != Eigen::Success) {
            break;
        }
        MatrixXd Zi = symmetrized(cholZ.solve(MatrixXd::Identity(n, n)));

        MatrixXd Rd = prog.adjoint(it.y) - C - Z;
        double mu = X.cwiseProduct(Z).sum() / nd;

        // Near the optimum of a degenerate program M is only numerically
        // semidefinite; LDLT still yields a usable direction, refined once.
        MatrixXd M = prog.schur(Zi, X);
        Eigen::LDLT<MatrixXd> schur(M);
        VectorXd base_rhs = -b - prog.apply(Zi * Rd * X);
        VectorXd A_Zi = prog.apply(Zi);

        auto direction = [&](double target_mu, const MatrixXd *second_order, MatrixXd &dX, VectorXd &dy,
                             MatrixXd &dZ) {
            VectorXd rhs = base_rhs + target_mu * A_Zi;
            if (second_order != nullptr) {
                rhs -= prog.apply(*second_order);
            }
            dy = schur.solve(rhs);
            dy += schur.solve(rhs - M * dy);
            dZ = prog.adjoint(dy) + Rd;
            MatrixXd raw = target_mu * Zi - X - Zi * dZ * X;
            if (second_order != nullptr) {
                raw -= *second_order;
            }
            dX = symmetrized(raw);
        };

        // Predictor.
        MatrixXd dXa, dZa;
        VectorXd dya;
        direction(0.0, nullptr, dXa, dya, dZa);
        double ap = std::min(1.0, max_step(cholX, dXa));
        double ad = std::min(1.0, max_step(cholZ, dZa));
        double mu_aff = (X + ap * dXa).cwiseProduct(Z + ad * dZa).sum() / nd;
        double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

        // Corrector.
        MatrixXd second = Zi * dZa * dXa;
        MatrixXd dX, dZ;
        VectorXd dy;
        direction(sigma * mu, &second, dX, dy, dZ);

        if (!dX.allFinite() || !dy.allFinite()) {
            break;
        }
        double step_p = std::min(1.0, 0.98 * max_step(cholX, dX));
        double step_d = std::min(1.0, 0.98 * max_step(cholZ, dZ));
        if (step_p < 1e-3 || step_d < 1e-3) {
            break;
        }
        Iterate next{symmetrized(X + step_p * dX), it.y + step_d * dy, symmetrized(Z + step_d * dZ)};
        if (!next.X.allFinite() || !next.Z.allFinite()) {
            break;
        }
        double rp = (b - prog.apply(next.X)).cwiseAbs().maxCoeff();
        if (rp > tol) {
            break;
        }
        it = std::move(next);
        if (dual_bound(prog, it.y) - it.X.sum() <= tol && certified(g, prog, it, tol)) {
            converged = true;
            break;
        }
    }
    return iter;
}

/// ADMM on the dual augmented Lagrangian (boundary point method). For this
/// program A A^T = diag(n, 2, ..., 2), so each sweep costs one n x n
/// eigendecomposition. Returns the number of sweeps.
int boundary_point(const Graph &g, const ThetaProgram &prog, int max_iterations, double tol, Iterate &it,
                   bool &converged) {
    const Index n = prog.n();
    const MatrixXd C = MatrixXd::Ones(n, n);
    VectorXd b = VectorXd::Zero(prog.m());
    b(0) = 1;
    VectorXd gram = VectorXd::Constant(prog.m(), 2.0);
    gram(0) = static_cast<double>(n);

    constexpr int kPenaltyWarmup = 500;
    double penalty = 1.0;
    converged = false;
    int iter = 0;
    while (iter < max_iterations) {
        iter++;
        it.y = (prog.apply(it.Z + C) + penalty * (prog.apply(it.X) - b)).cwiseQuotient(gram);
        MatrixXd V = prog.adjoint(it.y) - C - penalty * it.X;
        V = symmetrized(V);
        Eigen::SelfAdjointEigenSolver<MatrixXd> eig(V);
        const auto &lam = eig.eigenvalues();
        const auto &U = eig.eigenvectors();
        MatrixXd Zn = MatrixXd::Zero(n, n);
        MatrixXd Xn = MatrixXd::Zero(n, n);
        for (Index k = 0; k < n; k++) {
            if (lam(k) > 0) {
                Zn.noalias() += lam(k) * U.col(k) * U.col(k).transpose();
            } else {
                Xn.noalias() -= (lam(k) / penalty) * U.col(k) * U.col(k).transpose();
            }
        }
        it.Z = Zn;
        it.X = Xn;

        if (iter % 10 == 0 || iter == max_iterations) {
            double primal_res = (prog.apply(it.X) - b).norm();
            double dual_res = (prog.adjoint(it.y) - C - it.Z).norm();
            if (certified(g, prog, it, tol)) {
                converged = true;
                break;
            }
            // Keep the two residuals within a factor of 10 of each other,
            // but only while warming up: a penalty that keeps changing
            // voids the convergence guarantee and was seen to drift.
            if (iter > kPenaltyWarmup) {
                continue;
            }
            if (primal_res > 10 * dual_res) {
                penalty *= 1.6;
            } else if (dual_res > 10 * primal_res) {
                penalty /= 1.6;
            }
        }
    }
    return iter;
}

}  // namespace

SdpSolution theta(const Graph &g, const ThetaOptions &options) {
    if (g.num_vertices() == 0) {
        throw std::invalid_argument("theta of the empty vertex set is undefined");
    }
    if (!(options.tolerance >= 1e-10 && options.tolerance <= 1e-3)) {
        throw std::invalid_argument("theta tolerance must lie in [1e-10, 1e-3]");
    }

    SdpSolution sol;
    sol.tolerance = options.tolerance;
    const double tol = options.tolerance;

    if (g.num_vertices() == 1) {
        sol.X = MatrixXd::Ones(1, 1);
        sol.primal_value = 1;
        sol.dual_value = 1;
        sol.residuals = verify_feasibility(g, sol.X, tol);
        sol.status = SdpStatus::Converged;
        return sol;
    }

    ThetaProgram prog(g);
    Iterate it;
    bool converged = false;
    int used = interior_point(g, prog, std::min(options.max_iterations, 200), tol, it, converged);
    if (!converged && used < options.max_iterations) {
        used += boundary_point(g, prog, options.max_iterations - used, tol, it, converged);
    }

    sol.X = cleaned(g, it.X);
    sol.primal_value = sol.X.sum();
    sol.dual_value = dual_bound(prog, it.y);
    sol.iterations = used;
    sol.residuals = verify_feasibility(g, sol.X, tol);
    sol.status = (sol.residuals.ok() && std::abs(sol.gap()) <= tol) ? SdpStatus::Converged : SdpStatus::MaxIterations;
    return sol;
}

Sandwich theta_sandwich(const Graph &g, const ThetaOptions &options, size_t alpha_vertex_limit) {
    Sandwich s;
    s.alpha = independence_number(g, alpha_vertex_limit).alpha;
    s.solution = theta(g, options);
    s.theta = s.solution.primal_value;
    if (static_cast<double>(s.alpha) > s.theta + std::max(options.tolerance, std::abs(s.solution.gap()))) {
        throw std::logic_error(
            "alpha = " + std::to_string(s.alpha) + " exceeds theta = " + std::to_string(s.theta) + " for " + g.str());
    }
    return s;
}

}  // namespace ctx
