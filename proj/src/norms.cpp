#include "conal/norms.hpp"

#include <algorithm>
#include <cmath>

namespace conal {

namespace {

double sigma_max(const CMat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMat> svd(m);
    return svd.singularValues()(0);
}

CMat eval_unit_circle(const StateSpace& g, double theta) {
    if (g.state_dim() == 0) return g.D.cast<Complex>();
    Complex z = std::polar(1.0, theta);
    CMat zi = z * CMat::Identity(g.state_dim(), g.state_dim()) - g.A.cast<Complex>();
    return g.C.cast<Complex>() * zi.partialPivLu().solve(g.B.cast<Complex>()) + g.D.cast<Complex>();
}

struct PencilOutcome {
    bool gamma_exceeds_norm = false;  // no unit-modulus eigenvalue found
    std::vector<double> angles;       // angles of unit-modulus eigenvalues
    bool ill_conditioned = false;
};

PencilOutcome pencil_test(const StateSpace& g, double gamma) {
    PencilOutcome out;
    const int n = g.state_dim();
    const int m = g.inputs();
    Mat R = gamma * gamma * Mat::Identity(m, m) - g.D.transpose() * g.D;
    Eigen::SelfAdjointEigenSolver<Mat> res(R, Eigen::EigenvaluesOnly);
    if (res.eigenvalues().minCoeff() <= 1e-12 * gamma * gamma) {
        out.ill_conditioned = true;
        return out;
    }
    Eigen::LLT<Mat> llt(R);
    Mat RiBt = llt.solve(g.B.transpose());          // R^{-1} B^T
    Mat RiDtC = llt.solve(g.D.transpose() * g.C);   // R^{-1} D^T C
    Mat Acl = g.A + g.B * RiDtC;
    Mat E = Mat::Zero(2 * n, 2 * n);
    E.topLeftCorner(n, n) = Mat::Identity(n, n);
    E.topRightCorner(n, n) = -g.B * RiBt;
    E.bottomRightCorner(n, n) = Acl.transpose();
    Mat F = Mat::Zero(2 * n, 2 * n);
    F.topLeftCorner(n, n) = Acl;
    F.bottomLeftCorner(n, n) = -(g.C.transpose() * g.C + g.C.transpose() * g.D * RiDtC);
    F.bottomRightCorner(n, n) = Mat::Identity(n, n);
    Eigen::GeneralizedEigenSolver<Mat> ges(F, E, /*computeEigenvectors=*/false);
    for (int i = 0; i < 2 * n; ++i) {
        Complex beta(ges.betas()(i), 0.0);
        if (std::abs(beta) < 1e-300) continue;
        Complex lambda = ges.alphas()(i) / beta;
        if (std::abs(std::abs(lambda) - 1.0) < 1e-8) {
            out.angles.push_back(std::arg(lambda));
        }
    }
    out.gamma_exceeds_norm = out.angles.empty();
    return out;
}

}  // namespace

NormResult linf_norm_grid(const std::vector<CMat>& samples, const FrequencyGrid& grid) {
    if (samples.size() != static_cast<std::size_t>(grid.n)) {
        throw InvalidInputError("linf_norm_grid: sample count does not match grid");
    }
    NormResult r;
    r.method = NormMethod::Grid;
    for (int k = 0; k < grid.n; ++k) {
        double s = sigma_max(samples[static_cast<std::size_t>(k)]);
        if (s > r.value) {
            r.value = s;
            r.peak_frequency = grid.theta(k);
        }
    }
    r.lo = r.value;
    r.hi = r.value;
    return r;
}

NormResult linf_norm_grid(const StateSpace& g, const FrequencyGrid& grid) {
    return linf_norm_grid(sample(g, grid), grid);
}

NormResult hinf_norm(const StateSpace& g, double tol) {
    if (g.state_dim() > 0 && !is_stable(g)) {
        throw UnstableSystemError("hinf_norm: system has poles outside or on the unit disk");
    }
    NormResult r;
    r.method = NormMethod::Bisection;
    if (g.state_dim() == 0 || g.C.isZero(0.0) || g.B.isZero(0.0)) {
        r.value = sigma_max(g.D.cast<Complex>());
        r.lo = r.value;
        r.hi = r.value;
        return r;
    }

    // Grid lower bound.
    double lb = sigma_max(g.D.cast<Complex>());
    double peak = 0.0;
    const int n0 = 128;
    for (int k = 0; k < n0; ++k) {
        double theta = -std::numbers::pi_v<double> + 2.0 * std::numbers::pi_v<double> * k / n0;
        double s = sigma_max(eval_unit_circle(g, theta));
        if (s > lb) {
            lb = s;
            peak = theta;
        }
    }
    if (lb <= 0.0) {
        // Zero transfer function.
        r.value = 0.0;
        r.lo = 0.0;
        r.hi = 0.0;
        return r;
    }

    auto test = [&](double gamma) {
        PencilOutcome out = pencil_test(g, gamma);
        for (int retry = 0; out.ill_conditioned && retry < 3; ++retry) {
            gamma += 10.0 * tol * std::max(1.0, gamma);
            out = pencil_test(g, gamma);
        }
        if (out.ill_conditioned) {
            throw ConvergenceError("hinf_norm: symplectic pencil remained ill-conditioned");
        }
        return out;
    };

    double ub = 2.0 * lb;
    for (int i = 0; i < 64 && !test(ub).gamma_exceeds_norm; ++i) ub *= 2.0;

    while (ub - lb > tol * std::max(1.0, lb)) {
        double gamma = 0.5 * (lb + ub);
        PencilOutcome out = test(gamma);
        if (out.gamma_exceeds_norm) {
            ub = gamma;
            continue;
        }
        double new_lb = gamma;
        std::sort(out.angles.begin(), out.angles.end());
        std::vector<double> probes = out.angles;
        for (std::size_t i = 0; i + 1 < out.angles.size(); ++i) {
            probes.push_back(0.5 * (out.angles[i] + out.angles[i + 1]));
        }
        for (double theta : probes) {
            double s = sigma_max(eval_unit_circle(g, theta));
            if (s > new_lb) {
                new_lb = s;
                peak = theta;
            }
        }
        lb = std::max(lb, new_lb);
    }
    r.lo = lb;
    r.hi = ub;
    r.value = 0.5 * (lb + ub);
    r.peak_frequency = peak;
    return r;
}

Mat stein_solve(const Mat& A, const Mat& Q) {
    const int n = static_cast<int>(A.rows());
    if (A.cols() != n || Q.rows() != n || Q.cols() != n) {
        throw InvalidInputError("stein_solve: dimension mismatch");
    }
    if (n == 0) return Mat(0, 0);
    Mat K = Mat::Identity(n * n, n * n);
    // K = I - kron(A, A), vec column-major.
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < n; ++l) {
                for (int k = 0; k < n; ++k) {
                    K(j * n + i, l * n + k) -= A(i, k) * A(j, l);
                }
            }
        }
    }
    Vec q(n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) q(j * n + i) = Q(i, j);
    }
    Vec p = K.partialPivLu().solve(q);
    Mat P(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) P(i, j) = p(j * n + i);
    }
    return 0.5 * (P + P.transpose().eval());
}

double h2_norm_sq(const StateSpace& g) {
    if (g.state_dim() > 0 && !is_stable(g)) {
        throw UnstableSystemError("h2_norm_sq: system has poles outside or on the unit disk");
    }
    double dd = (g.D.transpose() * g.D).trace();
    if (g.state_dim() == 0) return dd;
    Mat P = stein_solve(g.A, g.B * g.B.transpose());
    return (g.C * P * g.C.transpose()).trace() + dd;
}

}  // namespace conal
