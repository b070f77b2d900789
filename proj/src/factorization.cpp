#include "conal/factorization.hpp"

#include <cmath>

namespace conal {

namespace {

Mat pinv_psd(const Mat& m, double rel_tol = 1e-13) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    double cutoff = rel_tol * std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
    Vec inv = es.eigenvalues();
    for (int i = 0; i < inv.size(); ++i) inv(i) = inv(i) > cutoff ? 1.0 / inv(i) : 0.0;
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

Mat sqrt_psd(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    Vec s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().transpose();
}

struct LaurentFactor {
    Polynomial f;  // monic, roots selected inside the unit disk
    double gain = 1.0;
    int half_degree = 0;
};

/// Factor a symmetric Laurent polynomial p positive on the circle as
/// p = gain^2 f(z) f(1/z) with the roots of f inside the unit disk.
LaurentFactor factor_symmetric_laurent(const LaurentPolynomial& p_in, double boundary_tol,
                                       bool strict_inside) {
    LaurentPolynomial p = laurent_trim(p_in);
    LaurentFactor out;
    out.half_degree = p.half_degree;
    if (p.half_degree == 0) {
        if (p.c[0] <= 0.0) throw InvalidInputError("factorization: spectrum not positive");
        out.f = Polynomial::constant(1.0);
        out.gain = std::sqrt(p.c[0]);
        return out;
    }
    std::vector<Complex> roots = laurent_roots(p);
    std::vector<Complex> inside;
    Complex prod(1.0, 0.0);
    for (Complex r : roots) {
        double mod = std::abs(r);
        if (std::abs(mod - 1.0) <= boundary_tol) {
            throw BoundaryRootError(strict_inside
                                        ? "factorization: pole root on the unit circle"
                                        : "factorization: zero root on the unit circle");
        }
        if (mod < 1.0) {
            inside.push_back(r);
            prod *= -r;
        }
    }
    if (static_cast<int>(inside.size()) != p.half_degree) {
        throw InvalidInputError("factorization: roots do not pair across the unit circle");
    }
    out.f = Polynomial::from_roots(inside);
    // z^d p(z) = c_d f(z) prod_i(z - 1/r_i); matching leading coefficients
    // against gain^2 f(z) f(1/z) z^d gives gain^2 = c_d / prod(-r_i).
    double g2 = (p.coeff(p.half_degree) / prod).real();
    if (!(g2 > 0.0)) throw InvalidInputError("factorization: spectrum not positive on the circle");
    out.gain = std::sqrt(g2);
    return out;
}

}  // namespace

StateSpace ScalarFactor::to_state_space() const { return StateSpace::from_rational(num, den); }

ScalarRationalSpectrum ScalarFactor::to_spectrum() const {
    ScalarRationalSpectrum phi;
    phi.num = laurent_trim(laurent_from_autocorrelation(num), 0.0);
    phi.den = laurent_trim(laurent_from_autocorrelation(den), 0.0);
    return phi;
}

StateSpace FactoredSpectrum::to_state_space() const {
    if (is_scalar()) return scalar().to_state_space();
    return matrix();
}

std::vector<CMat> FactoredSpectrum::sample_factor(const FrequencyGrid& grid) const {
    if (!is_scalar()) return conal::sample(matrix(), grid);
    std::vector<CMat> out;
    out.reserve(static_cast<std::size_t>(grid.n));
    for (int k = 0; k < grid.n; ++k) {
        CMat v(1, 1);
        v(0, 0) = scalar().eval_circle(grid.theta(k));
        out.push_back(std::move(v));
    }
    return out;
}

SampledSpectrum FactoredSpectrum::sample(const FrequencyGrid& grid) const {
    SampledSpectrum out;
    out.grid = grid;
    std::vector<CMat> ws = sample_factor(grid);
    out.values.reserve(ws.size());
    for (const CMat& v : ws) {
        CMat p = v * v.adjoint();
        out.values.push_back(0.5 * (p + p.adjoint().eval()));
    }
    return out;
}

FactoredSpectrum minimum_phase_factor_matrix(const StateSpace& w0, double tol,
                                             int max_iterations) {
    if (w0.state_dim() > 0 && !is_stable(w0)) {
        throw UnstableSystemError("minimum_phase_factor_matrix: factor must be stable");
    }
    const int n = w0.state_dim();
    const int p = w0.outputs();
    const Mat BBt = w0.B * w0.B.transpose();
    const Mat BDt = w0.B * w0.D.transpose();
    const Mat DDt = w0.D * w0.D.transpose();
    // P = 0 is a fixed point of the iteration whenever D has full row rank,
    // stabilizing only if W0 is already minimum-phase; start from a small
    // positive multiple of the identity so the iteration can leave it.
    Mat P = 1e-8 * std::max(1.0, BBt.norm()) * Mat::Identity(n, n);
    Mat M, Lam;
    bool converged = (n == 0);
    for (int it = 0; it < max_iterations && !converged; ++it) {
        M = w0.A * P * w0.C.transpose() + BDt;
        Lam = w0.C * P * w0.C.transpose() + DDt;
        Mat X = M * pinv_psd(Lam);
        Mat Pn = w0.A * P * w0.A.transpose() + BBt - X * M.transpose();
        Pn = 0.5 * (Pn + Pn.transpose().eval());
        double dp = (Pn - P).norm();
        P = Pn;
        if (dp <= tol * (1.0 + P.norm())) converged = true;
    }
    if (!converged) {
        throw ConvergenceError("minimum_phase_factor_matrix: Riccati iteration did not converge");
    }
    M = n > 0 ? Mat(w0.A * P * w0.C.transpose() + BDt) : BDt;
    Lam = n > 0 ? Mat(w0.C * P * w0.C.transpose() + DDt) : DDt;
    Eigen::SelfAdjointEigenSolver<Mat> es(Lam, Eigen::EigenvaluesOnly);
    double lmax = es.eigenvalues().maxCoeff();
    if (es.eigenvalues().minCoeff() <= 1e-10 * std::max(lmax, 1e-300)) {
        throw UnsupportedRankError("minimum_phase_factor_matrix: rank-deficient spectrum");
    }
    Mat Lhalf = sqrt_psd(Lam);
    Mat K = M * Lam.inverse();
    FactoredSpectrum out;
    out.factor = StateSpace(w0.A, K * Lhalf, w0.C, Lhalf);
    out.rank = p;
    return out;
}

FactoredSpectrum minimum_phase_factor_scalar(const ScalarRationalSpectrum& phi,
                                             double boundary_tol) {
    if (!phi.num.symmetric() || !phi.den.symmetric()) {
        throw InvalidInputError("minimum_phase_factor_scalar: Laurent polynomials must be symmetric");
    }
    {
        // Reject genuinely sign-changing inputs here; values that merely touch
        // zero fall through to the root analysis, which reports the boundary
        // root precisely.
        const FrequencyGrid check{1024};
        double min_num = 0.0, min_den = 0.0, max_num = 0.0, max_den = 0.0;
        for (int k = 0; k < check.n; ++k) {
            double theta = check.theta(k);
            double n = phi.num.eval(theta).real();
            double d = phi.den.eval(theta).real();
            min_num = std::min(min_num, n);
            min_den = std::min(min_den, d);
            max_num = std::max(max_num, std::abs(n));
            max_den = std::max(max_den, std::abs(d));
        }
        if (min_num < -1e-10 * max_num || min_den < -1e-10 * max_den || max_num == 0.0 ||
            max_den == 0.0) {
            throw InvalidInputError("minimum_phase_factor_scalar: spectrum not positive on grid");
        }
    }
    LaurentFactor fn = factor_symmetric_laurent(phi.num, boundary_tol, /*strict_inside=*/false);
    LaurentFactor fd = factor_symmetric_laurent(phi.den, boundary_tol, /*strict_inside=*/true);
    int dn = fn.half_degree, dd = fd.half_degree;
    Polynomial num = poly_scale(poly_shift(fn.f, std::max(0, dd - dn)), fn.gain / fd.gain);
    Polynomial den = poly_shift(fd.f, std::max(0, dn - dd));
    ScalarFactor w{std::move(num), std::move(den)};
    if (w.eval(Complex(1.0, 0.0)).real() < 0.0) w.num = poly_scale(w.num, -1.0);
    FactoredSpectrum out;
    out.factor = std::move(w);
    out.rank = 1;
    return out;
}

MinimumPhaseReport is_minimum_phase(const StateSpace& w) {
    MinimumPhaseReport r;
    for (Complex p : poles(w)) r.max_pole_modulus = std::max(r.max_pole_modulus, std::abs(p));
    for (Complex z : zeros(w)) r.max_zero_modulus = std::max(r.max_zero_modulus, std::abs(z));
    r.minimum_phase = r.max_pole_modulus < 1.0 - 1e-9 && r.max_zero_modulus <= 1.0 + 1e-9;
    return r;
}

MinimumPhaseReport is_minimum_phase(const ScalarFactor& w) {
    MinimumPhaseReport r;
    for (Complex p : poly_roots(w.den)) r.max_pole_modulus = std::max(r.max_pole_modulus, std::abs(p));
    for (Complex z : poly_roots(w.num)) r.max_zero_modulus = std::max(r.max_zero_modulus, std::abs(z));
    r.minimum_phase = r.max_pole_modulus < 1.0 - 1e-9 && r.max_zero_modulus <= 1.0 + 1e-9;
    return r;
}

MinimumPhaseReport is_minimum_phase(const FactoredSpectrum& w) {
    return w.is_scalar() ? is_minimum_phase(w.scalar()) : is_minimum_phase(w.matrix());
}

double verify_factorization(const FactoredSpectrum& w, const SampledSpectrum& reference) {
    SampledSpectrum got = w.sample(reference.grid);
    if (got.dim() != reference.dim() || got.values.size() != reference.values.size()) {
        throw InvalidInputError("verify_factorization: dimension or grid mismatch");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < reference.values.size(); ++k) {
        double denom = std::max(reference.values[k].norm(), 1e-300);
        worst = std::max(worst, (got.values[k] - reference.values[k]).norm() / denom);
    }
    return worst;
}

}  // namespace conal
