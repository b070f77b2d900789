#include "conal/state_space.hpp"

#include <cmath>

namespace conal {

StateSpace::StateSpace(Mat a, Mat b, Mat c, Mat d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
    const auto n = A.rows();
    if (A.cols() != n) throw InvalidInputError("StateSpace: A must be square");
    if (B.rows() != n) throw InvalidInputError("StateSpace: B row count must match A");
    if (C.cols() != n) throw InvalidInputError("StateSpace: C column count must match A");
    if (D.rows() != C.rows() || D.cols() != B.cols()) {
        throw InvalidInputError("StateSpace: D must be outputs x inputs");
    }
}

StateSpace StateSpace::constant(const Mat& d) {
    return StateSpace(Mat(0, 0), Mat::Zero(0, d.cols()), Mat::Zero(d.rows(), 0), d);
}

StateSpace StateSpace::from_rational(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw InvalidInputError("from_rational: zero denominator");
    int n = den.degree();
    if (num.degree() > n) throw InvalidInputError("from_rational: improper transfer function");
    double lead = den.leading();
    double d0 = (num.degree() == n ? num.c[static_cast<std::size_t>(n)] : 0.0) / lead;
    // Remainder num - d0 * den has degree < n.
    std::vector<double> rem(static_cast<std::size_t>(std::max(n, 1)), 0.0);
    double num_scale = 0.0;
    for (int i = 0; i < n; ++i) {
        double ni = i <= num.degree() ? num.c[static_cast<std::size_t>(i)] : 0.0;
        rem[static_cast<std::size_t>(i)] = ni - d0 * den.c[static_cast<std::size_t>(i)];
    }
    for (double v : num.c) num_scale = std::max(num_scale, std::abs(v));
    double rem_norm = 0.0;
    for (double v : rem) rem_norm = std::max(rem_norm, std::abs(v));
    if (n == 0 || rem_norm <= 1e-14 * std::max(num_scale, std::abs(d0) * std::abs(lead))) {
        Mat d(1, 1);
        d(0, 0) = d0;
        return constant(d);
    }
    Mat A = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        A(0, i) = -den.c[static_cast<std::size_t>(n - 1 - i)] / lead;
        if (i + 1 < n) A(i + 1, i) = 1.0;
    }
    Mat B = Mat::Zero(n, 1);
    B(0, 0) = 1.0;
    Mat C = Mat::Zero(1, n);
    for (int i = 0; i < n; ++i) C(0, i) = rem[static_cast<std::size_t>(n - 1 - i)] / lead;
    Mat D(1, 1);
    D(0, 0) = d0;
    return StateSpace(std::move(A), std::move(B), std::move(C), std::move(D));
}

CMat evaluate(const StateSpace& g, Complex z) {
    if (g.state_dim() == 0) return g.D.cast<Complex>();
    Eigen::VectorXcd ev = g.A.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) {
        if (std::abs(z - ev(i)) <= 1e-12) {
            throw SingularMatrixError("evaluate: z coincides with a pole");
        }
    }
    CMat zi = z * CMat::Identity(g.state_dim(), g.state_dim()) - g.A.cast<Complex>();
    CMat x = zi.partialPivLu().solve(g.B.cast<Complex>());
    return g.C.cast<Complex>() * x + g.D.cast<Complex>();
}

std::vector<CMat> sample(const StateSpace& g, const FrequencyGrid& grid) {
    if (g.state_dim() > 0) {
        Eigen::VectorXcd ev = g.A.eigenvalues();
        for (int i = 0; i < ev.size(); ++i) {
            if (std::abs(std::abs(ev(i)) - 1.0) < 1e-9) {
                throw PoleOnCircleError("sample: pole within 1e-9 of the unit circle");
            }
        }
    }
    std::vector<CMat> out;
    out.reserve(static_cast<std::size_t>(grid.n));
    CMat Ac = g.A.cast<Complex>();
    CMat Bc = g.B.cast<Complex>();
    CMat Cc = g.C.cast<Complex>();
    CMat Dc = g.D.cast<Complex>();
    for (int k = 0; k < grid.n; ++k) {
        if (g.state_dim() == 0) {
            out.push_back(Dc);
            continue;
        }
        Complex z = std::polar(1.0, grid.theta(k));
        CMat zi = z * CMat::Identity(g.state_dim(), g.state_dim()) - Ac;
        out.push_back(Cc * zi.partialPivLu().solve(Bc) + Dc);
    }
    return out;
}

StateSpace series(const StateSpace& g1, const StateSpace& g2) {
    if (g1.inputs() != g2.outputs()) throw InvalidInputError("series: dimension mismatch");
    int n1 = g1.state_dim(), n2 = g2.state_dim();
    Mat A = Mat::Zero(n1 + n2, n1 + n2);
    A.topLeftCorner(n1, n1) = g1.A;
    A.topRightCorner(n1, n2) = g1.B * g2.C;
    A.bottomRightCorner(n2, n2) = g2.A;
    Mat B(n1 + n2, g2.inputs());
    B.topRows(n1) = g1.B * g2.D;
    B.bottomRows(n2) = g2.B;
    Mat C(g1.outputs(), n1 + n2);
    C.leftCols(n1) = g1.C;
    C.rightCols(n2) = g1.D * g2.C;
    return StateSpace(std::move(A), std::move(B), std::move(C), g1.D * g2.D);
}

StateSpace add(const StateSpace& g1, const StateSpace& g2) {
    if (g1.inputs() != g2.inputs() || g1.outputs() != g2.outputs()) {
        throw InvalidInputError("add: dimension mismatch");
    }
    int n1 = g1.state_dim(), n2 = g2.state_dim();
    Mat A = Mat::Zero(n1 + n2, n1 + n2);
    A.topLeftCorner(n1, n1) = g1.A;
    A.bottomRightCorner(n2, n2) = g2.A;
    Mat B(n1 + n2, g1.inputs());
    B.topRows(n1) = g1.B;
    B.bottomRows(n2) = g2.B;
    Mat C(g1.outputs(), n1 + n2);
    C.leftCols(n1) = g1.C;
    C.rightCols(n2) = g2.C;
    return StateSpace(std::move(A), std::move(B), std::move(C), g1.D + g2.D);
}

StateSpace inverse(const StateSpace& g) {
    if (g.inputs() != g.outputs()) throw InvalidInputError("inverse: D must be square");
    Eigen::FullPivLU<Mat> lu(g.D);
    // Condition estimate via |max pivot| / |min pivot|.
    double pmax = 0.0, pmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < lu.matrixLU().diagonalSize(); ++i) {
        double p = std::abs(lu.matrixLU()(i, i));
        pmax = std::max(pmax, p);
        pmin = std::min(pmin, p);
    }
    if (!(pmin > 0.0) || pmax / pmin >= 1e12) {
        throw SingularMatrixError("inverse: D is singular or ill-conditioned");
    }
    Mat Di = lu.inverse();
    if (g.state_dim() == 0) return StateSpace::constant(Di);
    return StateSpace(g.A - g.B * Di * g.C, g.B * Di, -Di * g.C, Di);
}

std::vector<Complex> poles(const StateSpace& g) {
    std::vector<Complex> out;
    if (g.state_dim() == 0) return out;
    Eigen::VectorXcd ev = g.A.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) out.push_back(ev(i));
    return out;
}

std::vector<Complex> zeros(const StateSpace& g) {
    StateSpace inv = inverse(g);
    return poles(inv);
}

double spectral_radius(const StateSpace& g) {
    double r = 0.0;
    for (Complex p : poles(g)) r = std::max(r, std::abs(p));
    return r;
}

bool is_stable(const StateSpace& g, double margin) {
    return spectral_radius(g) < 1.0 - margin;
}

}  // namespace conal
