#include "conal/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace conal {

Polynomial::Polynomial(std::vector<double> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) c.push_back(0.0);
}

int Polynomial::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i > 0; --i) {
        if (c[static_cast<std::size_t>(i)] != 0.0) return i;
    }
    return 0;
}

bool Polynomial::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; });
}

Complex Polynomial::eval(Complex z) const {
    Complex acc(0.0, 0.0);
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        acc = acc * z + c[static_cast<std::size_t>(i)];
    }
    return acc;
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, double scale) {
    std::vector<Complex> acc{Complex(1.0, 0.0)};
    for (Complex r : roots) {
        std::vector<Complex> next(acc.size() + 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] -= r * acc[i];
        }
        acc = std::move(next);
    }
    std::vector<double> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = scale * acc[i].real();
    return Polynomial(std::move(out));
}

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(a.c.size() + b.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    }
    return Polynomial(std::move(out));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(std::max(a.c.size(), b.c.size()), 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
    return Polynomial(std::move(out));
}

Polynomial poly_scale(const Polynomial& a, double s) {
    std::vector<double> out = a.c;
    for (double& v : out) v *= s;
    return Polynomial(std::move(out));
}

Polynomial poly_shift(const Polynomial& a, int k) {
    std::vector<double> out(a.c.size() + static_cast<std::size_t>(k), 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i + static_cast<std::size_t>(k)] = a.c[i];
    return Polynomial(std::move(out));
}

std::vector<Complex> poly_roots(const Polynomial& a) {
    if (a.is_zero()) throw InvalidInputError("poly_roots: zero polynomial");
    int deg = a.degree();
    // Strip roots at the origin first.
    int low = 0;
    while (low < deg && a.c[static_cast<std::size_t>(low)] == 0.0) ++low;
    std::vector<Complex> roots(static_cast<std::size_t>(low), Complex(0.0, 0.0));
    int n = deg - low;
    if (n == 0) return roots;
    double lead = a.c[static_cast<std::size_t>(deg)];
    Mat comp = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        comp(0, i) = -a.c[static_cast<std::size_t>(deg - 1 - i)] / lead;
        if (i + 1 < n) comp(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Mat> es(comp, /*computeEigenvectors=*/false);
    for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

LaurentPolynomial::LaurentPolynomial(int d, std::vector<double> coeffs)
    : half_degree(d), c(std::move(coeffs)) {
    if (d < 0 || c.size() != static_cast<std::size_t>(2 * d + 1)) {
        throw InvalidInputError("LaurentPolynomial: coefficient count must be 2d+1");
    }
}

double LaurentPolynomial::coeff(int k) const {
    if (k < -half_degree || k > half_degree) return 0.0;
    return c[static_cast<std::size_t>(k + half_degree)];
}

double LaurentPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

bool LaurentPolynomial::symmetric(double tol) const {
    double scale = std::max(max_abs_coeff(), 1e-300);
    for (int k = 1; k <= half_degree; ++k) {
        if (std::abs(coeff(k) - coeff(-k)) > tol * scale) return false;
    }
    return true;
}

Complex LaurentPolynomial::eval(double theta) const {
    Complex acc(0.0, 0.0);
    for (int k = -half_degree; k <= half_degree; ++k) {
        acc += coeff(k) * std::polar(1.0, k * theta);
    }
    return acc;
}

LaurentPolynomial laurent_multiply(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    int d = p.half_degree + q.half_degree;
    std::vector<double> out(static_cast<std::size_t>(2 * d + 1), 0.0);
    for (int i = -p.half_degree; i <= p.half_degree; ++i) {
        for (int j = -q.half_degree; j <= q.half_degree; ++j) {
            out[static_cast<std::size_t>(i + j + d)] += p.coeff(i) * q.coeff(j);
        }
    }
    return LaurentPolynomial(d, std::move(out));
}

LaurentPolynomial laurent_add(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    int d = std::max(p.half_degree, q.half_degree);
    std::vector<double> out(static_cast<std::size_t>(2 * d + 1), 0.0);
    for (int k = -d; k <= d; ++k) out[static_cast<std::size_t>(k + d)] = p.coeff(k) + q.coeff(k);
    return LaurentPolynomial(d, std::move(out));
}

LaurentPolynomial laurent_scale(const LaurentPolynomial& p, double s) {
    std::vector<double> out = p.c;
    for (double& v : out) v *= s;
    return LaurentPolynomial(p.half_degree, std::move(out));
}

LaurentPolynomial laurent_trim(const LaurentPolynomial& p, double rel_tol) {
    double thresh = rel_tol * p.max_abs_coeff();
    int d = p.half_degree;
    while (d > 0 && std::abs(p.coeff(d)) <= thresh && std::abs(p.coeff(-d)) <= thresh) --d;
    std::vector<double> out(static_cast<std::size_t>(2 * d + 1));
    for (int k = -d; k <= d; ++k) out[static_cast<std::size_t>(k + d)] = p.coeff(k);
    return LaurentPolynomial(d, std::move(out));
}

std::vector<Complex> laurent_roots(const LaurentPolynomial& p) {
    LaurentPolynomial t = laurent_trim(p);
    if (t.half_degree == 0 && t.c[0] == 0.0) {
        throw InvalidInputError("laurent_roots: zero polynomial");
    }
    return poly_roots(Polynomial(t.c));
}

LaurentPolynomial laurent_from_autocorrelation(const Polynomial& b) {
    int d = b.degree();
    std::vector<double> out(static_cast<std::size_t>(2 * d + 1), 0.0);
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) {
            out[static_cast<std::size_t>(i - j + d)] +=
                b.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
        }
    }
    return LaurentPolynomial(d, std::move(out));
}

}  // namespace conal
