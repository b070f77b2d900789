#pragma once

#include <span>
#include <vector>

#include "conal/types.hpp"

namespace conal {

/// Real polynomial in z, coefficients stored in ascending powers.
struct Polynomial {
    std::vector<double> c{0.0};

    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    /// Index of the highest (numerically) nonzero coefficient.
    int degree() const;
    double leading() const { return c[static_cast<std::size_t>(degree())]; }
    Complex eval(Complex z) const;
    bool is_zero() const;

    static Polynomial constant(double v) { return Polynomial({v}); }
    /// Monic real polynomial with the given roots (conjugate pairs allowed),
    /// scaled by `scale`.
    static Polynomial from_roots(std::span<const Complex> roots, double scale = 1.0);
};

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, double s);
/// Multiply by z^k (k >= 0).
Polynomial poly_shift(const Polynomial& a, int k);
/// Roots via companion-matrix eigenvalues; throws on the zero polynomial.
std::vector<Complex> poly_roots(const Polynomial& a);

/// Real Laurent polynomial sum_{k=-d..d} c_k z^k.
struct LaurentPolynomial {
    int half_degree = 0;
    std::vector<double> c{0.0};  // c[k + half_degree] holds c_k

    LaurentPolynomial() = default;
    LaurentPolynomial(int d, std::vector<double> coeffs);

    double coeff(int k) const;
    /// c_k = c_{-k} within tol (relative to the largest coefficient).
    bool symmetric(double tol = 1e-12) const;
    /// Value at z = e^{j theta}; real (up to roundoff) when symmetric.
    Complex eval(double theta) const;
    double max_abs_coeff() const;

    static LaurentPolynomial constant(double v) { return LaurentPolynomial(0, {v}); }
};

LaurentPolynomial laurent_multiply(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial laurent_add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial laurent_scale(const LaurentPolynomial& p, double s);
/// Drop outer coefficient pairs below rel_tol * max|c_k|.
LaurentPolynomial laurent_trim(const LaurentPolynomial& p, double rel_tol = 1e-12);
/// Roots of z^d p(z) viewed as an ordinary polynomial (after trimming).
std::vector<Complex> laurent_roots(const LaurentPolynomial& p);
/// Laurent form of b(z) * b(1/z) for a real polynomial b; symmetric by construction.
LaurentPolynomial laurent_from_autocorrelation(const Polynomial& b);

}  // namespace conal
