#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "conal/laurent.hpp"

using namespace conal;

TEST_CASE("polynomial evaluation and degree") {
    Polynomial p({1.0, -2.0, 3.0});  // 1 - 2z + 3z^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(2.0).real() == doctest::Approx(9.0));
    CHECK(p.eval(Complex(0.0, 1.0)).real() == doctest::Approx(-2.0));
    CHECK(p.eval(Complex(0.0, 1.0)).imag() == doctest::Approx(-2.0));
    CHECK(Polynomial({1.0, 0.0, 0.0}).degree() == 0);
}

TEST_CASE("from_roots builds a real monic polynomial") {
    std::vector<Complex> roots = {Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(-2.0, 0.0)};
    Polynomial p = Polynomial::from_roots(roots, 3.0);
    CHECK(p.degree() == 3);
    CHECK(p.leading() == doctest::Approx(3.0));
    for (Complex r : roots) CHECK(std::abs(p.eval(r)) < 1e-12);
}

TEST_CASE("poly_roots recovers known roots") {
    std::vector<Complex> roots = {Complex(0.3, 0.0), Complex(-0.5, 0.4), Complex(-0.5, -0.4),
                                  Complex(2.0, 0.0)};
    std::vector<Complex> got = poly_roots(Polynomial::from_roots(roots, -2.0));
    REQUIRE(got.size() == roots.size());
    for (Complex r : roots) {
        double best = 1e9;
        for (Complex g : got) best = std::min(best, std::abs(g - r));
        CHECK(best < 1e-10);
    }
    // Origin roots are preserved.
    CHECK(poly_roots(Polynomial({0.0, 0.0, 1.0})).size() == 2);
}

TEST_CASE("poly arithmetic") {
    Polynomial a({1.0, 1.0});
    Polynomial b({-1.0, 1.0});
    Polynomial ab = poly_multiply(a, b);
    CHECK(ab.c == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK(poly_add(a, b).c == std::vector<double>{0.0, 2.0});
    CHECK(poly_shift(a, 2).c == std::vector<double>{0.0, 0.0, 1.0, 1.0});
}

TEST_CASE("laurent evaluation is real for symmetric coefficients") {
    LaurentPolynomial p(1, {-2.0, 5.0, -2.0});  // 5 - 2z - 2/z
    CHECK(p.symmetric());
    CHECK(p.eval(0.0).real() == doctest::Approx(1.0));
    CHECK(p.eval(std::numbers::pi).real() == doctest::Approx(9.0));
    CHECK(std::abs(p.eval(0.7).imag()) < 1e-14);
    CHECK_FALSE(LaurentPolynomial(1, {1.0, 0.0, 2.0}).symmetric());
}

TEST_CASE("laurent arithmetic matches pointwise evaluation") {
    LaurentPolynomial p(1, {-2.0, 5.0, -2.0});
    LaurentPolynomial q(2, {0.5, 1.0, 3.0, 1.0, 0.5});
    LaurentPolynomial prod = laurent_multiply(p, q);
    LaurentPolynomial sum = laurent_add(p, q);
    for (double theta : {0.0, 0.3, 1.7, -2.5}) {
        CHECK(prod.eval(theta).real()
              == doctest::Approx((p.eval(theta) * q.eval(theta)).real()));
        CHECK(sum.eval(theta).real() == doctest::Approx((p.eval(theta) + q.eval(theta)).real()));
    }
    CHECK(laurent_scale(p, 2.0).coeff(0) == doctest::Approx(10.0));
}

TEST_CASE("laurent_trim drops negligible outer pairs") {
    LaurentPolynomial p(2, {1e-18, -0.5, 1.25, -0.5, 1e-18});
    CHECK(laurent_trim(p).half_degree == 1);
}

TEST_CASE("autocorrelation laurent of 1 - 0.5z") {
    LaurentPolynomial p = laurent_from_autocorrelation(Polynomial({1.0, -0.5}));
    CHECK(p.half_degree == 1);
    CHECK(p.coeff(0) == doctest::Approx(1.25));
    CHECK(p.coeff(1) == doctest::Approx(-0.5));
    CHECK(p.coeff(-1) == doctest::Approx(-0.5));
}

TEST_CASE("laurent roots of an autocorrelation pair across the circle") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> b{1.0};
        for (int i = 0; i < 4; ++i) b.push_back(u(rng));
        std::vector<Complex> roots = laurent_roots(laurent_from_autocorrelation(Polynomial(b)));
        std::sort(roots.begin(), roots.end(),
                  [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
        REQUIRE(roots.size() % 2 == 0);
        std::size_t half = roots.size() / 2;
        for (std::size_t i = 0; i < half; ++i) {
            // Each inside root r pairs with an outside root 1/r.
            double target = 1.0 / std::abs(roots[i]);
            double best = 1e9;
            for (std::size_t j = half; j < roots.size(); ++j) {
                best = std::min(best, std::abs(std::abs(roots[j]) - target));
            }
            CHECK(best < 1e-6 * target);
        }
    }
}
