#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conal/state_space.hpp"

using namespace conal;

namespace {

Complex rational_eval(const Polynomial& num, const Polynomial& den, Complex z) {
    return num.eval(z) / den.eval(z);
}

}  // namespace

TEST_CASE("from_rational reproduces the transfer function") {
    Polynomial num({1.0 / 3.0, 1.0});  // z + 1/3
    Polynomial den({-0.5, 1.0});       // z - 1/2
    StateSpace g = StateSpace::from_rational(num, den);
    CHECK(g.state_dim() == 1);
    for (Complex z : {Complex(1.0, 0.0), Complex(0.2, 0.9), Complex(-1.0, 0.0)}) {
        CHECK(std::abs(evaluate(g, z)(0, 0) - rational_eval(num, den, z)) < 1e-12);
    }
    Polynomial num3({0.3, -1.0, 0.0, 2.0});
    Polynomial den3({1.0, 0.5, -0.2, 4.0});
    StateSpace g3 = StateSpace::from_rational(num3, den3);
    for (Complex z : {Complex(1.1, 0.3), Complex(-0.7, 0.6)}) {
        CHECK(std::abs(evaluate(g3, z)(0, 0) - rational_eval(num3, den3, z)) < 1e-12);
    }
}

TEST_CASE("from_rational collapses constant ratios to zero-state systems") {
    Polynomial den({-0.5, 1.0});
    StateSpace g = StateSpace::from_rational(poly_scale(den, 3.0), den);
    CHECK(g.state_dim() == 0);
    CHECK(g.D(0, 0) == doctest::Approx(3.0));
}

TEST_CASE("from_rational rejects improper ratios") {
    CHECK_THROWS_AS(StateSpace::from_rational(Polynomial({0.0, 0.0, 1.0}), Polynomial({1.0, 1.0})),
                    InvalidInputError);
}

TEST_CASE("series, add and inverse agree with pointwise algebra") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n(0.0, 1.0);
    Mat A1(2, 2), A2(1, 1);
    A1 << 0.3, 0.2, -0.1, 0.4;
    A2 << -0.5;
    Mat B1(2, 2), C1(2, 2), D1(2, 2), B2(1, 2), C2(2, 1), D2(2, 2);
    for (auto* m : {&B1, &C1, &D1}) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) (*m)(i, j) = n(rng);
        }
    }
    for (int j = 0; j < 2; ++j) {
        B2(0, j) = n(rng);
        C2(j, 0) = n(rng);
        for (int i = 0; i < 2; ++i) D2(i, j) = n(rng);
    }
    D2 += 3.0 * Mat::Identity(2, 2);  // keep D2 invertible
    StateSpace g1(A1, B1, C1, D1), g2(A2, B2, C2, D2);
    Complex z(0.4, 1.1);
    CMat v1 = evaluate(g1, z), v2 = evaluate(g2, z);
    CHECK((evaluate(series(g1, g2), z) - v1 * v2).norm() < 1e-10);
    CHECK((evaluate(add(g1, g2), z) - (v1 + v2)).norm() < 1e-10);
    StateSpace g2inv = inverse(g2);
    CHECK((evaluate(g2inv, z) - v2.inverse()).norm() < 1e-10);
    CHECK((evaluate(series(g2inv, g2), z) - CMat::Identity(2, 2)).norm() < 1e-9);
}

TEST_CASE("inverse rejects singular feedthrough") {
    Mat A(1, 1), B(1, 1), C(1, 1), D(1, 1);
    A << 0.5;
    B << 1.0;
    C << 1.0;
    D << 0.0;
    CHECK_THROWS_AS(inverse(StateSpace(A, B, C, D)), SingularMatrixError);
}

TEST_CASE("poles and zeros of the worked ratio") {
    StateSpace g =
        StateSpace::from_rational(Polynomial({1.0 / 3.0, 1.0}), Polynomial({-0.5, 1.0}));
    auto ps = poles(g);
    auto zs = zeros(g);
    REQUIRE(ps.size() == 1);
    REQUIRE(zs.size() == 1);
    CHECK(std::abs(ps[0] - Complex(0.5, 0.0)) < 1e-12);
    CHECK(std::abs(zs[0] - Complex(-1.0 / 3.0, 0.0)) < 1e-12);
    CHECK(is_stable(g));
    CHECK(spectral_radius(g) == doctest::Approx(0.5));
}

TEST_CASE("sampling a system with a pole on the circle fails") {
    StateSpace g = StateSpace::from_rational(Polynomial({1.0}), Polynomial({-1.0, 1.0}));
    CHECK_THROWS_AS(sample(g, FrequencyGrid{64}), PoleOnCircleError);
}

TEST_CASE("frequency grid covers [-pi, pi)") {
    FrequencyGrid grid{8};
    CHECK(grid.theta(0) == doctest::Approx(-std::numbers::pi));
    CHECK(grid.theta(4) == doctest::Approx(0.0));
    CHECK(grid.theta(7) < std::numbers::pi);
}

TEST_CASE("dimension validation") {
    CHECK_THROWS_AS(StateSpace(Mat::Zero(2, 2), Mat::Zero(1, 1), Mat::Zero(1, 2), Mat::Zero(1, 1)),
                    InvalidInputError);
}
