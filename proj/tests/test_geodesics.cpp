#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conal/geodesics.hpp"

using namespace conal;

namespace {

ScalarRationalSpectrum phi1_example() {
    return {LaurentPolynomial::constant(4.0), LaurentPolynomial(1, {-2.0, 5.0, -2.0})};
}

ScalarRationalSpectrum phi2_example() {
    return {LaurentPolynomial::constant(9.0), LaurentPolynomial(1, {3.0, 10.0, 3.0})};
}

// Factor roots kept well inside the disk so that extrapolated geodesic
// points stay clear of the circle.
Polynomial random_factor(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> radius(0.0, 0.6), angle(0.1, 3.0);
    std::uniform_real_distribution<double> real_root(-0.6, 0.6);
    Complex pair = std::polar(radius(rng), angle(rng));
    std::vector<Complex> roots{pair, std::conj(pair), Complex(real_root(rng), 0.0)};
    return Polynomial::from_roots(roots);
}

ScalarRationalSpectrum random_scalar_spectrum(std::mt19937_64& rng) {
    return {laurent_from_autocorrelation(random_factor(rng)),
            laurent_from_autocorrelation(random_factor(rng))};
}

double eval_point(const GeodesicPoint& p, double theta, const FrequencyGrid& grid, int k) {
    if (const auto* s = std::get_if<ScalarRationalSpectrum>(&p.spectrum)) return s->eval(theta);
    return sample_spectrum(p.spectrum, grid).values[static_cast<std::size_t>(k)](0, 0).real();
}

StateSpace random_stable(std::mt19937_64& rng, int n, int p, double radius = 0.8) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat A(n, n), B(n, p), C(p, n), D(p, p);
    for (auto* mat : {&A, &B, &C, &D}) {
        for (int i = 0; i < mat->rows(); ++i) {
            for (int j = 0; j < mat->cols(); ++j) (*mat)(i, j) = g(rng);
        }
    }
    double r = Eigen::EigenSolver<Mat>(A, false).eigenvalues().cwiseAbs().maxCoeff();
    if (r > 0.0) A *= radius / std::max(r, radius);
    D += 2.0 * Mat::Identity(p, p);
    return StateSpace(A, B, C, D);
}

}  // namespace

TEST_CASE("finsler geodesic endpoints reproduce the inputs") {
    GeodesicSpec spec = make_geodesic_spec(phi1_example(), phi2_example());
    FrequencyGrid grid{512};
    GeodesicPoint a = finsler_geodesic(spec, 0.0, grid);
    GeodesicPoint b = finsler_geodesic(spec, 1.0, grid);
    ScalarRationalSpectrum p1 = phi1_example(), p2 = phi2_example();
    for (int k = 0; k < grid.n; ++k) {
        double theta = grid.theta(k);
        CHECK(eval_point(a, theta, grid, k) == doctest::Approx(p1.eval(theta)).epsilon(1e-8));
        CHECK(eval_point(b, theta, grid, k) == doctest::Approx(p2.eval(theta)).epsilon(1e-8));
    }
    CHECK(a.factor.has_value());
}

TEST_CASE("finsler geodesic has constant metric speed") {
    GeodesicSpec spec = make_geodesic_spec(phi1_example(), phi2_example());
    double d01 = thompson_distance(phi1_example(), phi2_example(), MetricPath::Rational).value;
    std::vector<double> taus{0.0, 0.2, 0.45, 0.8, 1.0};
    for (std::size_t i = 0; i < taus.size(); ++i) {
        for (std::size_t j = i + 1; j < taus.size(); ++j) {
            SpectrumInput a = finsler_geodesic(spec, taus[i]).spectrum;
            SpectrumInput b = finsler_geodesic(spec, taus[j]).spectrum;
            double d = thompson_distance(a, b, MetricPath::Rational).value;
            CHECK(d == doctest::Approx((taus[j] - taus[i]) * d01).epsilon(1e-4));
        }
    }
}

TEST_CASE("extrapolated geodesic points stay positive (Proposition 2)") {
    std::mt19937_64 rng(47);
    FrequencyGrid grid{512};
    for (int trial = 0; trial < 15; ++trial) {
        ScalarRationalSpectrum p1 = random_scalar_spectrum(rng);
        ScalarRationalSpectrum p2 = random_scalar_spectrum(rng);
        GeodesicSpec spec = make_geodesic_spec(p1, p2);
        double min1 = 1e300;
        for (int k = 0; k < grid.n; ++k) min1 = std::min(min1, p1.eval(grid.theta(k)));
        for (double tau : {-2.0, -1.0, 1.5, 3.0}) {
            GeodesicPoint p = finsler_geodesic(spec, tau, grid);
            const auto& chi = std::get<ScalarRationalSpectrum>(p.spectrum);
            // chi >= min(alpha^tau, beta^tau) min(phi1): the paper's bound
            // alpha^tau min(phi1) only holds for tau >= 0 where c2 >= 0.
            double bound = std::min(std::pow(spec.alpha, tau), std::pow(spec.beta, tau)) * min1;
            for (int k = 0; k < grid.n; ++k) {
                CHECK(chi.eval(grid.theta(k)) >= bound * (1.0 - 1e-8));
            }
            CHECK(p.factor.has_value());
        }
    }
}

TEST_CASE("degenerate pair: scaled copies follow the exponential ray") {
    ScalarRationalSpectrum p1 = phi1_example();
    ScalarRationalSpectrum p2 = phi1_example();
    p2.num = laurent_scale(p2.num, 4.0);
    GeodesicSpec spec = make_geodesic_spec(p1, p2);
    CHECK(spec.degenerate);
    GeodesicPoint mid = finsler_geodesic(spec, 0.5);
    const auto& chi = std::get<ScalarRationalSpectrum>(mid.spectrum);
    for (double theta : {0.0, 1.0, -2.0}) {
        CHECK(chi.eval(theta) == doctest::Approx(2.0 * p1.eval(theta)).epsilon(1e-10));
    }
}

TEST_CASE("matrix finsler geodesic stays rational on [0,1] and matches samples") {
    std::mt19937_64 rng(53);
    StateSpace w1 = random_stable(rng, 2, 2);
    StateSpace w2 = random_stable(rng, 3, 2);
    GeodesicSpec spec = make_geodesic_spec(w1, w2);
    FrequencyGrid grid{256};
    GeodesicPoint mid = finsler_geodesic(spec, 0.5, grid);
    REQUIRE(mid.factor.has_value());
    CHECK(is_minimum_phase(*mid.factor).minimum_phase);
    // Compare against the direct sampled combination.
    double b = spec.beta, a = spec.alpha;
    double c2 = (std::sqrt(b) - std::sqrt(a)) / (b - a);
    double c1 = (b * std::sqrt(a) - a * std::sqrt(b)) / (b - a);
    SampledSpectrum s1 = sample_factor_spectrum(w1, grid);
    SampledSpectrum s2 = sample_factor_spectrum(w2, grid);
    SampledSpectrum got = mid.factor->sample(grid);
    for (int k = 0; k < grid.n; ++k) {
        CMat want = c2 * s2.values[static_cast<std::size_t>(k)] +
                    c1 * s1.values[static_cast<std::size_t>(k)];
        CHECK((got.values[static_cast<std::size_t>(k)] - want).norm() < 1e-7 * want.norm());
    }
    // Outside [0,1] the matrix point falls back to samples.
    GeodesicPoint outside = finsler_geodesic(spec, 1.5, grid);
    CHECK_FALSE(outside.factor.has_value());
    CHECK(std::holds_alternative<SampledSpectrum>(outside.spectrum));
}

TEST_CASE("scalar riemannian geodesic matches the closed form") {
    ScalarRationalSpectrum p1 = phi1_example(), p2 = phi2_example();
    FrequencyGrid grid{512};
    for (double tau : {0.25, 0.5, 0.9}) {
        SampledSpectrum g = riemannian_geodesic(p1, p2, tau, grid);
        for (int k = 0; k < grid.n; ++k) {
            double theta = grid.theta(k);
            double want = std::pow(p1.eval(theta), 1.0 - tau) * std::pow(p2.eval(theta), tau);
            CHECK(g.values[static_cast<std::size_t>(k)](0, 0).real()
                  == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("matrix riemannian geodesic endpoints and midpoint congruence") {
    std::mt19937_64 rng(59);
    StateSpace w1 = random_stable(rng, 2, 2);
    StateSpace w2 = random_stable(rng, 2, 2);
    FrequencyGrid grid{128};
    SampledSpectrum s1 = sample_factor_spectrum(w1, grid);
    SampledSpectrum s2 = sample_factor_spectrum(w2, grid);
    SampledSpectrum g0 = riemannian_geodesic(w1, w2, 0.0, grid);
    SampledSpectrum g1 = riemannian_geodesic(w1, w2, 1.0, grid);
    for (int k = 0; k < grid.n; ++k) {
        auto idx = static_cast<std::size_t>(k);
        CHECK((g0.values[idx] - s1.values[idx]).norm() < 1e-9 * s1.values[idx].norm());
        CHECK((g1.values[idx] - s2.values[idx]).norm() < 1e-9 * s2.values[idx].norm());
    }
    // The midpoint is the pointwise geometric mean: equidistant in d_R.
    SampledSpectrum mid = riemannian_geodesic(w1, w2, 0.5, grid);
    double to1 = riemannian_distance(s1, mid, grid);
    double to2 = riemannian_distance(mid, s2, grid);
    CHECK(to1 == doctest::Approx(to2).epsilon(1e-9));
    CHECK(to1 + to2 == doctest::Approx(riemannian_distance(s1, s2, grid)).epsilon(1e-9));
}

TEST_CASE("hilbert geodesic keeps unit integrated trace") {
    FrequencyGrid grid{512};
    SpectrumInput n1 = normalize_spectrum(phi1_example(), grid);
    SpectrumInput n2 = normalize_spectrum(phi2_example(), grid);
    for (double tau : {0.0, 0.3, 1.0}) {
        SampledSpectrum g = hilbert_geodesic(n1, n2, tau, grid);
        CHECK(trace_quadrature(g) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(hilbert_geodesic(phi1_example(), phi2_example(), 0.5, grid),
                    InvalidInputError);
}

TEST_CASE("normalize_spectrum gives unit integrated trace in all carriers") {
    FrequencyGrid grid{1 << 12};
    std::mt19937_64 rng(61);
    SpectrumInput scalar = normalize_spectrum(phi1_example(), grid);
    CHECK(trace_quadrature(sample_spectrum(scalar, grid)) == doctest::Approx(1.0).epsilon(1e-6));
    SpectrumInput matrix = normalize_spectrum(SpectrumInput{random_stable(rng, 3, 2)}, grid);
    CHECK(trace_quadrature(sample_spectrum(matrix, grid)) == doctest::Approx(1.0).epsilon(1e-6));
    SpectrumInput sampled =
        normalize_spectrum(SpectrumInput{sample_spectrum(phi2_example(), grid)}, grid);
    CHECK(trace_quadrature(sample_spectrum(sampled, grid)) == doctest::Approx(1.0).epsilon(1e-12));
}
