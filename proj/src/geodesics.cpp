#include "conal/geodesics.hpp"

#include <cmath>

namespace conal {

namespace {

struct Coefficients {
    double c1, c2;
};

Coefficients geodesic_coefficients(const GeodesicSpec& spec, double tau) {
    if (spec.degenerate) return {std::pow(spec.alpha, tau), 0.0};
    double a = spec.alpha, b = spec.beta;
    double at = std::pow(a, tau), bt = std::pow(b, tau);
    return {(b * at - a * bt) / (b - a), (bt - at) / (b - a)};
}

CMat hermitian_power(const CMat& m, double tau) {
    Eigen::SelfAdjointEigenSolver<CMat> es(m);
    if (es.eigenvalues().minCoeff() <= 0.0) {
        throw InvalidInputError("geodesic: matrix not positive definite");
    }
    Vec p = es.eigenvalues();
    for (int i = 0; i < p.size(); ++i) p(i) = std::pow(p(i), tau);
    return es.eigenvectors() * p.asDiagonal() * es.eigenvectors().adjoint();
}

SampledSpectrum combine_sampled(const SampledSpectrum& s1, const SampledSpectrum& s2, double c1,
                                double c2) {
    if (s1.grid.n != s2.grid.n || s1.dim() != s2.dim()) {
        throw InvalidInputError("geodesic: grid or dimension mismatch");
    }
    SampledSpectrum out = s1;
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        out.values[k] = c2 * s2.values[k] + c1 * s1.values[k];
    }
    return out;
}

}  // namespace

GeodesicSpec make_geodesic_spec(const SpectrumInput& phi1, const SpectrumInput& phi2,
                                MetricPath path, const FrequencyGrid& grid) {
    GeodesicSpec spec;
    spec.phi1 = phi1;
    spec.phi2 = phi2;
    GainResult m12 = gain_M(phi1, phi2, path, grid);
    GainResult m21 = gain_M(phi2, phi1, path, grid);
    if (!m12.finite() || !m21.finite()) {
        throw InvalidInputError("make_geodesic_spec: spectra lie in different parts of the cone");
    }
    spec.alpha = 1.0 / m12.value;
    spec.beta = m21.value;
    spec.degenerate = std::abs(spec.beta - spec.alpha) <= 1e-10 * spec.beta;
    return spec;
}

GeodesicPoint finsler_geodesic(const GeodesicSpec& spec, double tau, const FrequencyGrid& grid) {
    Coefficients c = geodesic_coefficients(spec, tau);
    const auto* s1 = std::get_if<ScalarRationalSpectrum>(&spec.phi1);
    const auto* s2 = std::get_if<ScalarRationalSpectrum>(&spec.phi2);
    if (s1 && (s2 || spec.degenerate)) {
        ScalarRationalSpectrum chi;
        if (spec.degenerate || c.c2 == 0.0) {
            chi.num = laurent_scale(s1->num, c.c1);
            chi.den = s1->den;
        } else {
            chi.num = laurent_add(laurent_scale(laurent_multiply(s2->num, s1->den), c.c2),
                                  laurent_scale(laurent_multiply(s1->num, s2->den), c.c1));
            chi.den = laurent_multiply(s1->den, s2->den);
        }
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int k = 0; k < grid.n; ++k) {
            double v = chi.eval(grid.theta(k));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (lo <= 1e-14 * hi) {
            throw BoundaryRootError("finsler_geodesic: positivity margin lost");
        }
        GeodesicPoint out;
        out.factor = minimum_phase_factor_scalar(chi);
        out.spectrum = std::move(chi);
        return out;
    }
    const auto* w1 = std::get_if<StateSpace>(&spec.phi1);
    const auto* w2 = std::get_if<StateSpace>(&spec.phi2);
    if (w1 && spec.degenerate) {
        StateSpace scaled = *w1;
        double s = std::sqrt(c.c1);
        scaled.B *= s;
        scaled.D *= s;
        GeodesicPoint out;
        out.factor = minimum_phase_factor_matrix(scaled);
        out.spectrum = out.factor->to_state_space();
        return out;
    }
    if (w1 && w2 && tau >= 0.0 && tau <= 1.0) {
        // Both coefficients are nonnegative on [0, 1]: stack the scaled
        // factors and refactor.
        double r2 = std::sqrt(std::max(c.c2, 0.0)), r1 = std::sqrt(std::max(c.c1, 0.0));
        int n1 = w1->state_dim(), n2 = w2->state_dim();
        Mat A = Mat::Zero(n1 + n2, n1 + n2);
        A.topLeftCorner(n2, n2) = w2->A;
        A.bottomRightCorner(n1, n1) = w1->A;
        Mat B = Mat::Zero(n1 + n2, w2->inputs() + w1->inputs());
        B.topLeftCorner(n2, w2->inputs()) = r2 * w2->B;
        B.bottomRightCorner(n1, w1->inputs()) = r1 * w1->B;
        Mat C(w1->outputs(), n1 + n2);
        C.leftCols(n2) = w2->C;
        C.rightCols(n1) = w1->C;
        Mat D(w1->outputs(), w2->inputs() + w1->inputs());
        D.leftCols(w2->inputs()) = r2 * w2->D;
        D.rightCols(w1->inputs()) = r1 * w1->D;
        StateSpace stacked(std::move(A), std::move(B), std::move(C), std::move(D));
        GeodesicPoint out;
        out.factor = minimum_phase_factor_matrix(stacked);
        out.spectrum = out.factor->to_state_space();
        return out;
    }
    GeodesicPoint out;
    out.spectrum = combine_sampled(sample_spectrum(spec.phi1, grid),
                                   sample_spectrum(spec.phi2, grid), c.c1, c.c2);
    return out;
}

SampledSpectrum riemannian_geodesic(const SpectrumInput& phi1, const SpectrumInput& phi2,
                                    double tau, const FrequencyGrid& grid) {
    SampledSpectrum s1 = sample_spectrum(phi1, grid);
    SampledSpectrum s2 = sample_spectrum(phi2, grid);
    if (s1.dim() != s2.dim()) throw InvalidInputError("riemannian_geodesic: dimension mismatch");
    SampledSpectrum out = s1;
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        if (s1.dim() == 1) {
            double a = s1.values[k](0, 0).real(), b = s2.values[k](0, 0).real();
            if (!(a > 0.0 && b > 0.0)) {
                throw InvalidInputError("riemannian_geodesic: spectrum not PD");
            }
            out.values[k](0, 0) = std::pow(a, 1.0 - tau) * std::pow(b, tau);
        } else {
            CMat w = hermitian_power(s1.values[k], 0.5);
            CMat wi = w.partialPivLu().inverse();
            CMat mid = wi * s2.values[k] * wi.adjoint();
            CMat v = w * hermitian_power(0.5 * (mid + mid.adjoint().eval()), tau) * w.adjoint();
            out.values[k] = 0.5 * (v + v.adjoint().eval());
        }
    }
    return out;
}

SampledSpectrum hilbert_geodesic(const SpectrumInput& phi1, const SpectrumInput& phi2, double tau,
                                 const FrequencyGrid& grid) {
    SampledSpectrum s1 = sample_spectrum(phi1, grid);
    SampledSpectrum s2 = sample_spectrum(phi2, grid);
    if (std::abs(trace_quadrature(s1) - 1.0) > 1e-8 ||
        std::abs(trace_quadrature(s2) - 1.0) > 1e-8) {
        throw InvalidInputError("hilbert_geodesic: inputs must have unit integrated trace");
    }
    SampledSpectrum out = riemannian_geodesic(s1, s2, tau, grid);
    double c = trace_quadrature(out);
    for (CMat& v : out.values) v /= c;
    return out;
}

SpectrumInput normalize_spectrum(const SpectrumInput& phi, const FrequencyGrid& grid) {
    if (const auto* s = std::get_if<ScalarRationalSpectrum>(&phi)) {
        FactoredSpectrum w = minimum_phase_factor_scalar(*s);
        double c = h2_norm_sq(w.to_state_space());
        ScalarRationalSpectrum out = *s;
        out.num = laurent_scale(out.num, 1.0 / c);
        return out;
    }
    if (const auto* w = std::get_if<StateSpace>(&phi)) {
        double c = h2_norm_sq(*w);
        StateSpace out = *w;
        double s = 1.0 / std::sqrt(c);
        out.B *= s;
        out.D *= s;
        return out;
    }
    SampledSpectrum out = std::get<SampledSpectrum>(phi);
    double c = trace_quadrature(out);
    for (CMat& v : out.values) v /= c;
    return out;
}

}  // namespace conal
