#pragma once

#include <optional>

#include "conal/metrics.hpp"

namespace conal {

/// Endpoint data for the projective straight-line (Finsler) geodesic:
/// beta = M(Phi2, Phi1), alpha = m(Phi2, Phi1) = 1 / M(Phi1, Phi2).
struct GeodesicSpec {
    SpectrumInput phi1;
    SpectrumInput phi2;
    double alpha = 1.0;
    double beta = 1.0;
    bool degenerate = false;  // |beta - alpha| <= 1e-10 * beta
};

GeodesicSpec make_geodesic_spec(const SpectrumInput& phi1, const SpectrumInput& phi2,
                                MetricPath path = MetricPath::Rational,
                                const FrequencyGrid& grid = {});

struct GeodesicPoint {
    /// Rational representation when available (scalar spectrum or matrix
    /// factor), sampled otherwise.
    SpectrumInput spectrum;
    std::optional<FactoredSpectrum> factor;
};

/// chi(tau) = c2(tau) Phi2 + c1(tau) Phi1 with c2 = (b^t - a^t)/(b - a),
/// c1 = (b a^t - a b^t)/(b - a). Scalar pairs stay rational for every real
/// tau; matrix pairs stay rational on [0, 1] (stacked-factor refactorization)
/// and are sampled outside it.
GeodesicPoint finsler_geodesic(const GeodesicSpec& spec, double tau,
                               const FrequencyGrid& grid = {});

/// Frequency-wise W1 (W1^{-1} Phi2 W1^{-*})^tau W1^*; defined for all real tau.
SampledSpectrum riemannian_geodesic(const SpectrumInput& phi1, const SpectrumInput& phi2,
                                    double tau, const FrequencyGrid& grid = {});

/// Trace-normalized Riemannian geodesic between unit-trace spectra.
SampledSpectrum hilbert_geodesic(const SpectrumInput& phi1, const SpectrumInput& phi2, double tau,
                                 const FrequencyGrid& grid = {});

/// Scale to unit integrated trace; rational inputs use the exact Stein-based
/// H2 normalization of the factor.
SpectrumInput normalize_spectrum(const SpectrumInput& phi, const FrequencyGrid& grid = {});

}  // namespace conal
