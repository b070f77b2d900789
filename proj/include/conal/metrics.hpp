#pragma once

#include "conal/factorization.hpp"
#include "conal/norms.hpp"
#include "conal/spectrum.hpp"

namespace conal {

enum class MetricPath { Rational, Grid };

struct GainResult {
    double value = 0.0;  // +infinity across parts of the cone
    double peak_frequency = 0.0;
    MetricPath path_used = MetricPath::Grid;

    bool finite() const { return std::isfinite(value); }
};

struct DistanceResult {
    double value = 0.0;
    double m12 = 0.0;  // M(Phi1, Phi2)
    double m21 = 0.0;  // M(Phi2, Phi1)
    MetricPath path_used = MetricPath::Grid;
    double peak12 = 0.0;
    double peak21 = 0.0;

    bool finite() const { return std::isfinite(value); }
};

/// Smallest lambda with Phi1 <= lambda Phi2 frequency-wise. Rational path:
/// squared H-infinity norm of W2^{-1} W1, +infinity if the ratio has a pole
/// or zero within 1e-9 of the circle. Falls back to the grid path when
/// factorization fails.
GainResult gain_M(const SpectrumInput& phi1, const SpectrumInput& phi2, MetricPath path,
                  const FrequencyGrid& grid = {});

DistanceResult thompson_distance(const SpectrumInput& phi1, const SpectrumInput& phi2,
                                 MetricPath path, const FrequencyGrid& grid = {});
DistanceResult hilbert_distance(const SpectrumInput& phi1, const SpectrumInput& phi2,
                                MetricPath path, const FrequencyGrid& grid = {});

DistanceResult thompson_distance_sampled(const SampledSpectrum& phi1, const SampledSpectrum& phi2);
DistanceResult hilbert_distance_sampled(const SampledSpectrum& phi1, const SampledSpectrum& phi2);

/// Filtering-invariant Riemannian distance via grid quadrature of the
/// squared Frobenius norm of log(Phi1^{-1/2} Phi2 Phi1^{-1/2}).
double riemannian_distance(const SpectrumInput& phi1, const SpectrumInput& phi2,
                           const FrequencyGrid& grid = {});

/// ||W2^{-1}W1||_{H2}^2 + ||W1^{-1}W2||_{H2}^2 - 2n; grid quadrature of
/// tr(Phi2^{-1}Phi1) + tr(Phi1^{-1}Phi2) - 2n when the ratios are not
/// factorizable/stable.
double frobenius_divergence(const SpectrumInput& phi1, const SpectrumInput& phi2,
                            const FrequencyGrid& grid = {});

/// Thompson tangent norm: max over the grid of the spectral radius of
/// x^{-1/2} v x^{-1/2} (v Hermitian-valued, x positive definite).
double finsler_norm_thompson(const SampledSpectrum& v, const SampledSpectrum& x);

/// Hilbert tangent seminorm: sup of the largest eigenvalue minus inf of the
/// smallest eigenvalue of x^{-1/2} v x^{-1/2} over the grid.
double hilbert_seminorm(const SampledSpectrum& v, const SampledSpectrum& x);

enum class TangentNorm { Thompson, Hilbert };

/// Forward-difference length of a discretized curve of spectra.
double curve_length(const std::vector<SampledSpectrum>& path, const std::vector<double>& params,
                    TangentNorm norm);

}  // namespace conal
