#pragma once

#include <variant>
#include <vector>

#include "conal/state_space.hpp"

namespace conal {

/// Scalar rational spectral density num(z)/den(z) with symmetric Laurent
/// numerator and denominator, positive on the unit circle.
struct ScalarRationalSpectrum {
    LaurentPolynomial num = LaurentPolynomial::constant(1.0);
    LaurentPolynomial den = LaurentPolynomial::constant(1.0);

    double eval(double theta) const { return (num.eval(theta) / den.eval(theta)).real(); }
};

/// Hermitian matrix values on a uniform frequency grid.
struct SampledSpectrum {
    FrequencyGrid grid;
    std::vector<CMat> values;

    int dim() const { return values.empty() ? 0 : static_cast<int>(values[0].rows()); }
    /// Hermitian within rel tol and min eigenvalue >= -1e-10 * max eigenvalue.
    void validate(double herm_tol = 1e-12, double psd_tol = 1e-10) const;
};

/// A spectral density in one of the three carrier forms: scalar Laurent
/// ratio, stable state-space factor W with Phi = W W*, or grid samples.
using SpectrumInput = std::variant<ScalarRationalSpectrum, StateSpace, SampledSpectrum>;

SampledSpectrum sample_spectrum(const ScalarRationalSpectrum& phi, const FrequencyGrid& grid);
/// Phi(theta) = W(e^{j theta}) W(e^{j theta})^*.
SampledSpectrum sample_factor_spectrum(const StateSpace& w, const FrequencyGrid& grid);
SampledSpectrum sample_spectrum(const SpectrumInput& phi, const FrequencyGrid& grid);

int spectrum_dim(const SpectrumInput& phi);
/// Mean over the grid of tr(Phi), i.e. the trapezoid quadrature of
/// tr(Phi) dtheta/(2 pi) on the periodic grid.
double trace_quadrature(const SampledSpectrum& phi);

}  // namespace conal
