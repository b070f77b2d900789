#pragma once

#include <variant>

#include "conal/spectrum.hpp"

namespace conal {

/// Minimum-phase scalar rational factor w(z) = num(z)/den(z), real
/// coefficients, canonicalized so that w(1) > 0.
struct ScalarFactor {
    Polynomial num = Polynomial::constant(1.0);
    Polynomial den = Polynomial::constant(1.0);

    Complex eval(Complex z) const { return num.eval(z) / den.eval(z); }
    Complex eval_circle(double theta) const { return eval(std::polar(1.0, theta)); }
    StateSpace to_state_space() const;
    /// The spectrum |w|^2 in symmetric Laurent form.
    ScalarRationalSpectrum to_spectrum() const;
};

struct FactoredSpectrum {
    std::variant<ScalarFactor, StateSpace> factor;
    int rank = 1;

    bool is_scalar() const { return std::holds_alternative<ScalarFactor>(factor); }
    const ScalarFactor& scalar() const { return std::get<ScalarFactor>(factor); }
    const StateSpace& matrix() const { return std::get<StateSpace>(factor); }
    StateSpace to_state_space() const;
    std::vector<CMat> sample_factor(const FrequencyGrid& grid) const;
    SampledSpectrum sample(const FrequencyGrid& grid) const;
};

/// Innovations (Kalman) factorization of Phi = W0 W0* for a stable,
/// full-normal-rank factor W0 (any column count). The returned factor is
/// square, biproper and minimum-phase, with D = Lambda^{1/2} symmetric PSD.
FactoredSpectrum minimum_phase_factor_matrix(const StateSpace& w0, double tol = 1e-12,
                                             int max_iterations = 100000);

/// Laurent root-flipping factorization of a scalar rational spectrum.
/// Roots within boundary_tol of the unit circle raise BoundaryRootError.
FactoredSpectrum minimum_phase_factor_scalar(const ScalarRationalSpectrum& phi,
                                             double boundary_tol = 1e-9);

struct MinimumPhaseReport {
    bool minimum_phase = false;
    double max_pole_modulus = 0.0;
    double max_zero_modulus = 0.0;
};

MinimumPhaseReport is_minimum_phase(const StateSpace& w);
MinimumPhaseReport is_minimum_phase(const ScalarFactor& w);
MinimumPhaseReport is_minimum_phase(const FactoredSpectrum& w);

/// Max over the grid of the relative Frobenius residual of W W* against the
/// reference spectrum.
double verify_factorization(const FactoredSpectrum& w, const SampledSpectrum& reference);

}  // namespace conal
