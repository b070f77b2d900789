#include "conal/spectrum.hpp"

#include <cmath>

namespace conal {

void SampledSpectrum::validate(double herm_tol, double psd_tol) const {
    for (const CMat& v : values) {
        if (v.rows() != v.cols() || v.rows() != dim()) {
            throw InvalidInputError("SampledSpectrum: values must be square of equal size");
        }
        double scale = std::max(v.norm(), 1e-300);
        if ((v - v.adjoint()).norm() > herm_tol * scale) {
            throw InvalidInputError("SampledSpectrum: value not Hermitian");
        }
        Eigen::SelfAdjointEigenSolver<CMat> es(v, Eigen::EigenvaluesOnly);
        double lo = es.eigenvalues().minCoeff();
        double hi = es.eigenvalues().maxCoeff();
        if (lo < -psd_tol * std::max(hi, 1e-300)) {
            throw InvalidInputError("SampledSpectrum: value not positive semi-definite");
        }
    }
}

SampledSpectrum sample_spectrum(const ScalarRationalSpectrum& phi, const FrequencyGrid& grid) {
    SampledSpectrum out;
    out.grid = grid;
    out.values.reserve(static_cast<std::size_t>(grid.n));
    for (int k = 0; k < grid.n; ++k) {
        CMat v(1, 1);
        v(0, 0) = phi.eval(grid.theta(k));
        out.values.push_back(std::move(v));
    }
    return out;
}

SampledSpectrum sample_factor_spectrum(const StateSpace& w, const FrequencyGrid& grid) {
    SampledSpectrum out;
    out.grid = grid;
    std::vector<CMat> ws = sample(w, grid);
    out.values.reserve(ws.size());
    for (const CMat& v : ws) {
        CMat p = v * v.adjoint();
        out.values.push_back(0.5 * (p + p.adjoint().eval()));
    }
    return out;
}

SampledSpectrum sample_spectrum(const SpectrumInput& phi, const FrequencyGrid& grid) {
    if (const auto* s = std::get_if<ScalarRationalSpectrum>(&phi)) return sample_spectrum(*s, grid);
    if (const auto* w = std::get_if<StateSpace>(&phi)) return sample_factor_spectrum(*w, grid);
    const auto& samp = std::get<SampledSpectrum>(phi);
    if (samp.grid.n != grid.n) throw InvalidInputError("sample_spectrum: grid mismatch");
    return samp;
}

int spectrum_dim(const SpectrumInput& phi) {
    if (std::holds_alternative<ScalarRationalSpectrum>(phi)) return 1;
    if (const auto* w = std::get_if<StateSpace>(&phi)) return w->outputs();
    return std::get<SampledSpectrum>(phi).dim();
}

double trace_quadrature(const SampledSpectrum& phi) {
    double acc = 0.0;
    for (const CMat& v : phi.values) acc += v.trace().real();
    return acc / phi.values.size();
}

}  // namespace conal
