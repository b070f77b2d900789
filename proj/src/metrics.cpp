#include "conal/metrics.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace conal {

namespace {

constexpr double kBoundaryTol = 1e-9;
const double kInf = std::numeric_limits<double>::infinity();

std::optional<FactoredSpectrum> try_factor(const SpectrumInput& phi) {
    if (const auto* s = std::get_if<ScalarRationalSpectrum>(&phi)) {
        return minimum_phase_factor_scalar(*s, kBoundaryTol);
    }
    if (const auto* w = std::get_if<StateSpace>(&phi)) {
        return minimum_phase_factor_matrix(*w);
    }
    return std::nullopt;
}

bool near_circle(const std::vector<Complex>& roots, double tol = kBoundaryTol) {
    for (Complex r : roots) {
        if (std::abs(std::abs(r) - 1.0) < tol) return true;
    }
    return false;
}

/// W2^{-1} W1 as a state-space system, or nullopt when the ratio has a
/// pole or zero within tolerance of the unit circle (infinite gain).
std::optional<StateSpace> factor_ratio(const FactoredSpectrum& w1, const FactoredSpectrum& w2) {
    if (w1.is_scalar() && w2.is_scalar()) {
        Polynomial num = poly_multiply(w1.scalar().num, w2.scalar().den);
        Polynomial den = poly_multiply(w1.scalar().den, w2.scalar().num);
        // Cancel common powers of z.
        std::size_t kn = 0, kd = 0;
        while (kn < num.c.size() - 1 && num.c[kn] == 0.0) ++kn;
        while (kd < den.c.size() - 1 && den.c[kd] == 0.0) ++kd;
        std::size_t k = std::min(kn, kd);
        num.c.erase(num.c.begin(), num.c.begin() + static_cast<std::ptrdiff_t>(k));
        den.c.erase(den.c.begin(), den.c.begin() + static_cast<std::ptrdiff_t>(k));
        if (near_circle(poly_roots(num)) || near_circle(poly_roots(den))) return std::nullopt;
        return StateSpace::from_rational(num, den);
    }
    StateSpace ratio = series(inverse(w2.to_state_space()), w1.to_state_space());
    if (near_circle(poles(ratio)) || near_circle(zeros(ratio))) return std::nullopt;
    return ratio;
}

GainResult gain_rational(const FactoredSpectrum& w1, const FactoredSpectrum& w2) {
    GainResult r;
    r.path_used = MetricPath::Rational;
    std::optional<StateSpace> ratio = factor_ratio(w1, w2);
    if (!ratio) {
        r.value = kInf;
        return r;
    }
    NormResult norm = hinf_norm(*ratio);
    r.value = norm.value * norm.value;
    r.peak_frequency = norm.peak_frequency;
    return r;
}

GainResult gain_grid(const SampledSpectrum& p1, const SampledSpectrum& p2) {
    if (p1.grid.n != p2.grid.n || p1.dim() != p2.dim()) {
        throw InvalidInputError("gain_M: grid or dimension mismatch");
    }
    GainResult r;
    r.path_used = MetricPath::Grid;
    r.value = 0.0;
    for (int k = 0; k < p1.grid.n; ++k) {
        const CMat& a = p1.values[static_cast<std::size_t>(k)];
        const CMat& b = p2.values[static_cast<std::size_t>(k)];
        double lmax;
        if (p1.dim() == 1) {
            double bb = b(0, 0).real();
            if (bb <= 0.0) throw InvalidInputError("gain_M: spectrum not positive on grid");
            lmax = a(0, 0).real() / bb;
        } else {
            Eigen::SelfAdjointEigenSolver<CMat> chk(b, Eigen::EigenvaluesOnly);
            if (chk.eigenvalues().minCoeff() <=
                1e-12 * std::max(chk.eigenvalues().maxCoeff(), 1e-300)) {
                throw InvalidInputError("gain_M: rank-deficient spectrum on grid");
            }
            Eigen::GeneralizedSelfAdjointEigenSolver<CMat> ges(a, b, Eigen::EigenvaluesOnly);
            lmax = ges.eigenvalues().maxCoeff();
        }
        if (lmax > r.value) {
            r.value = lmax;
            r.peak_frequency = p1.grid.theta(k);
        }
    }
    return r;
}

struct GainPair {
    GainResult m12, m21;
    MetricPath path_used;
};

GainPair gain_pair(const SpectrumInput& phi1, const SpectrumInput& phi2, MetricPath path,
                   const FrequencyGrid& grid) {
    bool sampled = std::holds_alternative<SampledSpectrum>(phi1) ||
                   std::holds_alternative<SampledSpectrum>(phi2);
    if (path == MetricPath::Rational && !sampled) {
        try {
            FactoredSpectrum w1 = *try_factor(phi1);
            FactoredSpectrum w2 = *try_factor(phi2);
            return {gain_rational(w1, w2), gain_rational(w2, w1), MetricPath::Rational};
        } catch (const BoundaryRootError&) {
            // A zero of one spectrum on the circle: the spectra lie in
            // different parts of the cone.
            GainResult inf;
            inf.path_used = MetricPath::Rational;
            inf.value = kInf;
            return {inf, inf, MetricPath::Rational};
        } catch (const Error&) {
            // Factorization failure: fall through to the grid path.
        }
    }
    SampledSpectrum s1 = sample_spectrum(phi1, grid);
    SampledSpectrum s2 = sample_spectrum(phi2, grid);
    return {gain_grid(s1, s2), gain_grid(s2, s1), MetricPath::Grid};
}

DistanceResult from_gains(const GainPair& g, bool hilbert) {
    DistanceResult d;
    d.m12 = g.m12.value;
    d.m21 = g.m21.value;
    d.path_used = g.path_used;
    d.peak12 = g.m12.peak_frequency;
    d.peak21 = g.m21.peak_frequency;
    if (!g.m12.finite() || !g.m21.finite()) {
        d.value = kInf;
        return d;
    }
    d.value = hilbert ? std::log(d.m12 * d.m21) : std::log(std::max(d.m12, d.m21));
    d.value = std::max(d.value, 0.0);
    return d;
}

}  // namespace

GainResult gain_M(const SpectrumInput& phi1, const SpectrumInput& phi2, MetricPath path,
                  const FrequencyGrid& grid) {
    bool sampled = std::holds_alternative<SampledSpectrum>(phi1) ||
                   std::holds_alternative<SampledSpectrum>(phi2);
    if (path == MetricPath::Rational && !sampled) {
        try {
            FactoredSpectrum w1 = *try_factor(phi1);
            FactoredSpectrum w2 = *try_factor(phi2);
            return gain_rational(w1, w2);
        } catch (const BoundaryRootError&) {
            GainResult inf;
            inf.path_used = MetricPath::Rational;
            inf.value = kInf;
            return inf;
        } catch (const Error&) {
        }
    }
    return gain_grid(sample_spectrum(phi1, grid), sample_spectrum(phi2, grid));
}

DistanceResult thompson_distance(const SpectrumInput& phi1, const SpectrumInput& phi2,
                                 MetricPath path, const FrequencyGrid& grid) {
    return from_gains(gain_pair(phi1, phi2, path, grid), /*hilbert=*/false);
}

DistanceResult hilbert_distance(const SpectrumInput& phi1, const SpectrumInput& phi2,
                                MetricPath path, const FrequencyGrid& grid) {
    return from_gains(gain_pair(phi1, phi2, path, grid), /*hilbert=*/true);
}

DistanceResult thompson_distance_sampled(const SampledSpectrum& phi1,
                                         const SampledSpectrum& phi2) {
    if (phi1.grid.n != phi2.grid.n) throw InvalidInputError("distance: grid mismatch");
    GainPair g{gain_grid(phi1, phi2), gain_grid(phi2, phi1), MetricPath::Grid};
    return from_gains(g, /*hilbert=*/false);
}

DistanceResult hilbert_distance_sampled(const SampledSpectrum& phi1,
                                        const SampledSpectrum& phi2) {
    if (phi1.grid.n != phi2.grid.n) throw InvalidInputError("distance: grid mismatch");
    GainPair g{gain_grid(phi1, phi2), gain_grid(phi2, phi1), MetricPath::Grid};
    return from_gains(g, /*hilbert=*/true);
}

double riemannian_distance(const SpectrumInput& phi1, const SpectrumInput& phi2,
                           const FrequencyGrid& grid) {
    SampledSpectrum s1 = sample_spectrum(phi1, grid);
    SampledSpectrum s2 = sample_spectrum(phi2, grid);
    if (s1.dim() != s2.dim()) throw InvalidInputError("riemannian_distance: dimension mismatch");
    double acc = 0.0;
    for (int k = 0; k < grid.n; ++k) {
        const CMat& a = s1.values[static_cast<std::size_t>(k)];
        const CMat& b = s2.values[static_cast<std::size_t>(k)];
        if (s1.dim() == 1) {
            double ratio = b(0, 0).real() / a(0, 0).real();
            if (!(ratio > 0.0)) throw InvalidInputError("riemannian_distance: spectrum not PD");
            double l = std::log(ratio);
            acc += l * l;
        } else {
            Eigen::GeneralizedSelfAdjointEigenSolver<CMat> ges(b, a, Eigen::EigenvaluesOnly);
            for (int i = 0; i < s1.dim(); ++i) {
                double ev = ges.eigenvalues()(i);
                if (!(ev > 0.0)) throw InvalidInputError("riemannian_distance: spectrum not PD");
                double l = std::log(ev);
                acc += l * l;
            }
        }
    }
    return std::sqrt(acc / grid.n);
}

double frobenius_divergence(const SpectrumInput& phi1, const SpectrumInput& phi2,
                            const FrequencyGrid& grid) {
    int n = spectrum_dim(phi1);
    bool sampled = std::holds_alternative<SampledSpectrum>(phi1) ||
                   std::holds_alternative<SampledSpectrum>(phi2);
    if (!sampled) {
        try {
            FactoredSpectrum w1 = *try_factor(phi1);
            FactoredSpectrum w2 = *try_factor(phi2);
            std::optional<StateSpace> r12 = factor_ratio(w1, w2);
            std::optional<StateSpace> r21 = factor_ratio(w2, w1);
            if (r12 && r21 && is_stable(*r12) && is_stable(*r21)) {
                return h2_norm_sq(*r12) + h2_norm_sq(*r21) - 2.0 * n;
            }
        } catch (const Error&) {
        }
    }
    SampledSpectrum s1 = sample_spectrum(phi1, grid);
    SampledSpectrum s2 = sample_spectrum(phi2, grid);
    double acc = 0.0;
    for (int k = 0; k < grid.n; ++k) {
        const CMat& a = s1.values[static_cast<std::size_t>(k)];
        const CMat& b = s2.values[static_cast<std::size_t>(k)];
        acc += (b.partialPivLu().solve(a).trace() + a.partialPivLu().solve(b).trace()).real();
    }
    return acc / grid.n - 2.0 * n;
}

double finsler_norm_thompson(const SampledSpectrum& v, const SampledSpectrum& x) {
    if (v.grid.n != x.grid.n || v.dim() != x.dim()) {
        throw InvalidInputError("finsler_norm_thompson: grid or dimension mismatch");
    }
    double worst = 0.0;
    for (int k = 0; k < x.grid.n; ++k) {
        const CMat& vk = v.values[static_cast<std::size_t>(k)];
        const CMat& xk = x.values[static_cast<std::size_t>(k)];
        if (x.dim() == 1) {
            double base = xk(0, 0).real();
            if (!(base > 0.0)) throw InvalidInputError("finsler_norm_thompson: base point not PD");
            worst = std::max(worst, std::abs(vk(0, 0).real()) / base);
        } else {
            Eigen::GeneralizedSelfAdjointEigenSolver<CMat> ges(vk, xk, Eigen::EigenvaluesOnly);
            worst = std::max(worst, ges.eigenvalues().cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double hilbert_seminorm(const SampledSpectrum& v, const SampledSpectrum& x) {
    if (v.grid.n != x.grid.n || v.dim() != x.dim()) {
        throw InvalidInputError("hilbert_seminorm: grid or dimension mismatch");
    }
    double sup = -kInf, inf = kInf;
    for (int k = 0; k < x.grid.n; ++k) {
        const CMat& vk = v.values[static_cast<std::size_t>(k)];
        const CMat& xk = x.values[static_cast<std::size_t>(k)];
        if (x.dim() == 1) {
            double base = xk(0, 0).real();
            if (!(base > 0.0)) throw InvalidInputError("hilbert_seminorm: base point not PD");
            double r = vk(0, 0).real() / base;
            sup = std::max(sup, r);
            inf = std::min(inf, r);
        } else {
            Eigen::GeneralizedSelfAdjointEigenSolver<CMat> ges(vk, xk, Eigen::EigenvaluesOnly);
            sup = std::max(sup, ges.eigenvalues().maxCoeff());
            inf = std::min(inf, ges.eigenvalues().minCoeff());
        }
    }
    return sup - inf;
}

double curve_length(const std::vector<SampledSpectrum>& path, const std::vector<double>& params,
                    TangentNorm norm) {
    if (path.size() != params.size() || path.size() < 3) {
        throw InvalidInputError("curve_length: need K >= 2 segments with matching parameters");
    }
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        double dt = params[i + 1] - params[i];
        if (!(dt > 0.0)) throw InvalidInputError("curve_length: parameters must increase");
        SampledSpectrum diff = path[i];
        for (std::size_t k = 0; k < diff.values.size(); ++k) {
            diff.values[k] = (path[i + 1].values[k] - path[i].values[k]) / dt;
        }
        double speed = norm == TangentNorm::Thompson ? finsler_norm_thompson(diff, path[i])
                                                     : hilbert_seminorm(diff, path[i]);
        len += speed * dt;
    }
    return len;
}

}  // namespace conal
