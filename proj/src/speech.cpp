#include "conal/speech.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace conal {

std::vector<double> preemphasis(const std::vector<double>& x, double mu) {
    std::vector<double> y(x.size());
    double prev = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        y[t] = x[t] - mu * prev;
        prev = x[t];
    }
    return y;
}

std::vector<double> deemphasis(const std::vector<double>& y, double mu) {
    std::vector<double> x(y.size());
    double prev = 0.0;
    for (std::size_t t = 0; t < y.size(); ++t) {
        x[t] = y[t] + mu * prev;
        prev = x[t];
    }
    return x;
}

int frame_length(const MorphConfig& config, double sample_rate) {
    return static_cast<int>(std::lround(config.frame_ms * sample_rate / 1000.0));
}

int hop_length(const MorphConfig& config, double sample_rate) {
    return static_cast<int>(std::lround(config.hop_ms * sample_rate / 1000.0));
}

std::vector<std::vector<double>> frame_and_window(const std::vector<double>& x,
                                                  const MorphConfig& config, double sample_rate,
                                                  std::vector<std::vector<double>>* raw) {
    const int L = frame_length(config, sample_rate);
    const int hop = hop_length(config, sample_rate);
    if (L < 2 || hop < 1 || hop > L) throw InvalidInputError("frame_and_window: bad frame/hop");
    if (static_cast<int>(x.size()) < L) {
        throw InvalidInputError("frame_and_window: signal shorter than one frame");
    }
    std::vector<double> window(static_cast<std::size_t>(L));
    for (int t = 0; t < L; ++t) {
        window[t] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * t / (L - 1));
    }
    const int n_frames = (static_cast<int>(x.size()) - L) / hop + 1;
    std::vector<std::vector<double>> frames;
    frames.reserve(static_cast<std::size_t>(n_frames));
    if (raw) raw->clear();
    for (int i = 0; i < n_frames; ++i) {
        std::vector<double> f(x.begin() + static_cast<std::ptrdiff_t>(i) * hop,
                              x.begin() + static_cast<std::ptrdiff_t>(i) * hop + L);
        if (raw) raw->push_back(f);
        for (int t = 0; t < L; ++t) f[t] *= window[t];
        frames.push_back(std::move(f));
    }
    return frames;
}

std::vector<double> autocorrelation(const std::vector<double>& frame, int p) {
    if (p < 0 || p >= static_cast<int>(frame.size())) {
        throw InvalidInputError("autocorrelation: order must be below the frame length");
    }
    std::vector<double> r(static_cast<std::size_t>(p) + 1, 0.0);
    for (int k = 0; k <= p; ++k) {
        double acc = 0.0;
        for (std::size_t t = 0; t + k < frame.size(); ++t) acc += frame[t] * frame[t + k];
        r[k] = acc;
    }
    return r;
}

ArModel levinson_durbin(const std::vector<double>& r) {
    if (r.empty() || !(r[0] > 0.0)) {
        throw InvalidInputError("levinson_durbin: r0 must be positive");
    }
    const int p = static_cast<int>(r.size()) - 1;
    std::vector<double> a(static_cast<std::size_t>(p) + 1, 0.0);
    a[0] = 1.0;
    double err = r[0];
    for (int m = 1; m <= p; ++m) {
        double acc = r[m];
        for (int i = 1; i < m; ++i) acc += a[i] * r[m - i];
        double k = -acc / err;
        if (!(std::abs(k) < 1.0)) {
            throw InvalidInputError("levinson_durbin: non-positive-definite autocorrelation");
        }
        for (int i = 1; i <= m - i; ++i) {
            double ai = a[i] + k * a[m - i];
            double aj = a[m - i] + k * a[i];
            a[i] = ai;
            a[m - i] = aj;
        }
        a[m] = k;
        err *= 1.0 - k * k;
    }
    ArModel model;
    model.a = std::move(a);
    model.gain = std::sqrt(err);
    return model;
}

ScalarRationalSpectrum ar_spectrum(const ArModel& model) {
    ScalarRationalSpectrum phi;
    phi.num = LaurentPolynomial::constant(model.gain * model.gain);
    phi.den = laurent_from_autocorrelation(Polynomial(model.a));
    return phi;
}

Pitch estimate_pitch(const std::vector<double>& frame, const ArModel& model, double sample_rate) {
    const int p = model.order();
    std::vector<double> residual(frame.size(), 0.0);
    for (std::size_t t = 0; t < frame.size(); ++t) {
        double acc = 0.0;
        for (int k = 0; k <= p && k <= static_cast<int>(t); ++k) {
            acc += model.a[k] * frame[t - k];
        }
        residual[t] = acc;
    }
    int lo = static_cast<int>(std::lround(sample_rate / 400.0));
    int hi = static_cast<int>(std::lround(sample_rate / 50.0));
    hi = std::min(hi, static_cast<int>(frame.size()) - 1);
    Pitch out;
    if (lo < 1 || hi < lo) return out;
    std::vector<double> r = autocorrelation(residual, hi);
    if (!(r[0] > 0.0)) return out;
    int best = lo;
    for (int k = lo + 1; k <= hi; ++k) {
        if (r[k] > r[best]) best = k;
    }
    if (r[best] / r[0] < 0.3) return out;
    out.voiced = true;
    out.hz = sample_rate / best;
    return out;
}

double interpolate_pitch(double pa, double pb, double tau, PitchMode mode) {
    if (!(pa > 0.0 && pb > 0.0)) throw InvalidInputError("interpolate_pitch: pitches must be > 0");
    if (mode == PitchMode::Linear) return (1.0 - tau) * pa + tau * pb;
    return std::pow(pa, 1.0 - tau) * std::pow(pb, tau);
}

FactoredSpectrum morph_frame(const ArModel& model_a, const ArModel& model_b, double tau,
                             const FrequencyGrid& grid) {
    GeodesicSpec spec =
        make_geodesic_spec(ar_spectrum(model_a), ar_spectrum(model_b), MetricPath::Rational, grid);
    GeodesicPoint point = finsler_geodesic(spec, tau, grid);
    if (!point.factor) throw ConvergenceError("morph_frame: geodesic point not factorizable");
    return *point.factor;
}

namespace {

/// One-frame IIR filtering of w(z) = num(z)/den(z) written in powers of
/// z^{-1}; x/y histories persist across calls.
struct FrameFilter {
    std::vector<double> b, a;  // z^{-1} coefficients, a[0] != 0
    std::vector<double> xh, yh;

    void set_factor(const ScalarFactor& w) {
        int d = w.den.degree();
        b.assign(static_cast<std::size_t>(d) + 1, 0.0);
        a.assign(static_cast<std::size_t>(d) + 1, 0.0);
        for (int k = 0; k <= d; ++k) {
            if (d - k <= w.num.degree()) b[k] = w.num.c[static_cast<std::size_t>(d - k)];
            a[k] = w.den.c[static_cast<std::size_t>(d - k)];
        }
        std::size_t hist = static_cast<std::size_t>(d);
        if (xh.size() < hist) xh.resize(hist, 0.0);
        if (yh.size() < hist) yh.resize(hist, 0.0);
    }

    double step(double x) {
        double acc = b[0] * x;
        for (std::size_t k = 1; k < b.size(); ++k) {
            acc += b[k] * xh[k - 1] - a[k] * yh[k - 1];
        }
        double y = acc / a[0];
        if (!xh.empty()) {
            std::rotate(xh.rbegin(), xh.rbegin() + 1, xh.rend());
            std::rotate(yh.rbegin(), yh.rbegin() + 1, yh.rend());
            xh[0] = x;
            yh[0] = y;
        }
        return y;
    }
};

}  // namespace

AudioSignal synthesize(const std::vector<ScalarFactor>& factors, const std::vector<Pitch>& pitches,
                       const MorphConfig& config, double sample_rate, bool normalize) {
    if (factors.size() != pitches.size()) {
        throw InvalidInputError("synthesize: one factor and one pitch per frame");
    }
    const int hop = hop_length(config, sample_rate);
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    FrameFilter filter;
    AudioSignal out;
    out.sample_rate = sample_rate;
    out.samples.reserve(factors.size() * static_cast<std::size_t>(hop));
    int to_next_pulse = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        filter.set_factor(factors[i]);
        const Pitch& p = pitches[i];
        int period = p.voiced ? static_cast<int>(std::lround(sample_rate / p.hz)) : 0;
        for (int t = 0; t < hop; ++t) {
            double e;
            if (p.voiced) {
                e = 0.0;
                if (to_next_pulse <= 0) {
                    e = 1.0;
                    to_next_pulse = period;
                }
                --to_next_pulse;
            } else {
                e = noise(rng);
            }
            out.samples.push_back(filter.step(e));
        }
    }
    if (normalize && !out.samples.empty()) {
        double ms = 0.0;
        for (double s : out.samples) ms += s * s;
        double rms = std::sqrt(ms / static_cast<double>(out.samples.size()));
        if (rms > 0.0) {
            double g = 0.1 / rms;
            for (double& s : out.samples) s *= g;
        }
    }
    return out;
}

MorphResult morph(const AudioSignal& a, const AudioSignal& b, const MorphConfig& config) {
    if (a.sample_rate != b.sample_rate) throw InvalidInputError("morph: sample-rate mismatch");
    const double fs = a.sample_rate;
    std::vector<std::vector<double>> raw_a, raw_b;
    auto frames_a = frame_and_window(preemphasis(a.samples, config.preemphasis), config, fs, &raw_a);
    auto frames_b = frame_and_window(preemphasis(b.samples, config.preemphasis), config, fs, &raw_b);
    const std::size_t n = std::min(frames_a.size(), frames_b.size());

    MorphResult result;
    ArModel prev_a, prev_b;  // fallback for degenerate (e.g. silent) frames
    prev_a.gain = prev_b.gain = 1e-4;
    for (std::size_t i = 0; i < n; ++i) {
        try {
            prev_a = levinson_durbin(autocorrelation(frames_a[i], config.order));
        } catch (const InvalidInputError&) {
        }
        try {
            prev_b = levinson_durbin(autocorrelation(frames_b[i], config.order));
        } catch (const InvalidInputError&) {
        }
        result.models_a.push_back(prev_a);
        result.models_b.push_back(prev_b);
        result.pitches_a.push_back(estimate_pitch(raw_a[i], prev_a, fs));
        result.pitches_b.push_back(estimate_pitch(raw_b[i], prev_b, fs));

        Pitch p;
        if (result.pitches_a[i].voiced && result.pitches_b[i].voiced) {
            p.voiced = true;
            p.hz = interpolate_pitch(result.pitches_a[i].hz, result.pitches_b[i].hz, config.tau,
                                     config.pitch_mode);
        }
        result.pitches.push_back(p);
        result.factors.push_back(
            morph_frame(prev_a, prev_b, config.tau, config.grid).scalar());
    }
    AudioSignal synth = synthesize(result.factors, result.pitches, config, fs);
    result.audio.sample_rate = fs;
    result.audio.samples = deemphasis(synth.samples, config.preemphasis);
    return result;
}

}  // namespace conal
