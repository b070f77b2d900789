#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conal/geodesics.hpp"

namespace conal {

struct AudioSignal {
    std::vector<double> samples;
    double sample_rate = 16000.0;
};

/// Monic all-pole predictor a(z) = 1 + a_1 z^{-1} + ... + a_p z^{-p} with
/// innovation gain sigma, the output of Levinson-Durbin.
struct ArModel {
    std::vector<double> a = {1.0};
    double gain = 1.0;

    int order() const { return static_cast<int>(a.size()) - 1; }
};

enum class PitchMode { Linear, Geometric };

struct MorphConfig {
    double frame_ms = 25.0;
    double hop_ms = 10.0;
    int order = 14;
    double preemphasis = 0.97;
    double tau = 0.5;
    PitchMode pitch_mode = PitchMode::Linear;
    FrequencyGrid grid;
    std::uint64_t seed = 0;
};

struct Pitch {
    bool voiced = false;
    double hz = 0.0;
};

std::vector<double> preemphasis(const std::vector<double>& x, double mu);
std::vector<double> deemphasis(const std::vector<double>& y, double mu);

int frame_length(const MorphConfig& config, double sample_rate);
int hop_length(const MorphConfig& config, double sample_rate);
/// Hamming-windowed frames; `raw` additionally receives the unwindowed
/// frames (for pitch analysis) when non-null.
std::vector<std::vector<double>> frame_and_window(const std::vector<double>& x,
                                                  const MorphConfig& config, double sample_rate,
                                                  std::vector<std::vector<double>>* raw = nullptr);

/// Biased autocorrelation r_k = sum_t frame[t] frame[t+k], k = 0..p.
std::vector<double> autocorrelation(const std::vector<double>& frame, int p);

/// Throws InvalidInputError on non-positive-definite r (|k_i| >= 1); callers
/// in the pipeline substitute the previous frame's model.
ArModel levinson_durbin(const std::vector<double>& r);

/// phi = sigma^2 / |a|^2 in symmetric Laurent form.
ScalarRationalSpectrum ar_spectrum(const ArModel& model);

/// Residual-autocorrelation pitch; lag range [fs/400, fs/50], voiced when
/// the normalized peak reaches 0.3.
Pitch estimate_pitch(const std::vector<double>& frame, const ArModel& model, double sample_rate);

double interpolate_pitch(double pa, double pb, double tau, PitchMode mode);

/// Finsler geodesic between the two AR spectra at tau, re-factorized to
/// minimum-phase b(z)/(a_A(z) a_B(z)) form.
FactoredSpectrum morph_frame(const ArModel& model_a, const ArModel& model_b, double tau,
                             const FrequencyGrid& grid = {});

/// Pulse-train / white-noise excitation through the per-frame factors with
/// filter-state and pulse-phase continuity; hop-length output per frame.
/// Output is RMS-normalized to 0.1 unless normalize is false.
AudioSignal synthesize(const std::vector<ScalarFactor>& factors, const std::vector<Pitch>& pitches,
                       const MorphConfig& config, double sample_rate, bool normalize = true);

struct MorphResult {
    AudioSignal audio;
    std::vector<ScalarFactor> factors;
    std::vector<ArModel> models_a, models_b;
    std::vector<Pitch> pitches_a, pitches_b, pitches;
};

MorphResult morph(const AudioSignal& a, const AudioSignal& b, const MorphConfig& config);

}  // namespace conal
