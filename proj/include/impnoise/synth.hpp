#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "impnoise/signal.hpp"

namespace impnoise {

/// Synthetic stand-ins for the three signal classes whose wavelet decay the
/// analysis compares: a harmonic vowel, a high-frequency noise consonant and
/// a short click.
enum class SurrogateKind { vowel, consonant, impulse };

struct ImpulseTrainParams {
    double duration_s = 1.0;
    double rate_hz = 10.0;       // mean impulses per second (Poisson arrivals)
    double amp_lo = 0.5;
    double amp_hi = 1.0;
    double width_lo_ms = 1.0;
    double width_hi_ms = 2.0;
    std::uint64_t seed = 0;
    double sample_rate = 16000.0;
};

/// A single broadband click: raised-cosine envelope over a white-noise
/// carrier high-passed at 3 kHz, normalized to the given peak amplitude.
std::vector<double> synth_click(std::size_t width_samples, double amp,
                                std::uint64_t seed, double sample_rate = 16000.0);

/// Seeded Poisson train of such clicks. Returns the signal and the
/// ground-truth impulse centers (sample indices) for evaluation.
std::pair<Signal, std::vector<std::size_t>>
synth_impulse_train(const ImpulseTrainParams& params);

/// vowel: 300 Hz harmonic train band-limited below 4 kHz, random phases.
/// consonant: white noise high-passed at 5 kHz.
/// impulse: a single 1 ms raised-cosine click at a seeded position.
Signal synth_surrogate(SurrogateKind kind, double duration_s,
                       std::uint64_t seed, double sample_rate = 16000.0);

/// clean + g*noise with g chosen so the clean-to-scaled-noise power ratio
/// over the full clip equals snr_db. Noise longer than clean is truncated.
Signal mix(const Signal& clean, const Signal& noise, double snr_db);

/// Windowed-sinc FIR high-pass, zero-phase alignment (delay compensated).
std::vector<double> highpass_fir(const std::vector<double>& x,
                                 double cutoff_hz, double sample_rate,
                                 int taps = 201);

} // namespace impnoise
