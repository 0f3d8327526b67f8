#include "impnoise/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "impnoise/rng.hpp"

namespace impnoise {

namespace {

// Raised-cosine (Hann-shaped) envelope of the given width, peak 1.
std::vector<double> raised_cosine(std::size_t width) {
    std::vector<double> env(width);
    for (std::size_t i = 0; i < width; ++i)
        env[i] = 0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(i) /
                                       static_cast<double>(width - 1)));
    return env;
}

std::vector<double> click_shape(std::size_t width, double amp, Rng& rng,
                                double sample_rate) {
    if (width < 2) throw std::invalid_argument("click too short");
    std::vector<double> carrier(width);
    for (double& s : carrier) s = rng.gaussian();
    // high-pass the carrier so the click is broadband but fine-scale heavy
    std::vector<double> filtered = highpass_fir(carrier, 3000.0, sample_rate, 63);
    const std::vector<double> env = raised_cosine(width);
    double peak = 0.0;
    for (std::size_t i = 0; i < width; ++i) {
        filtered[i] *= env[i];
        peak = std::max(peak, std::fabs(filtered[i]));
    }
    if (peak == 0.0) peak = 1.0;
    for (double& s : filtered) s *= amp / peak;
    return filtered;
}

} // namespace

std::vector<double> synth_click(std::size_t width_samples, double amp,
                                std::uint64_t seed, double sample_rate) {
    Rng rng(seed);
    return click_shape(width_samples, amp, rng, sample_rate);
}

std::pair<Signal, std::vector<std::size_t>>
synth_impulse_train(const ImpulseTrainParams& p) {
    if (p.duration_s <= 0.0 || p.rate_hz <= 0.0)
        throw std::invalid_argument("non-positive duration or rate");
    if (p.amp_hi < p.amp_lo || p.width_hi_ms < p.width_lo_ms ||
        p.amp_lo <= 0.0 || p.width_lo_ms <= 0.0)
        throw std::invalid_argument("empty range");

    const std::size_t n =
        static_cast<std::size_t>(std::llround(p.duration_s * p.sample_rate));
    Signal out{std::vector<double>(n, 0.0), p.sample_rate};
    std::vector<std::size_t> centers;

    Rng rng(p.seed);
    double t = 0.0;
    while (true) {
        t += rng.exponential(p.rate_hz);
        if (t >= p.duration_s) break;
        const std::size_t width = static_cast<std::size_t>(std::llround(
            rng.uniform(p.width_lo_ms, p.width_hi_ms) * p.sample_rate / 1000.0));
        const double amp = rng.uniform(p.amp_lo, p.amp_hi);
        const std::size_t start =
            static_cast<std::size_t>(std::llround(t * p.sample_rate));
        if (width < 2 || start + width >= n) continue;
        const std::vector<double> burst =
            click_shape(width, amp, rng, p.sample_rate);
        for (std::size_t i = 0; i < width; ++i)
            out.samples[start + i] += burst[i];
        centers.push_back(start + width / 2);
    }
    return {std::move(out), std::move(centers)};
}

Signal synth_surrogate(SurrogateKind kind, double duration_s,
                       std::uint64_t seed, double sample_rate) {
    if (duration_s <= 0.0)
        throw std::invalid_argument("non-positive duration");
    const std::size_t n =
        static_cast<std::size_t>(std::llround(duration_s * sample_rate));
    Signal out{std::vector<double>(n, 0.0), sample_rate};
    Rng rng(seed);

    switch (kind) {
        case SurrogateKind::vowel: {
            const double f0 = 300.0;
            for (int k = 1; k * f0 < 4000.0; ++k) {
                const double amp = 1.0 / k;
                const double phase = rng.uniform(0.0, 2.0 * M_PI);
                const double w = 2.0 * M_PI * k * f0 / sample_rate;
                for (std::size_t i = 0; i < n; ++i)
                    out.samples[i] += amp * std::sin(w * i + phase);
            }
            break;
        }
        case SurrogateKind::consonant: {
            std::vector<double> noise(n);
            for (double& s : noise) s = rng.gaussian();
            out.samples = highpass_fir(noise, 5000.0, sample_rate);
            break;
        }
        case SurrogateKind::impulse: {
            const std::size_t width = static_cast<std::size_t>(
                std::llround(0.001 * sample_rate)); // 1 ms
            const std::size_t lo = width, hi = n > 2 * width ? n - 2 * width : lo + 1;
            const std::size_t center = lo + rng.integer(hi - lo);
            const std::vector<double> env = raised_cosine(width);
            for (std::size_t i = 0; i < width && center - width / 2 + i < n; ++i)
                out.samples[center - width / 2 + i] = env[i];
            break;
        }
    }
    // unit peak
    double peak = 0.0;
    for (double s : out.samples) peak = std::max(peak, std::fabs(s));
    if (peak > 0.0)
        for (double& s : out.samples) s *= 0.5 / peak;
    return out;
}

Signal mix(const Signal& clean, const Signal& noise, double snr_db) {
    if (clean.sample_rate != noise.sample_rate)
        throw std::invalid_argument("sample rate mismatch");
    if (noise.size() < clean.size())
        throw std::invalid_argument("noise shorter than clean");

    double p_clean = 0.0, p_noise = 0.0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        p_clean += clean.samples[i] * clean.samples[i];
        p_noise += noise.samples[i] * noise.samples[i];
    }
    if (p_clean == 0.0 || p_noise == 0.0)
        throw std::invalid_argument("undefined ratio");

    const double gain =
        std::sqrt(p_clean / (p_noise * std::pow(10.0, snr_db / 10.0)));
    Signal out = clean;
    for (std::size_t i = 0; i < clean.size(); ++i)
        out.samples[i] += gain * noise.samples[i];
    return out;
}

std::vector<double> highpass_fir(const std::vector<double>& x,
                                 double cutoff_hz, double sample_rate,
                                 int taps) {
    if (taps < 3 || taps % 2 == 0)
        throw std::invalid_argument("taps must be odd and >= 3");
    const double fc = cutoff_hz / sample_rate;
    std::vector<double> hp(taps);
    const int mid = taps / 2;
    for (int i = 0; i < taps; ++i) {
        const double t = i - mid;
        const double lp =
            t == 0.0 ? 2.0 * fc : std::sin(2.0 * M_PI * fc * t) / (M_PI * t);
        const double w = 0.5 * (1.0 - std::cos(2.0 * M_PI * i / (taps - 1.0)));
        hp[i] = -lp * w;
    }
    hp[mid] += 1.0;

    std::vector<double> y(x.size(), 0.0);
    for (std::size_t n = 0; n < x.size(); ++n) {
        double acc = 0.0;
        for (int i = 0; i < taps; ++i) {
            const long j = static_cast<long>(n) + mid - i;
            if (j >= 0 && j < static_cast<long>(x.size()))
                acc += hp[i] * x[static_cast<std::size_t>(j)];
        }
        y[n] = acc;
    }
    return y;
}

} // namespace impnoise
