#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "impnoise/metrics.hpp"
#include "impnoise/rng.hpp"

using namespace impnoise;

namespace {

Signal tone(std::size_t len, double freq, double amp = 0.5) {
    Signal s{std::vector<double>(len), 16000.0};
    for (std::size_t i = 0; i < len; ++i)
        s.samples[i] = amp * std::sin(2.0 * M_PI * freq * i / 16000.0);
    return s;
}

// Independent single-pass reference for the metrics record.
QualityReport reference_metrics(const Signal& clean, const Signal& processed,
                                const std::vector<std::size_t>& centers) {
    const std::size_t frame = 512; // 32 ms at 16 kHz
    double peak = 0.0;
    for (double s : clean.samples) peak = std::max(peak, std::fabs(s));

    std::set<std::size_t> impulse_frames;
    for (std::size_t c : centers) {
        const std::size_t f = c / frame;
        if (f > 0) impulse_frames.insert(f - 1);
        impulse_frames.insert(f);
        impulse_frames.insert(f + 1);
    }

    QualityReport r;
    double snr_sum = 0.0, dist_sum = 0.0, worst = -1e30;
    for (std::size_t f = 0; f * frame + frame <= clean.size(); ++f) {
        double ec = 0.0, ee = 0.0;
        for (std::size_t i = 0; i < frame; ++i) {
            const double c = clean.samples[f * frame + i];
            const double e = c - processed.samples[f * frame + i];
            ec += c * c;
            ee += e * e;
        }
        if (10.0 * std::log10(ec / (peak * peak * frame) + 1e-300) < -60.0)
            continue;
        const double snr =
            ee <= 0.0 ? 35.0
                      : std::clamp(10.0 * std::log10(ec / ee), -10.0, 35.0);
        snr_sum += snr;
        ++r.active_frames;
        worst = std::max(worst, 10.0 * std::log10(ee / ec + 1e-300));
        if (!impulse_frames.count(f)) {
            dist_sum += snr;
            ++r.impulse_free_frames;
        }
    }
    r.seg_snr_db = snr_sum / r.active_frames;
    r.peak_residual_db = worst;
    r.active_distortion_db =
        r.impulse_free_frames ? dist_sum / r.impulse_free_frames : 35.0;
    return r;
}

} // namespace

TEST_CASE("identical signals hit the clamp ceiling") {
    const Signal s = tone(16000, 440.0);
    const QualityReport r = metrics(s, s);
    CHECK(r.seg_snr_db == 35.0);
    CHECK(r.active_distortion_db == 35.0);
}

TEST_CASE("a known per-frame error power gives the textbook SNR") {
    const std::size_t frame = 512;
    Signal clean{std::vector<double>(frame * 4), 16000.0};
    Signal processed = clean;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        clean.samples[i] = (i % 2 == 0) ? 0.5 : -0.5; // constant power 0.25
        processed.samples[i] =
            clean.samples[i] +
            ((i % 2 == 0) ? 1.0 : -1.0) * std::sqrt(0.25e-3); // power ratio 1e-3
    }
    const QualityReport r = metrics(clean, processed);
    CHECK(r.seg_snr_db == doctest::Approx(30.0).epsilon(1e-9));
}

TEST_CASE("metrics equals an independent reference on random pairs") {
    Rng rng(64);
    for (int trial = 0; trial < 10; ++trial) {
        Signal clean{std::vector<double>(512 * 20), 16000.0};
        Signal processed = clean;
        for (std::size_t i = 0; i < clean.size(); ++i) {
            clean.samples[i] = rng.gaussian() * 0.2;
            processed.samples[i] = clean.samples[i] + rng.gaussian() * 0.01;
        }
        const std::vector<std::size_t> centers{1000, 5000, 9000};
        const QualityReport a = metrics(clean, processed, 32.0, -60.0, centers);
        const QualityReport b = reference_metrics(clean, processed, centers);
        CHECK(a.active_frames == b.active_frames);
        CHECK(a.impulse_free_frames == b.impulse_free_frames);
        CHECK(std::fabs(a.seg_snr_db - b.seg_snr_db) < 1e-9);
        CHECK(std::fabs(a.peak_residual_db - b.peak_residual_db) < 1e-9);
        CHECK(std::fabs(a.active_distortion_db - b.active_distortion_db) < 1e-9);
    }
}

TEST_CASE("silent frames are excluded from the average") {
    // 4 frames: loud, silent, loud, silent
    Signal clean{std::vector<double>(512 * 4, 0.0), 16000.0};
    for (std::size_t i = 0; i < 512; ++i) {
        clean.samples[i] = 0.5;
        clean.samples[2 * 512 + i] = 0.5;
    }
    const QualityReport r = metrics(clean, clean);
    CHECK(r.active_frames == 2);
}

TEST_CASE("metrics input validation") {
    const Signal s = tone(2048, 300.0);
    Signal shorter = s;
    shorter.samples.pop_back();
    CHECK_THROWS_WITH((void)metrics(s, shorter), "length mismatch");

    const Signal silent{std::vector<double>(2048, 0.0), 16000.0};
    CHECK_THROWS((void)metrics(silent, silent));
}

TEST_CASE("residual_reduction_db measures the before/after ratio") {
    const std::size_t n = 512 * 4;
    Signal clean{std::vector<double>(n, 0.0), 16000.0};
    for (std::size_t i = 0; i < n; ++i)
        clean.samples[i] = 0.3 * std::sin(2.0 * M_PI * 300.0 * i / 16000.0);
    Signal noisy = clean, processed = clean;
    noisy.samples[700] += 1.0;      // click in frame 1
    processed.samples[700] += 0.1;  // residual 20 dB down
    const double red = residual_reduction_db(clean, noisy, processed, {700});
    CHECK(red == doctest::Approx(20.0).epsilon(1e-9));

    CHECK_THROWS((void)residual_reduction_db(clean, noisy, processed, {}));
}
