#include "impnoise/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace impnoise {

namespace {

constexpr double kSnrFloorDb = -10.0;
constexpr double kSnrCeilDb = 35.0;

double clamp_snr(double ec, double ee) {
    if (ee <= 0.0) return kSnrCeilDb;
    return std::clamp(10.0 * std::log10(ec / ee), kSnrFloorDb, kSnrCeilDb);
}

} // namespace

QualityReport metrics(const Signal& clean, const Signal& processed,
                      double frame_ms, double silence_floor_db,
                      const std::vector<std::size_t>& impulse_centers) {
    if (clean.size() != processed.size() ||
        clean.sample_rate != processed.sample_rate)
        throw std::invalid_argument("length mismatch");
    const std::size_t frame = static_cast<std::size_t>(
        std::llround(frame_ms * clean.sample_rate / 1000.0));
    if (frame == 0 || clean.size() < frame)
        throw std::invalid_argument("signal shorter than a frame");

    double peak = 0.0;
    for (double s : clean.samples) peak = std::max(peak, std::fabs(s));
    if (peak == 0.0) throw std::invalid_argument("silent clean reference");

    // frames within one frame of an impulse center are not impulse-free
    std::set<std::size_t> impulse_frames;
    for (std::size_t c : impulse_centers) {
        const std::size_t f = c / frame;
        if (f > 0) impulse_frames.insert(f - 1);
        impulse_frames.insert(f);
        impulse_frames.insert(f + 1);
    }

    QualityReport report;
    double snr_sum = 0.0, dist_sum = 0.0;
    double worst_residual = -1e30;
    const std::size_t frames = clean.size() / frame;
    for (std::size_t f = 0; f < frames; ++f) {
        const std::size_t off = f * frame;
        double ec = 0.0, ee = 0.0;
        for (std::size_t i = 0; i < frame; ++i) {
            const double c = clean.samples[off + i];
            const double e = c - processed.samples[off + i];
            ec += c * c;
            ee += e * e;
        }
        const double level_db =
            10.0 * std::log10(ec / (peak * peak * frame) + 1e-300);
        if (level_db < silence_floor_db) continue;

        const double snr = clamp_snr(ec, ee);
        snr_sum += snr;
        ++report.active_frames;
        worst_residual =
            std::max(worst_residual, 10.0 * std::log10(ee / ec + 1e-300));
        if (!impulse_frames.count(f)) {
            dist_sum += snr;
            ++report.impulse_free_frames;
        }
    }
    if (report.active_frames == 0)
        throw std::invalid_argument("no active frames");

    report.seg_snr_db = snr_sum / static_cast<double>(report.active_frames);
    report.peak_residual_db = worst_residual;
    report.active_distortion_db =
        report.impulse_free_frames > 0
            ? dist_sum / static_cast<double>(report.impulse_free_frames)
            : kSnrCeilDb;
    return report;
}

double residual_reduction_db(const Signal& clean, const Signal& noisy,
                             const Signal& processed,
                             const std::vector<std::size_t>& impulse_centers,
                             std::size_t frame_len) {
    if (clean.size() != noisy.size() || clean.size() != processed.size())
        throw std::invalid_argument("length mismatch");
    if (impulse_centers.empty())
        throw std::invalid_argument("no impulse centers");

    std::set<std::size_t> frames;
    for (std::size_t c : impulse_centers) {
        const std::size_t f = c / frame_len;
        if ((f + 1) * frame_len <= clean.size()) frames.insert(f);
    }

    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t f : frames) {
        const std::size_t off = f * frame_len;
        double before = 0.0, after = 0.0;
        for (std::size_t i = 0; i < frame_len; ++i) {
            const double b = noisy.samples[off + i] - clean.samples[off + i];
            const double a = processed.samples[off + i] - clean.samples[off + i];
            before += b * b;
            after += a * a;
        }
        if (before <= 0.0) continue;
        sum += 10.0 * std::log10(before / (after + 1e-300));
        ++count;
    }
    if (count == 0) throw std::invalid_argument("no measurable click frames");
    return sum / static_cast<double>(count);
}

} // namespace impnoise
