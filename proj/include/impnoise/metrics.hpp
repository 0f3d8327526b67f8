#pragma once

#include <cstddef>
#include <vector>

#include "impnoise/signal.hpp"

namespace impnoise {

struct QualityReport {
    double seg_snr_db = 0.0;           // mean clamped per-frame SNR, active frames
    double peak_residual_db = 0.0;     // worst frame residual-to-clean ratio
    double active_distortion_db = 0.0; // seg-SNR over impulse-free frames only
    std::size_t active_frames = 0;
    std::size_t impulse_free_frames = 0;
};

/// Frame-based objective quality. Non-overlapping frames of frame_ms; frames
/// whose clean energy sits below silence_floor_db relative to the clip peak
/// are excluded; per-frame SNR is clamped to [-10, 35] dB before averaging.
/// Frames within one frame of an impulse center are excluded from
/// active_distortion_db.
QualityReport metrics(const Signal& clean, const Signal& processed,
                      double frame_ms = 32.0,
                      double silence_floor_db = -60.0,
                      const std::vector<std::size_t>& impulse_centers = {});

/// Mean over ground-truth click frames of the per-frame dB reduction in
/// residual energy relative to clean: before = noisy, after = processed.
double residual_reduction_db(const Signal& clean, const Signal& noisy,
                             const Signal& processed,
                             const std::vector<std::size_t>& impulse_centers,
                             std::size_t frame_len = 512);

} // namespace impnoise
