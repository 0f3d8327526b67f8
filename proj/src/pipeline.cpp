#include "impnoise/pipeline.hpp"

#include <utility>

#include "impnoise/rng.hpp"
#include "impnoise/synth.hpp"

namespace impnoise {

Signal denoise_signal(const Signal& input,
                      const FrameConfig& frame_cfg,
                      const WaveletSpec& spec,
                      int levels,
                      const DenoiseConfig& cfg,
                      const ImpulseProfile& profile) {
    cfg.validate();
    std::vector<std::vector<double>> blocks = segment(input, frame_cfg);
    for (std::vector<double>& block : blocks) {
        WaveletDecomposition decomp = forward_dwt(block, spec, levels);
        block = inverse_dwt(denoise_block(decomp, cfg, profile), spec);
    }
    return overlap_add(blocks, frame_cfg, input.size(), input.sample_rate);
}

ImpulseProfile builtin_click_profile(const WaveletSpec& spec,
                                     const FrameConfig& cfg,
                                     int levels) {
    constexpr std::uint64_t kSeed = 42;
    constexpr int kSegments = 50;

    Rng rng(kSeed);
    std::vector<std::pair<Signal, std::size_t>> segments;
    segments.reserve(kSegments);
    for (int i = 0; i < kSegments; ++i) {
        const std::size_t center =
            100 + rng.integer(cfg.block_len - 212); // keep inside the interior
        const std::size_t width = 16 + rng.integer(17); // 1-2 ms at 16 kHz
        const double amp = rng.uniform(0.2, 1.0);
        const std::vector<double> burst =
            synth_click(width, amp, rng.integer(1u << 31));
        Signal seg{std::vector<double>(cfg.block_len, 0.0), 16000.0};
        for (std::size_t j = 0; j < width; ++j)
            seg.samples[center - width / 2 + j] = burst[j];
        segments.emplace_back(std::move(seg), center);
    }
    return learn_impulse_profile(segments, spec, cfg, 16, levels);
}

} // namespace impnoise
