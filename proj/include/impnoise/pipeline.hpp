#pragma once

#include "impnoise/framing.hpp"
#include "impnoise/regularity.hpp"
#include "impnoise/signal.hpp"
#include "impnoise/suppression.hpp"
#include "impnoise/wavelet.hpp"

namespace impnoise {

/// End-to-end chain: segment, forward DWT, per-block suppression, inverse
/// DWT, windowed overlap-add. Output has the input's length and rate.
Signal denoise_signal(const Signal& input,
                      const FrameConfig& frame_cfg,
                      const WaveletSpec& spec,
                      int levels,
                      const DenoiseConfig& cfg,
                      const ImpulseProfile& profile);

/// Profile learned from 50 seeded synthetic clicks; stands in for a profile
/// trained on real recordings when none is supplied.
ImpulseProfile builtin_click_profile(const WaveletSpec& spec,
                                     const FrameConfig& cfg,
                                     int levels = 6);

} // namespace impnoise
