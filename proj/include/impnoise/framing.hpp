#pragma once

#include <cstddef>
#include <vector>

#include "impnoise/signal.hpp"

namespace impnoise {

enum class Window { hann, rectangular };

/// Block geometry for analysis/synthesis. The Hann window is applied at
/// synthesis only; analysis blocks are rectangular.
struct FrameConfig {
    std::size_t block_len = 512;
    std::size_t hop = 256; // must be block_len/2 for the COLA identity
    Window window = Window::hann;

    bool valid() const;
    void validate() const; // throws "invalid frame config"
};

/// Periodic Hann window of the given length: w[n] = 0.5*(1 - cos(2*pi*n/len)).
/// At 50% overlap, w[n] + w[n + len/2] = 1 exactly up to rounding.
std::vector<double> hann_window(std::size_t len);

/// Splits a signal into overlapping blocks of block_len samples starting at
/// multiples of hop. The final block is zero-padded on the right so that
/// every input sample is covered by at least one block.
std::vector<std::vector<double>> segment(const Signal& signal, const FrameConfig& cfg);

/// Windowed overlap-add reconstruction. Each block is multiplied by the
/// synthesis window and summed at offset i*hop; the result is truncated to
/// original_len. For unmodified blocks the interior (outside the first and
/// last hop samples) reproduces the input exactly up to rounding.
Signal overlap_add(const std::vector<std::vector<double>>& blocks,
                   const FrameConfig& cfg,
                   std::size_t original_len,
                   double sample_rate = 16000.0);

} // namespace impnoise
