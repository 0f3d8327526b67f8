#pragma once

#include <string>

#include "impnoise/signal.hpp"

namespace impnoise {

enum class WavFormat { pcm16, float32 };

/// Mono RIFF/WAVE container contents.
struct WavFile {
    WavFormat format = WavFormat::float32;
    Signal signal;
};

/// Reads a mono PCM-16 or IEEE-float-32 WAV file, converting samples to
/// 64-bit floats (pcm16 decodes via division by 32768).
WavFile read_wav(const std::string& path);

/// Writes the canonical 44-byte-header layout. The pcm16 path clamps to
/// [-1, 1 - 1/32768] and rounds to nearest; float32 is lossless up to 32-bit
/// precision.
void write_wav(const std::string& path, const WavFile& wav);

} // namespace impnoise
