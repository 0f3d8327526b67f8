#include "impnoise/framing.hpp"

#include <cmath>
#include <stdexcept>

namespace impnoise {

bool FrameConfig::valid() const {
    if (block_len == 0 || (block_len & (block_len - 1)) != 0) return false;
    if (hop != block_len / 2) return false;
    return true;
}

void FrameConfig::validate() const {
    if (!valid()) throw std::invalid_argument("invalid frame config");
}

std::vector<double> hann_window(std::size_t len) {
    std::vector<double> w(len);
    for (std::size_t n = 0; n < len; ++n)
        w[n] = 0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(n) /
                                     static_cast<double>(len)));
    return w;
}

std::vector<std::vector<double>> segment(const Signal& signal, const FrameConfig& cfg) {
    cfg.validate();
    if (signal.empty()) throw std::invalid_argument("empty input");

    const std::size_t len = signal.size();
    const std::size_t B = cfg.block_len;
    const std::size_t H = cfg.hop;
    const std::size_t count =
        len <= B ? 1 : (len - B + H - 1) / H + 1;

    std::vector<std::vector<double>> blocks(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double>& blk = blocks[i];
        blk.assign(B, 0.0);
        const std::size_t start = i * H;
        const std::size_t n = std::min(B, len > start ? len - start : 0);
        for (std::size_t j = 0; j < n; ++j)
            blk[j] = signal.samples[start + j];
    }
    return blocks;
}

Signal overlap_add(const std::vector<std::vector<double>>& blocks,
                   const FrameConfig& cfg,
                   std::size_t original_len,
                   double sample_rate) {
    cfg.validate();
    const std::size_t B = cfg.block_len;
    const std::size_t H = cfg.hop;
    for (const auto& blk : blocks)
        if (blk.size() != B)
            throw std::invalid_argument("block length mismatch");

    std::vector<double> w;
    if (cfg.window == Window::hann)
        w = hann_window(B);
    else
        w.assign(B, 1.0);

    std::vector<double> acc(blocks.size() * H + B, 0.0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::size_t off = i * H;
        for (std::size_t n = 0; n < B; ++n)
            acc[off + n] += w[n] * blocks[i][n];
    }
    acc.resize(original_len, 0.0);
    return Signal{std::move(acc), sample_rate};
}

} // namespace impnoise
