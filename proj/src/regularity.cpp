#include "impnoise/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "impnoise/kv.hpp"

namespace impnoise {

void ImpulseProfile::validate() const {
    if (lambda.empty() || lambda.front() != 1.0)
        throw std::invalid_argument("impulse profile not normalized");
    for (double v : lambda)
        if (!(v > 0.0))
            throw std::invalid_argument("non-positive impulse profile entry");
}

DecayProfile decay_profile(const WaveletDecomposition& decomp,
                           std::size_t center, std::size_t radius) {
    if (center >= decomp.block_len)
        throw std::invalid_argument("index out of block");

    const long lo = static_cast<long>(center) - static_cast<long>(radius);
    const long hi = static_cast<long>(center) + static_cast<long>(radius);

    DecayProfile profile;
    profile.magnitude.resize(decomp.levels, 0.0);
    for (int j = 1; j <= decomp.levels; ++j) {
        const std::vector<double>& d = decomp.detail[j - 1];
        const long span = 1L << j; // level-j coefficient k covers [k*2^j, (k+1)*2^j)
        double best = 0.0;
        for (std::size_t k = 0; k < d.size(); ++k) {
            const long start = static_cast<long>(k) * span;
            if (start + span > lo && start <= hi)
                best = std::max(best, std::fabs(d[k]));
        }
        profile.magnitude[j - 1] = best;
    }
    return profile;
}

DecayProfile normalize(DecayProfile profile) {
    if (profile.magnitude.empty() || profile.magnitude.front() == 0.0) {
        profile.degenerate = true;
        return profile;
    }
    const double scale = profile.magnitude.front();
    for (double& m : profile.magnitude) m /= scale;
    profile.magnitude.front() = 1.0;
    profile.normalized = true;
    return profile;
}

double lipschitz_slope(const DecayProfile& profile,
                       int level_lo, int level_hi) {
    const int L = static_cast<int>(profile.magnitude.size());
    if (level_hi == 0) level_hi = L;
    if (level_lo < 1 || level_hi > L || level_lo >= level_hi)
        throw std::invalid_argument("invalid level range");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const int n = level_hi - level_lo + 1;
    for (int j = level_lo; j <= level_hi; ++j) {
        const double m = profile.magnitude[j - 1];
        if (!(m > 0.0)) throw std::invalid_argument("degenerate profile");
        const double y = std::log2(m);
        sx += j;
        sy += y;
        sxx += static_cast<double>(j) * j;
        sxy += j * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ImpulseProfile learn_impulse_profile(
    const std::vector<std::pair<Signal, std::size_t>>& segments,
    const WaveletSpec& spec, const FrameConfig& cfg,
    std::size_t radius, int levels) {
    cfg.validate();
    if (segments.empty())
        throw std::invalid_argument("no training segments");

    ImpulseProfile out;
    out.lambda.assign(levels, 0.0);
    int used = 0;
    for (const auto& [signal, center] : segments) {
        if (signal.size() < cfg.block_len || center >= signal.size())
            throw std::invalid_argument("segment shorter than a block");

        // block positioned so the impulse sits in its interior
        std::size_t start = 0;
        if (center > cfg.block_len / 2)
            start = center - cfg.block_len / 2;
        start = std::min(start, signal.size() - cfg.block_len);

        std::span<const double> block(signal.samples.data() + start, cfg.block_len);
        WaveletDecomposition decomp = forward_dwt(block, spec, levels);
        DecayProfile profile =
            normalize(decay_profile(decomp, center - start, radius));
        if (profile.degenerate) continue;
        for (int j = 0; j < levels; ++j)
            out.lambda[j] += profile.magnitude[j];
        ++used;
    }
    if (used == 0)
        throw std::runtime_error("no usable impulses");
    for (double& v : out.lambda) v /= used;
    out.lambda.front() = 1.0;
    out.segment_count = used;
    return out;
}

void save_profile(std::ostream& out, const ImpulseProfile& profile) {
    kv::Records recs;
    recs.emplace_back("wavelet", "daubechies6");
    recs.emplace_back("levels", std::to_string(profile.lambda.size()));
    recs.emplace_back("segment_count", std::to_string(profile.segment_count));
    for (std::size_t j = 0; j < profile.lambda.size(); ++j)
        recs.emplace_back("lambda." + std::to_string(j + 1),
                          kv::format_double(profile.lambda[j]));
    kv::write(out, recs);
}

void save_profile(const std::string& path, const ImpulseProfile& profile) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    save_profile(out, profile);
}

ImpulseProfile load_profile(std::istream& in) {
    ImpulseProfile profile;
    long levels = 0;
    for (const auto& [key, value] : kv::parse(in)) {
        if (key == "wavelet") {
            if (value != "daubechies6")
                throw std::runtime_error("unsupported wavelet in profile: " + value);
        } else if (key == "levels") {
            levels = kv::parse_long(value);
            if (levels < 1 || levels > 32)
                throw std::runtime_error("bad level count in profile");
            profile.lambda.assign(levels, 0.0);
        } else if (key == "segment_count") {
            profile.segment_count = static_cast<int>(kv::parse_long(value));
        } else if (key.rfind("lambda.", 0) == 0) {
            const long j = kv::parse_long(key.substr(7));
            if (j < 1 || j > levels)
                throw std::runtime_error("lambda level out of range: " + key);
            profile.lambda[j - 1] = kv::parse_double(value);
        } else {
            throw std::runtime_error("unknown profile key: " + key);
        }
    }
    profile.validate();
    return profile;
}

ImpulseProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_profile(in);
}

} // namespace impnoise
