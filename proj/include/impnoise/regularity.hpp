#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "impnoise/framing.hpp"
#include "impnoise/signal.hpp"
#include "impnoise/wavelet.hpp"

namespace impnoise {

/// Representative absolute coefficient magnitude per level around one time
/// point. magnitude[0] is level 1 (finest).
struct DecayProfile {
    std::vector<double> magnitude;
    bool normalized = false;
    bool degenerate = false; // finest-scale magnitude was zero
};

/// Average normalized magnitude decay of an impulse across scales,
/// lambda[0] = 1 at the finest level.
struct ImpulseProfile {
    std::vector<double> lambda;
    int segment_count = 0;

    void validate() const;
};

/// For each level j, takes the maximum absolute coefficient among level-j
/// indices whose time support [k*2^j, (k+1)*2^j) intersects
/// [center - radius, center + radius]. Not normalized.
DecayProfile decay_profile(const WaveletDecomposition& decomp,
                           std::size_t center, std::size_t radius);

/// Scales the profile so magnitude[0] = 1; marks it degenerate instead when
/// the finest-scale magnitude is zero.
DecayProfile normalize(DecayProfile profile);

/// Least-squares slope of log2(magnitude[j]) against level j over
/// [level_lo, level_hi] (level_hi = 0 means all levels). Since scale s = 2^j,
/// this is the decay slope d log|Wf| / d log s in base-2 units.
double lipschitz_slope(const DecayProfile& profile,
                       int level_lo = 1, int level_hi = 0);

/// Transforms the block containing each marked impulse, normalizes its decay
/// profile and averages across segments. Degenerate segments are skipped.
ImpulseProfile learn_impulse_profile(
    const std::vector<std::pair<Signal, std::size_t>>& segments,
    const WaveletSpec& spec, const FrameConfig& cfg,
    std::size_t radius, int levels = 6);

void save_profile(std::ostream& out, const ImpulseProfile& profile);
void save_profile(const std::string& path, const ImpulseProfile& profile);
ImpulseProfile load_profile(std::istream& in);
ImpulseProfile load_profile(const std::string& path);

} // namespace impnoise
