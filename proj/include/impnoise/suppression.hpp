#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "impnoise/regularity.hpp"
#include "impnoise/wavelet.hpp"

namespace impnoise {

/// All empirical knobs of the suppression algorithm. Levels are 1-based,
/// level 1 = finest. A k_s of +infinity disables clipping at that level.
struct DenoiseConfig {
    std::map<int, double> k_s;        // threshold factor per fine level
    std::map<int, double> k_c;        // attenuation factor per coarse level
    std::map<int, int> median_len;    // odd median window length per fine level
    std::vector<int> fine_levels{1, 2, 3};
    std::vector<int> coarse_levels{4, 5, 6};
    int detection_source_level = 1;
    bool strict_literal = false; // signed reading of the coarse rule

    static DenoiseConfig defaults();
    void validate() const;
};

/// One fine-scale coefficient that exceeded its dynamic threshold.
struct DetectionRecord {
    int level = 0;
    std::size_t index = 0;
    double excess = 0.0;    // |Wf| - tau, always > 0 for stored records
    double threshold = 0.0; // tau at that point
};

/// tau[n] = k * median(|coeffs[n-K]| ... |coeffs[n+K]|), N = 2K+1, with edge
/// replication for out-of-range indices.
std::vector<double> dynamic_threshold(std::span<const double> coeffs,
                                      double k, int window_len);

/// Clips each coefficient's magnitude to its threshold, preserving sign, and
/// records the pre-clip excess of every clipped index.
std::pair<std::vector<double>, std::vector<DetectionRecord>>
clip_fine(std::span<const double> coeffs, std::span<const double> tau,
          int level);

/// Subtracts scaled fine-scale excesses from the mapped coarse coefficients:
/// the detection at fine index n_f maps to n_c = n_f / 2^(c-f), the amount is
/// k_c * lambda[c]/lambda[f] * excess (maximum when several detections map to
/// the same index), and the coefficient magnitude is reduced by it, clamped
/// at zero with sign preserved. strict_literal instead applies the rule on
/// the raw signed coefficient.
std::vector<double> attenuate_coarse(std::span<const double> coeffs,
                                     int coarse_level,
                                     const std::vector<DetectionRecord>& detections,
                                     int fine_level,
                                     const ImpulseProfile& profile,
                                     double k_c,
                                     bool strict_literal = false);

/// Full per-block suppression: dynamic threshold + clipping on every fine
/// level, coarse attenuation driven by the detection source level. The
/// approximation band passes through untouched. No coefficient magnitude
/// ever increases.
WaveletDecomposition denoise_block(const WaveletDecomposition& decomp,
                                   const DenoiseConfig& cfg,
                                   const ImpulseProfile& profile);

void save_config(std::ostream& out, const DenoiseConfig& cfg);
void save_config(const std::string& path, const DenoiseConfig& cfg);
DenoiseConfig load_config(std::istream& in);   // defaults overridden by file
DenoiseConfig load_config(const std::string& path);

} // namespace impnoise
