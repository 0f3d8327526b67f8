#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace impnoise {

/// Orthonormal Daubechies filter pair. The analysis lowpass h carries the
/// filter; the highpass is the quadrature mirror g[k] = (-1)^k h[2n-1-k].
/// Synthesis reuses the same pair (orthonormal transform, inverse = transpose).
struct WaveletSpec {
    int order = 6; // vanishing-moment count; filter length is 2*order
    std::vector<double> lowpass;
    std::vector<double> highpass;

    static WaveletSpec daubechies(int order = 6);

    /// Checks sum(h) = sqrt(2), the double-shift orthonormality relations,
    /// and the vanishing moments of g. Throws on violation.
    void validate() const;
};

/// Per-block dyadic DWT coefficients. detail[0] is level 1 (the finest band,
/// block_len/2 coefficients); approx holds the level-L approximation.
struct WaveletDecomposition {
    std::vector<std::vector<double>> detail;
    std::vector<double> approx;
    int levels = 0;
    std::size_t block_len = 0;

    void validate() const; // throws "malformed decomposition"
};

/// Mallat cascade with periodic (circular) boundary extension: convolve with
/// h and g, downsample by 2, recurse on the approximation `levels` times.
WaveletDecomposition forward_dwt(std::span<const double> block,
                                 const WaveletSpec& spec,
                                 int levels);

/// Exact inverse of forward_dwt.
std::vector<double> inverse_dwt(const WaveletDecomposition& decomp,
                                const WaveletSpec& spec);

/// Test utility: transforms a degree-d monomial block (normalized to unit
/// peak) and returns the largest level-1 detail magnitude among coefficients
/// whose filter support does not wrap around the block edge. Near zero for
/// degrees below the wavelet's vanishing-moment count.
double polynomial_suppression_check(const WaveletSpec& spec, int degree,
                                    std::size_t block_len = 512);

} // namespace impnoise
