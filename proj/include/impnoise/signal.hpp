#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace impnoise {

/// Mono sample sequence; the time-domain currency of the whole pipeline.
/// Samples are 64-bit floats regardless of the on-disk format.
struct Signal {
    std::vector<double> samples;
    double sample_rate = 16000.0;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }

    /// Throws if the sample rate is non-positive or any sample is NaN/Inf.
    void validate() const {
        if (sample_rate <= 0.0)
            throw std::invalid_argument("invalid sample rate");
        for (double s : samples)
            if (!std::isfinite(s))
                throw std::invalid_argument("non-finite sample");
    }
};

} // namespace impnoise
