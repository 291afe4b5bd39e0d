#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "wavcomp/errors.hpp"

namespace wavcomp {

/// Tuning parameters for silence run-length coding of 8-bit unsigned PCM.
struct SilenceParams {
    uint8_t silence_center = 0x80;
    uint8_t threshold = 4;        // |sample - center| <= threshold is silence
    uint8_t silence_code = 0xFF;  // escape byte, followed by a run count
    uint8_t start_threshold = 5;  // consecutive silent samples to open a run
    uint8_t stop_threshold = 2;   // consecutive non-silent samples that close it

    /// Throws Errc::invariant_violation on inconsistent parameters.
    void validate() const;

    bool operator==(const SilenceParams&) const = default;
};

inline bool is_silence(uint8_t sample, const SilenceParams& params) {
    return std::abs(int(sample) - int(params.silence_center)) <= int(params.threshold);
}

/// Replace silence runs of length >= start_threshold with (silence_code, count)
/// pairs. An open run absorbs interior non-silent samples until stop_threshold
/// consecutive non-silent samples occur; runs longer than 255 split into
/// multiple pairs. Literal samples equal to silence_code are clamped down by 1.
std::vector<uint8_t> encode_silence(std::span<const uint8_t> samples,
                                    const SilenceParams& params);

/// Expand every (silence_code, count) pair to `count` copies of the silence
/// center; all other bytes copy through. Throws Errc::truncated_run if the
/// stream ends right after a silence_code byte.
std::vector<uint8_t> decode_silence(std::span<const uint8_t> stream,
                                    const SilenceParams& params);

}  // namespace wavcomp
