#pragma once

#include <cstdint>


#include "wavcomp/errors.hpp"

namespace wavcomp {

/// Size triple printed by compress and bench.
struct CompressionReport {
    uint64_t input_bytes = 0;
    uint64_t output_bytes = 0;
    int ratio_percent = 0;  // space savings, (1 - out/in) * 100, ceiling
};

/// Throws Errc::empty_input when input_bytes is 0. The ratio is the ceiling
/// of the savings percent (equivalently 100 - floor(100 * out/in)), which is
/// 0 when the output does not shrink.
inline CompressionReport make_report(uint64_t input_bytes, uint64_t output_bytes) {
    if (input_bytes == 0)
        raise(Errc::empty_input, "cannot report a ratio for an empty input");
    const auto num = (int64_t(input_bytes) - int64_t(output_bytes)) * 100;
    const auto in = int64_t(input_bytes);
    // ceil(num / in); integer division truncates toward zero, which already
    // ceils when num is negative.
    const long long ratio = num >= 0 ? (num + in - 1) / in : num / in;
    return {input_bytes, output_bytes, int(ratio)};
}

}  // namespace wavcomp
