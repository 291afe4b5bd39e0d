#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wavcomp/errors.hpp"

namespace wavcomp {

/// Pack `width`-bit codes into bytes, MSB-first; the final partial byte is
/// zero-padded.
inline std::vector<uint8_t> pack_bits(std::span<const uint8_t> codes, int width) {
    std::vector<uint8_t> out;
    out.reserve((codes.size() * size_t(width) + 7) / 8);
    uint32_t acc = 0;
    int nbits = 0;
    for (uint8_t code : codes) {
        acc = (acc << width) | code;
        nbits += width;
        while (nbits >= 8) {
            out.push_back(uint8_t(acc >> (nbits - 8)));
            nbits -= 8;
            acc &= (1u << nbits) - 1;
        }
    }
    if (nbits > 0)
        out.push_back(uint8_t(acc << (8 - nbits)));
    return out;
}

/// Inverse of pack_bits for a known code count; trailing padding bits are
/// ignored. Throws Errc::payload_too_short.
inline std::vector<uint8_t> unpack_bits(std::span<const uint8_t> bytes, int width,
                                        size_t count) {
    if (count * size_t(width) > bytes.size() * 8)
        raise(Errc::payload_too_short, "bit-packed payload shorter than code count");
    std::vector<uint8_t> out;
    out.reserve(count);
    uint32_t acc = 0;
    int nbits = 0;
    size_t pos = 0;
    const uint32_t mask = (1u << width) - 1;
    for (size_t i = 0; i < count; ++i) {
        while (nbits < width) {
            acc = (acc << 8) | bytes[pos++];
            nbits += 8;
        }
        out.push_back(uint8_t((acc >> (nbits - width)) & mask));
        nbits -= width;
        acc &= (1u << nbits) - 1;
    }
    return out;
}

}  // namespace wavcomp
