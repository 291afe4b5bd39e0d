#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace wavcomp {

/// Precomputed companding lookup tables for one output code width.
///
/// `compress` maps each 8-bit sample to a code of `bits` bits; `expand` maps
/// each code back to a reconstruction level. Codes are arranged symmetrically
/// around the 8-bit midpoint: with N = steps = 2^(bits-1), codes N..2N-1 cover
/// samples >= 128 and codes N-1..0 cover samples < 128.
struct CompandTables {
    int bits = 0;   // output code width, 1..8
    int steps = 0;  // 2^(bits-1)
    std::array<uint8_t, 256> compress{};
    std::vector<uint8_t> expand;  // 2^bits entries
};

/// Build the compress/expand tables for an output width of 1..8 bits.
/// Throws Errc::bits_out_of_range.
CompandTables build_tables(int bits);

/// Replace each sample by its code and bit-pack MSB-first (zero-padded).
std::vector<uint8_t> compand_encode(std::span<const uint8_t> samples,
                                    const CompandTables& tables);

/// Decode exactly sample_count codes back to reconstruction levels.
/// Throws Errc::payload_too_short.
std::vector<uint8_t> compand_decode(std::span<const uint8_t> payload,
                                    const CompandTables& tables,
                                    size_t sample_count);

/// Scale constant for the scalar 16-bit nonlinear mapping: 32767 targets a
/// 15-bit result, 127 an 8-bit result.
struct MappingParams16 {
    int32_t scale = 32767;
};

/// Nonlinear forward map, sign(s) * scale * (2^(|s|/65536) - 1), rounded
/// half away from zero. Accepts magnitudes up to 65535.
int32_t map16(int32_t sample, MappingParams16 params);

/// Inverse map, sign(m) * 65536 * log2(1 + |m|/scale), rounded half away
/// from zero.
int32_t unmap16(int32_t mapped, MappingParams16 params);

}  // namespace wavcomp
