#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wavcomp/silence.hpp"
#include "wavcomp/wav.hpp"

namespace wavcomp {

enum class CodecId : uint8_t {
    silence = 1,
    companding = 2,
};

/// Self-describing compressed file: codec id, its parameters, the original
/// sample count, the source format chunk, and the coded payload.
struct CompressedFile {
    CodecId codec_id = CodecId::silence;
    uint8_t bits = 0;  // companding code width; 0 for the silence codec
    SilenceParams silence;
    uint32_t original_data_len = 0;
    FormatChunk source_format;
    std::vector<uint8_t> payload;

    bool operator==(const CompressedFile&) const = default;
};

/// Serialize as a RIFF/WAVE file: canonical fmt chunk, a fixed 12-byte "CMPR"
/// chunk (codec_id u8, version u8 = 1, bits u8, threshold u8, start_threshold
/// u8, stop_threshold u8, reserved u16 = 0, original_data_len u32 LE), then a
/// data chunk with the payload (even-padded). Throws Errc::invariant_violation.
std::vector<uint8_t> write_compressed(const CompressedFile& file);

/// Parse a compressed container. Throws Errc::not_compressed when the file is
/// a plain WAV (no CMPR chunk), Errc::bad_version, or Errc::truncated.
CompressedFile read_compressed(std::span<const uint8_t> bytes);

}  // namespace wavcomp
