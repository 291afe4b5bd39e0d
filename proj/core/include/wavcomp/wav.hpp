#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wavcomp {

/// PCM format metadata from the "fmt " chunk.
struct FormatChunk {
    uint16_t audio_format = 1;  // 1 = PCM
    uint16_t channels = 1;      // 1 = mono, 2 = stereo
    uint32_t sample_rate = 8000;
    uint32_t byte_rate = 8000;   // sample_rate * block_align
    uint16_t block_align = 1;    // channels * bits_per_sample / 8
    uint16_t bits_per_sample = 8;

    /// Throws Errc::invariant_violation if the fields are inconsistent.
    void validate() const;

    static FormatChunk mono8(uint32_t sample_rate);

    bool operator==(const FormatChunk&) const = default;
};

/// Parsed WAV file: format metadata plus the raw bytes of the data chunk.
struct WavFile {
    FormatChunk format;
    std::vector<uint8_t> data;
    /// Tags of chunks skipped while scanning for fmt/data.
    std::vector<std::string> skipped_chunks;
    /// True when the RIFF length field disagreed with the actual file size.
    bool riff_length_mismatch = false;
};

/// Parse a complete WAV file image. Chunk-level lengths are authoritative;
/// the RIFF total length is only cross-checked (see riff_length_mismatch).
WavFile parse_wav(std::span<const uint8_t> bytes);

/// Serialize with the canonical 44-byte header (fmt length 16, PCM).
/// Data is padded to an even byte boundary; the declared data length is not.
/// Skipped chunks are not re-emitted.
std::vector<uint8_t> write_wav(const WavFile& file);

/// Human-readable field listing, data length and duration.
std::string describe(const WavFile& file);

}  // namespace wavcomp
