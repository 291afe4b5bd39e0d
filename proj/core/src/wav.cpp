#include "wavcomp/wav.hpp"

#include <cstring>
#include <optional>
#include <sstream>

#include "wavcomp/errors.hpp"

namespace wavcomp {

namespace {

uint16_t read_u16(std::span<const uint8_t> b, size_t off) {
    return uint16_t(b[off] | (b[off + 1] << 8));
}

uint32_t read_u32(std::span<const uint8_t> b, size_t off) {
    return uint32_t(b[off]) | (uint32_t(b[off + 1]) << 8) |
           (uint32_t(b[off + 2]) << 16) | (uint32_t(b[off + 3]) << 24);
}

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(uint8_t(v));
    out.push_back(uint8_t(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(uint8_t(v));
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v >> 16));
    out.push_back(uint8_t(v >> 24));
}

void put_tag(std::vector<uint8_t>& out, const char* tag) {
    out.insert(out.end(), tag, tag + 4);
}

bool tag_is(std::span<const uint8_t> b, size_t off, const char* tag) {
    return std::memcmp(b.data() + off, tag, 4) == 0;
}

}  // namespace

void FormatChunk::validate() const {
    if (audio_format != 1)
        raise(Errc::invariant_violation, "format tag must be 1 (PCM)");
    if (bits_per_sample != 8 && bits_per_sample != 16)
        raise(Errc::invariant_violation, "bits per sample must be 8 or 16");
    if (channels != 1 && channels != 2)
        raise(Errc::invariant_violation, "channel count must be 1 or 2");
    if (block_align != channels * bits_per_sample / 8)
        raise(Errc::invariant_violation, "block align != channels * bits/sample / 8");
    if (byte_rate != sample_rate * block_align)
        raise(Errc::invariant_violation, "byte rate != sample rate * block align");
}

FormatChunk FormatChunk::mono8(uint32_t sample_rate) {
    return {1, 1, sample_rate, sample_rate, 1, 8};
}

WavFile parse_wav(std::span<const uint8_t> bytes) {
    if (bytes.size() >= 4 && !tag_is(bytes, 0, "RIFF"))
        raise(Errc::missing_riff_magic, "file does not start with RIFF");
    if (bytes.size() < 12)
        raise(Errc::truncated, "file too short for a RIFF header");
    if (!tag_is(bytes, 8, "WAVE"))
        raise(Errc::missing_wave_tag, "RIFF form type is not WAVE");

    const uint32_t riff_len = read_u32(bytes, 4);

    WavFile wav;
    std::optional<FormatChunk> fmt;
    bool have_data = false;
    size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const char tag[5] = {char(bytes[pos]), char(bytes[pos + 1]),
                             char(bytes[pos + 2]), char(bytes[pos + 3]), '\0'};
        const uint32_t len = read_u32(bytes, pos + 4);
        pos += 8;
        if (len > bytes.size() - pos)
            raise(Errc::truncated, std::string("chunk '") + tag +
                                       "' declares more bytes than remain");
        if (tag_is(bytes, pos - 8, "fmt ")) {
            if (len < 16)
                raise(Errc::truncated, "fmt chunk shorter than 16 bytes");
            FormatChunk f;
            f.audio_format = read_u16(bytes, pos);
            f.channels = read_u16(bytes, pos + 2);
            f.sample_rate = read_u32(bytes, pos + 4);
            f.byte_rate = read_u32(bytes, pos + 8);
            f.block_align = read_u16(bytes, pos + 12);
            f.bits_per_sample = read_u16(bytes, pos + 14);
            if (f.audio_format != 1)
                raise(Errc::unsupported_format, "only PCM (format tag 1) is supported");
            fmt = f;
        } else if (tag_is(bytes, pos - 8, "data")) {
            wav.data.assign(bytes.begin() + pos, bytes.begin() + pos + len);
            have_data = true;
            break;
        } else {
            wav.skipped_chunks.emplace_back(tag);
        }
        pos += len + (len & 1);  // chunks are even-aligned
    }

    if (!fmt)
        raise(Errc::missing_chunk, "no fmt chunk found");
    if (!have_data)
        raise(Errc::missing_chunk, "no data chunk found");

    wav.format = *fmt;
    wav.riff_length_mismatch = (uint64_t(riff_len) != bytes.size() - 8);
    return wav;
}

std::vector<uint8_t> write_wav(const WavFile& file) {
    file.format.validate();

    const size_t data_len = file.data.size();
    const size_t data_disk = data_len + (data_len & 1);
    std::vector<uint8_t> out;
    out.reserve(44 + data_disk);

    put_tag(out, "RIFF");
    put_u32(out, uint32_t(36 + data_disk));
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, file.format.audio_format);
    put_u16(out, file.format.channels);
    put_u32(out, file.format.sample_rate);
    put_u32(out, file.format.byte_rate);
    put_u16(out, file.format.block_align);
    put_u16(out, file.format.bits_per_sample);
    put_tag(out, "data");
    put_u32(out, uint32_t(data_len));  // declared length stays odd if odd
    out.insert(out.end(), file.data.begin(), file.data.end());
    if (data_len & 1)
        out.push_back(0);
    return out;
}

std::string describe(const WavFile& file) {
    std::ostringstream os;
    const auto& f = file.format;
    os << "format        : " << (f.audio_format == 1 ? "PCM" : "non-PCM")
       << " (tag " << f.audio_format << ")\n";
    os << "channels      : " << f.channels << (f.channels == 1 ? " (mono)" : " (stereo)")
       << "\n";
    os << "sample rate   : " << f.sample_rate << " Hz\n";
    os << "byte rate     : " << f.byte_rate << " bytes/s\n";
    os << "block align   : " << f.block_align << "\n";
    os << "bits/sample   : " << f.bits_per_sample << "\n";
    os << "data length   : " << file.data.size() << " bytes\n";
    const double duration =
        f.byte_rate ? double(file.data.size()) / double(f.byte_rate) : 0.0;
    os.precision(3);
    os << "duration      : " << std::fixed << duration << " s\n";
    if (!file.skipped_chunks.empty()) {
        os << "skipped chunks:";
        for (const auto& tag : file.skipped_chunks)
            os << " '" << tag << "'";
        os << "\n";
    }
    if (file.riff_length_mismatch)
        os << "warning: RIFF length field disagrees with the file size\n";
    return os.str();
}

}  // namespace wavcomp
