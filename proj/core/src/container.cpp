#include "wavcomp/container.hpp"

#include <cstring>
#include <optional>

#include "wavcomp/errors.hpp"

namespace wavcomp {

namespace {

constexpr uint8_t kVersion = 1;
constexpr uint32_t kCmprBodyLen = 12;

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

std::vector<uint8_t> write_compressed(const CompressedFile& file) {
    file.source_format.validate();
    file.silence.validate();
    if (file.codec_id != CodecId::silence && file.codec_id != CodecId::companding)
        raise(Errc::invariant_violation, "codec id must be 1 or 2");
    if (file.codec_id == CodecId::companding) {
        if (file.bits < 1 || file.bits > 8)
            raise(Errc::invariant_violation, "companding bits must be 1..8");
        const size_t expect = (size_t(file.original_data_len) * file.bits + 7) / 8;
        if (file.payload.size() != expect)
            raise(Errc::invariant_violation,
                  "payload length does not match ceil(len * bits / 8)");
    }

    const size_t payload_disk = file.payload.size() + (file.payload.size() & 1);
    std::vector<uint8_t> out;
    out.reserve(64 + payload_disk);

    put_tag(out, "RIFF");
    put_u32(out, uint32_t(4 + (8 + 16) + (8 + kCmprBodyLen) + (8 + payload_disk)));
    put_tag(out, "WAVE");

    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, file.source_format.audio_format);
    put_u16(out, file.source_format.channels);
    put_u32(out, file.source_format.sample_rate);
    put_u32(out, file.source_format.byte_rate);
    put_u16(out, file.source_format.block_align);
    put_u16(out, file.source_format.bits_per_sample);

    put_tag(out, "CMPR");
    put_u32(out, kCmprBodyLen);
    out.push_back(uint8_t(file.codec_id));
    out.push_back(kVersion);
    out.push_back(file.codec_id == CodecId::companding ? file.bits : 0);
    out.push_back(file.silence.threshold);
    out.push_back(file.silence.start_threshold);
    out.push_back(file.silence.stop_threshold);
    put_u16(out, 0);  // reserved
    put_u32(out, file.original_data_len);

    put_tag(out, "data");
    put_u32(out, uint32_t(file.payload.size()));
    out.insert(out.end(), file.payload.begin(), file.payload.end());
    if (file.payload.size() & 1)
        out.push_back(0);
    return out;
}

CompressedFile read_compressed(std::span<const uint8_t> bytes) {
    if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE"))
        raise(Errc::truncated, "not a RIFF/WAVE file");

    CompressedFile file;
    std::optional<FormatChunk> fmt;
    bool have_cmpr = false;
    bool have_data = false;
    size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const uint32_t len = read_u32(bytes, pos + 4);
        const size_t body = pos + 8;
        if (len > bytes.size() - body)
            raise(Errc::truncated, "chunk declares more bytes than remain");
        if (tag_is(bytes, pos, "fmt ")) {
            if (len < 16)
                raise(Errc::truncated, "fmt chunk shorter than 16 bytes");
            FormatChunk f;
            f.audio_format = read_u16(bytes, body);
            f.channels = read_u16(bytes, body + 2);
            f.sample_rate = read_u32(bytes, body + 4);
            f.byte_rate = read_u32(bytes, body + 8);
            f.block_align = read_u16(bytes, body + 12);
            f.bits_per_sample = read_u16(bytes, body + 14);
            fmt = f;
        } else if (tag_is(bytes, pos, "CMPR")) {
            if (len < kCmprBodyLen)
                raise(Errc::truncated, "CMPR chunk shorter than 12 bytes");
            const uint8_t codec = bytes[body];
            const uint8_t version = bytes[body + 1];
            if (version != kVersion)
                raise(Errc::bad_version, "unknown CMPR version");
            if (codec != 1 && codec != 2)
                raise(Errc::invariant_violation, "unknown codec id");
            file.codec_id = CodecId(codec);
            file.bits = bytes[body + 2];
            file.silence.threshold = bytes[body + 3];
            file.silence.start_threshold = bytes[body + 4];
            file.silence.stop_threshold = bytes[body + 5];
            file.original_data_len = read_u32(bytes, body + 8);
            have_cmpr = true;
        } else if (tag_is(bytes, pos, "data")) {
            file.payload.assign(bytes.begin() + body, bytes.begin() + body + len);
            have_data = true;
        }
        pos = body + len + (len & 1);
    }

    if (!have_cmpr)
        raise(Errc::not_compressed, "no CMPR chunk; this is a plain WAV");
    if (!fmt || !have_data)
        raise(Errc::truncated, "missing fmt or data chunk");
    file.source_format = *fmt;
    return file;
}

}  // namespace wavcomp
