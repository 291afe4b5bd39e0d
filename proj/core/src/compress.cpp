#include "wavcomp/compress.hpp"

#include "wavcomp/compand.hpp"
#include "wavcomp/errors.hpp"

namespace wavcomp {

namespace {

void require_mono8(const WavFile& wav) {
    wav.format.validate();
    if (wav.format.bits_per_sample != 8 || wav.format.channels != 1)
        raise(Errc::unsupported_format, "codecs accept 8-bit mono PCM only");
}

}  // namespace

CompressedFile compress_silence(const WavFile& wav, const SilenceParams& params) {
    require_mono8(wav);
    params.validate();
    CompressedFile out;
    out.codec_id = CodecId::silence;
    out.silence = params;
    out.original_data_len = uint32_t(wav.data.size());
    out.source_format = wav.format;
    out.payload = encode_silence(wav.data, params);
    return out;
}

CompressedFile compress_companding(const WavFile& wav, int bits) {
    require_mono8(wav);
    const CompandTables tables = build_tables(bits);
    CompressedFile out;
    out.codec_id = CodecId::companding;
    out.bits = uint8_t(bits);
    out.original_data_len = uint32_t(wav.data.size());
    out.source_format = wav.format;
    out.payload = compand_encode(wav.data, tables);
    return out;
}

WavFile decompress_file(const CompressedFile& file) {
    WavFile wav;
    wav.format = file.source_format;
    if (file.codec_id == CodecId::silence) {
        wav.data = decode_silence(file.payload, file.silence);
        if (wav.data.size() != file.original_data_len)
            raise(Errc::truncated, "decoded length does not match the stored length");
    } else {
        const CompandTables tables = build_tables(file.bits);
        wav.data = compand_decode(file.payload, tables, file.original_data_len);
    }
    return wav;
}

}  // namespace wavcomp
