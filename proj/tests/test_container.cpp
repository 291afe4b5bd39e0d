#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wavcomp/compress.hpp"
#include "wavcomp/container.hpp"
#include "wavcomp/errors.hpp"

using namespace wavcomp;
using testutil::mono8_wav;
using testutil::random_samples;

namespace {

CompressedFile sample_file(CodecId codec, std::mt19937& rng, size_t len = 200) {
    const auto wav = mono8_wav(random_samples(rng, len));
    if (codec == CodecId::silence)
        return compress_silence(wav, SilenceParams{});
    return compress_companding(wav, 4);
}

}  // namespace

TEST_CASE("write/read round trip for both codecs") {
    std::mt19937 rng(31);
    for (auto codec : {CodecId::silence, CodecId::companding}) {
        const auto f = sample_file(codec, rng);
        const auto g = read_compressed(write_compressed(f));
        CHECK(g.codec_id == f.codec_id);
        CHECK(g.bits == f.bits);
        CHECK(g.original_data_len == f.original_data_len);
        CHECK(g.source_format == f.source_format);
        CHECK(g.payload == f.payload);
        CHECK(g.silence.threshold == f.silence.threshold);
        CHECK(g.silence.start_threshold == f.silence.start_threshold);
        CHECK(g.silence.stop_threshold == f.silence.stop_threshold);
    }
}

TEST_CASE("silence files store bits = 0") {
    std::mt19937 rng(32);
    const auto image = write_compressed(sample_file(CodecId::silence, rng));
    // CMPR body starts right after "RIFF"+"WAVE" (12) + fmt chunk (24) + tag/len (8)
    CHECK(image[12 + 24 + 8 + 2] == 0);
}

TEST_CASE("companding payload length matches the bits invariant") {
    std::mt19937 rng(33);
    const auto wav = mono8_wav(random_samples(rng, 34574));
    const auto f = compress_companding(wav, 4);
    CHECK(f.payload.size() == 17287);
    CompressedFile bad = f;
    bad.payload.pop_back();
    CHECK_THROWS_AS(write_compressed(bad), Error);
}

TEST_CASE("plain WAV is reported as not compressed") {
    std::mt19937 rng(34);
    const auto image = write_wav(mono8_wav(random_samples(rng, 50)));
    try {
        read_compressed(image);
        FAIL("expected not_compressed");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_compressed);
    }
}

TEST_CASE("bad version and truncation are detected") {
    std::mt19937 rng(35);
    auto image = write_compressed(sample_file(CodecId::companding, rng));
    const size_t cmpr_body = 12 + 24 + 8;

    SUBCASE("bad version") {
        image[cmpr_body + 1] = 9;
        try {
            read_compressed(image);
            FAIL("expected bad_version");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::bad_version);
        }
    }
    SUBCASE("corrupted chunk length") {
        image[cmpr_body - 4] = 0xFF;  // CMPR length low byte
        try {
            read_compressed(image);
            FAIL("expected truncated");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::truncated);
        }
    }
}

TEST_CASE("a compressed file is a structurally valid RIFF file") {
    std::mt19937 rng(36);
    const auto image = write_compressed(sample_file(CodecId::silence, rng));
    // the plain WAV parser walks it fine, skipping the CMPR chunk
    const WavFile as_wav = parse_wav(image);
    REQUIRE(as_wav.skipped_chunks.size() == 1);
    CHECK(as_wav.skipped_chunks[0] == "CMPR");
}

TEST_CASE("decompress restores the original sample bytes sizes") {
    std::mt19937 rng(37);
    const auto wav = mono8_wav(random_samples(rng, 1001));
    for (auto codec : {CodecId::silence, CodecId::companding}) {
        const auto f = sample_file(codec, rng, 1001);
        const WavFile restored = decompress_file(f);
        CHECK(restored.data.size() == 1001);
        CHECK(restored.format == f.source_format);
    }
}

TEST_CASE("codecs reject 16-bit and stereo input") {
    WavFile w;
    w.format = {1, 1, 8000, 16000, 2, 16};
    w.data = {0, 0};
    CHECK_THROWS_AS(compress_silence(w, SilenceParams{}), Error);
    w.format = {1, 2, 8000, 16000, 2, 8};
    CHECK_THROWS_AS(compress_companding(w, 4), Error);
}
