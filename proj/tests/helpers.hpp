#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wavcomp/wav.hpp"

namespace testutil {

inline std::vector<uint8_t> random_samples(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<int> dist(0, 255);
    std::vector<uint8_t> out(n);
    for (auto& b : out)
        b = uint8_t(dist(rng));
    return out;
}

inline wavcomp::WavFile mono8_wav(std::vector<uint8_t> data, uint32_t rate = 8000) {
    wavcomp::WavFile w;
    w.format = wavcomp::FormatChunk::mono8(rate);
    w.data = std::move(data);
    return w;
}

/// Canonical 44-byte-header image with random but valid format fields.
inline std::vector<uint8_t> random_wav_image(std::mt19937& rng, size_t max_data = 4096,
                                             bool even_data = false) {
    static const uint32_t rates[] = {8000, 11025, 22050, 44100};
    wavcomp::WavFile w;
    const uint16_t channels = std::uniform_int_distribution<int>(0, 1)(rng) ? 2 : 1;
    const uint16_t bits = std::uniform_int_distribution<int>(0, 1)(rng) ? 16 : 8;
    const uint32_t rate = rates[std::uniform_int_distribution<int>(0, 3)(rng)];
    const uint16_t align = uint16_t(channels * bits / 8);
    w.format = {1, channels, rate, rate * align, align, bits};
    size_t len = std::uniform_int_distribution<size_t>(0, max_data)(rng);
    if (even_data)
        len &= ~size_t(1);
    w.data = random_samples(rng, len);
    return wavcomp::write_wav(w);
}

}  // namespace testutil
