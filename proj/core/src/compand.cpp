#include "wavcomp/compand.hpp"

#include <cmath>

#include "wavcomp/bitpack.hpp"
#include "wavcomp/errors.hpp"

namespace wavcomp {

CompandTables build_tables(int bits) {
    if (bits < 1 || bits > 8)
        raise(Errc::bits_out_of_range, "output code width must be 1..8 bits");

    CompandTables t;
    t.bits = bits;
    t.steps = 1 << (bits - 1);
    const int n = t.steps;

    // Real-valued level curve v_c, its bucket thresholds, and the midpoint
    // reconstruction levels. Thresholds and midpoints are forced strictly
    // increasing so every code owns at least one sample magnitude; for widths
    // up to 7 bits the forcing never fires, at 8 bits it degrades the tables
    // to the identity mapping.
    std::vector<double> v(size_t(n) + 1, 0.0);
    for (int c = 1; c <= n; ++c)
        v[c] = 128.0 * (std::pow(2.0, double(c) / n) - 1.0) + 0.5;

    std::vector<int> threshold(size_t(n) + 1, 0);
    std::vector<int> level(size_t(n) + 1, 0);
    for (int c = 1; c <= n; ++c) {
        threshold[c] = std::max(threshold[c - 1] + 1, int(std::floor(v[c])));
        const int mid = int(std::floor((v[c] + v[c - 1]) / 2.0));
        level[c] = c == 1 ? mid : std::max(level[c - 1] + 1, mid);
    }

    t.expand.resize(size_t(2) * n);
    for (int c = 1; c <= n; ++c) {
        t.expand[size_t(n + c - 1)] = uint8_t(128 + level[c]);
        t.expand[size_t(n - c)] = uint8_t(127 - level[c]);
    }

    for (int s = 0; s < 256; ++s) {
        const int mag = s >= 128 ? s - 127 : 128 - s;
        int c = 1;
        while (mag > threshold[c])
            ++c;
        t.compress[size_t(s)] = uint8_t(s >= 128 ? n + c - 1 : n - c);
    }
    return t;
}

std::vector<uint8_t> compand_encode(std::span<const uint8_t> samples,
                                    const CompandTables& tables) {
    std::vector<uint8_t> codes;
    codes.reserve(samples.size());
    for (uint8_t s : samples)
        codes.push_back(tables.compress[s]);
    return pack_bits(codes, tables.bits);
}

std::vector<uint8_t> compand_decode(std::span<const uint8_t> payload,
                                    const CompandTables& tables,
                                    size_t sample_count) {
    std::vector<uint8_t> codes = unpack_bits(payload, tables.bits, sample_count);
    for (auto& c : codes)
        c = tables.expand[c];
    return codes;
}

namespace {

int32_t round_away(double x) {
    return int32_t(x < 0 ? -std::floor(-x + 0.5) : std::floor(x + 0.5));
}

}  // namespace

int32_t map16(int32_t sample, MappingParams16 params) {
    const double mag = std::abs(double(sample));
    const double mapped = double(params.scale) * (std::pow(2.0, mag / 65536.0) - 1.0);
    return sample < 0 ? -round_away(mapped) : round_away(mapped);
}

int32_t unmap16(int32_t mapped, MappingParams16 params) {
    const double mag = std::abs(double(mapped));
    const double sample = 65536.0 * std::log2(1.0 + mag / double(params.scale));
    return mapped < 0 ? -round_away(sample) : round_away(sample);
}

}  // namespace wavcomp
