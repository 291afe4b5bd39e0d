#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wavcomp/compress.hpp"
#include "wavcomp/report.hpp"

using namespace wavcomp;

TEST_CASE("published silence-table ratios") {
    CHECK(make_report(34618, 25099).ratio_percent == 28);
    CHECK(make_report(14028, 7052).ratio_percent == 50);
    CHECK(make_report(20298, 13887).ratio_percent == 32);
    CHECK(make_report(29930, 13310).ratio_percent == 56);
    const int chord2 = make_report(14028, 9074).ratio_percent;
    CHECK(chord2 >= 35);
    CHECK(chord2 <= 36);
}

TEST_CASE("published companding-table ratios") {
    const int expected[9] = {0, 88, 75, 63, 50, 38, 25, 13, 0};
    const int outputs[9] = {0, 4390, 8709, 13028, 17347, 21666, 25985, 30304, 34618};
    for (int bits = 1; bits <= 8; ++bits)
        CHECK(make_report(34618, uint64_t(outputs[bits])).ratio_percent ==
              expected[bits]);
}

TEST_CASE("ratio edge cases") {
    CHECK(make_report(1000, 1000).ratio_percent == 0);
    CHECK(make_report(1000, 1001).ratio_percent == 0);
    CHECK(make_report(1000, 1500).ratio_percent == -50);
    CHECK(make_report(1000, 500).ratio_percent == 50);
    CHECK(make_report(1000, 999).ratio_percent == 1);
}

TEST_CASE("empty input is rejected") {
    CHECK_THROWS_AS(make_report(0, 10), Error);
}

TEST_CASE("companding ratio depends only on sizes, not sample values") {
    std::mt19937 rng(41);
    const size_t len = 5000;
    int first = -1;
    for (int iter = 0; iter < 10; ++iter) {
        const auto wav = testutil::mono8_wav(testutil::random_samples(rng, len));
        const auto out = write_compressed(compress_companding(wav, 3));
        const auto in_size = write_wav(wav).size();
        const int ratio = make_report(in_size, out.size()).ratio_percent;
        if (first < 0)
            first = ratio;
        CHECK(ratio == first);
    }
}
