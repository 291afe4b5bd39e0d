#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wavcomp/compand.hpp"
#include "wavcomp/silence.hpp"

using namespace wavcomp;

namespace {

std::vector<uint8_t> make_audio(size_t n, bool quiet_half) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> any(0, 255);
    std::uniform_int_distribution<int> band(0x7C, 0x84);
    std::vector<uint8_t> out(n);
    for (size_t i = 0; i < n; ++i) {
        const bool quiet = quiet_half && (i / 512) % 2 == 0;
        out[i] = uint8_t(quiet ? band(rng) : any(rng));
    }
    return out;
}

void BM_SilenceEncode(benchmark::State& state) {
    const auto audio = make_audio(size_t(state.range(0)), true);
    const SilenceParams params{};
    for (auto _ : state)
        benchmark::DoNotOptimize(encode_silence(audio, params));
    state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SilenceEncode)->Arg(1 << 14)->Arg(1 << 18);

void BM_SilenceDecode(benchmark::State& state) {
    const SilenceParams params{};
    const auto encoded = encode_silence(make_audio(size_t(state.range(0)), true), params);
    for (auto _ : state)
        benchmark::DoNotOptimize(decode_silence(encoded, params));
    state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SilenceDecode)->Arg(1 << 14)->Arg(1 << 18);

void BM_BuildTables(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(build_tables(int(state.range(0))));
}
BENCHMARK(BM_BuildTables)->DenseRange(1, 8);

void BM_CompandEncode(benchmark::State& state) {
    const auto audio = make_audio(size_t(state.range(0)), false);
    const auto tables = build_tables(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(compand_encode(audio, tables));
    state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_CompandEncode)->Arg(1 << 14)->Arg(1 << 18);

void BM_CompandDecode(benchmark::State& state) {
    const auto tables = build_tables(4);
    const auto audio = make_audio(size_t(state.range(0)), false);
    const auto payload = compand_encode(audio, tables);
    for (auto _ : state)
        benchmark::DoNotOptimize(compand_decode(payload, tables, audio.size()));
    state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_CompandDecode)->Arg(1 << 14)->Arg(1 << 18);

}  // namespace

BENCHMARK_MAIN();
