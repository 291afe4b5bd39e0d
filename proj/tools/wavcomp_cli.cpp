#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavcomp/compress.hpp"
#include "wavcomp/errors.hpp"
#include "wavcomp/report.hpp"
#include "wavcomp/wav.hpp"

namespace fs = std::filesystem;
using namespace wavcomp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitFormat = 2;
constexpr int kExitParams = 3;

std::optional<std::vector<uint8_t>> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad())
        return std::nullopt;
    return bytes;
}

bool write_file(const fs::path& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        return false;
    out.write(reinterpret_cast<const char*>(bytes.data()),
              std::streamsize(bytes.size()));
    return bool(out);
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::bits_out_of_range:
        case Errc::invariant_violation:
        case Errc::empty_input:
            return kExitParams;
        default:
            return kExitFormat;
    }
}

void print_report(const CompressionReport& r) {
    std::cout << "input  : " << r.input_bytes << " bytes\n"
              << "output : " << r.output_bytes << " bytes\n"
              << "ratio  : " << r.ratio_percent << "%\n";
}

struct CompressOptions {
    std::string codec = "silence";
    int bits = 4;
    SilenceParams silence;
};

CompressedFile run_codec(const WavFile& wav, const CompressOptions& opt) {
    if (opt.codec == "silence")
        return compress_silence(wav, opt.silence);
    return compress_companding(wav, opt.bits);
}

int cmd_inspect(const std::string& in_path) {
    auto bytes = read_file(in_path);
    if (!bytes) {
        std::cerr << "error: cannot read " << in_path << "\n";
        return kExitIo;
    }
    try {
        std::cout << describe(parse_wav(*bytes));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    return kExitOk;
}

int cmd_compress(const std::string& in_path, const std::string& out_path,
                 const CompressOptions& opt) {
    auto bytes = read_file(in_path);
    if (!bytes) {
        std::cerr << "error: cannot read " << in_path << "\n";
        return kExitIo;
    }
    std::vector<uint8_t> out;
    try {
        const WavFile wav = parse_wav(*bytes);
        out = write_compressed(run_codec(wav, opt));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    if (!write_file(out_path, out)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitIo;
    }
    print_report(make_report(bytes->size(), out.size()));
    return kExitOk;
}

int cmd_decompress(const std::string& in_path, const std::string& out_path) {
    auto bytes = read_file(in_path);
    if (!bytes) {
        std::cerr << "error: cannot read " << in_path << "\n";
        return kExitIo;
    }
    std::vector<uint8_t> out;
    try {
        out = write_wav(decompress_file(read_compressed(*bytes)));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    if (!write_file(out_path, out)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitIo;
    }
    std::cout << "restored: " << out.size() << " bytes\n";
    return kExitOk;
}

struct BenchRow {
    std::string file;
    std::string codec;
    int bits = 0;  // 0 for silence
    CompressionReport report;
};

int cmd_bench(const std::string& dir, const std::string& codec_filter,
              std::optional<int> bits_opt, const std::string& format) {
    std::error_code ec;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file())
            continue;
        auto ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return char(std::tolower(c)); });
        if (ext == ".wav")
            files.push_back(entry.path());
    }
    if (ec) {
        std::cerr << "error: cannot read directory " << dir << "\n";
        return kExitIo;
    }
    std::sort(files.begin(), files.end());

    std::vector<int> bits_list;
    if (bits_opt)
        bits_list.push_back(*bits_opt);
    else
        for (int b = 1; b <= 8; ++b)
            bits_list.push_back(b);

    std::vector<BenchRow> rows;
    size_t processed = 0;
    for (const auto& path : files) {
        auto bytes = read_file(path);
        if (!bytes) {
            std::cerr << "warning: skipped " << path.filename().string()
                      << ": unreadable\n";
            continue;
        }
        WavFile wav;
        try {
            wav = parse_wav(*bytes);
            if (wav.format.bits_per_sample != 8 || wav.format.channels != 1)
                raise(Errc::unsupported_format, "not 8-bit mono PCM");
        } catch (const Error& e) {
            std::cerr << "warning: skipped " << path.filename().string() << ": "
                      << e.what() << "\n";
            continue;
        }
        const uint64_t in_size = bytes->size();
        const std::string name = path.filename().string();
        if (codec_filter != "compand") {
            const auto out = write_compressed(compress_silence(wav, SilenceParams{}));
            rows.push_back({name, "silence", 0, make_report(in_size, out.size())});
        }
        if (codec_filter != "silence") {
            for (int b : bits_list) {
                const auto out = write_compressed(compress_companding(wav, b));
                rows.push_back({name, "compand", b, make_report(in_size, out.size())});
            }
        }
        ++processed;
    }
    if (processed == 0) {
        std::cerr << "error: no usable WAV files in " << dir << "\n";
        return kExitIo;
    }

    if (format == "csv") {
        std::cout << "file,codec,bits,input_bytes,output_bytes,ratio_percent\n";
        for (const auto& r : rows)
            std::cout << r.file << ',' << r.codec << ','
                      << (r.bits ? std::to_string(r.bits) : std::string("-")) << ','
                      << r.report.input_bytes << ',' << r.report.output_bytes << ','
                      << r.report.ratio_percent << "\n";
    } else {
        std::printf("%-24s %-8s %4s %12s %12s %6s\n", "file", "codec", "bits",
                    "input_bytes", "output_bytes", "ratio");
        for (const auto& r : rows)
            std::printf("%-24s %-8s %4s %12llu %12llu %5d%%\n", r.file.c_str(),
                        r.codec.c_str(),
                        r.bits ? std::to_string(r.bits).c_str() : "-",
                        (unsigned long long)r.report.input_bytes,
                        (unsigned long long)r.report.output_bytes,
                        r.report.ratio_percent);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lossy WAV compression toolkit (silence run-length and "
                 "lookup-table companding codecs)"};
    app.require_subcommand(1);

    std::string in_path, out_path;

    auto* inspect = app.add_subcommand("inspect", "Describe a WAV file");
    inspect->add_option("input", in_path, "WAV file")->required();

    CompressOptions opt;
    auto* compress = app.add_subcommand("compress", "Compress an 8-bit mono WAV");
    compress->add_option("input", in_path, "input WAV")->required();
    compress->add_option("output", out_path, "output file")->required();
    compress->add_option("--codec", opt.codec, "codec: silence or compand")
        ->check(CLI::IsMember({"silence", "compand"}))
        ->capture_default_str();
    compress->add_option("--bits", opt.bits, "companding code width (1..8)")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    compress->add_option("--threshold", opt.silence.threshold, "silence band half-width")
        ->capture_default_str();
    compress
        ->add_option("--start-threshold", opt.silence.start_threshold,
                     "silent samples needed to open a run")
        ->capture_default_str();
    compress
        ->add_option("--stop-threshold", opt.silence.stop_threshold,
                     "non-silent samples that close a run")
        ->capture_default_str();

    auto* decompress = app.add_subcommand("decompress", "Restore a compressed file");
    decompress->add_option("input", in_path, "compressed file")->required();
    decompress->add_option("output", out_path, "output WAV")->required();

    std::string bench_dir, bench_codec = "both", bench_format = "table";
    std::optional<int> bench_bits;
    auto* bench = app.add_subcommand("bench", "Compression-ratio table over a corpus");
    bench->add_option("dir", bench_dir, "directory of WAV files")->required();
    bench->add_option("--codec", bench_codec, "restrict to one codec")
        ->check(CLI::IsMember({"silence", "compand", "both"}))
        ->capture_default_str();
    bench->add_option("--bits", bench_bits, "single companding width (default 1..8)")
        ->check(CLI::Range(1, 8));
    bench->add_option("--format", bench_format, "table or csv")
        ->check(CLI::IsMember({"table", "csv"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParams;
    }

    if (inspect->parsed())
        return cmd_inspect(in_path);
    if (compress->parsed())
        return cmd_compress(in_path, out_path, opt);
    if (decompress->parsed())
        return cmd_decompress(in_path, out_path);
    return cmd_bench(bench_dir, bench_codec, bench_bits, bench_format);
}
