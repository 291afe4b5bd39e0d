#include "wavcomp/silence.hpp"

namespace wavcomp {

void SilenceParams::validate() const {
    if (int(silence_center) - int(threshold) < 0 ||
        int(silence_center) + int(threshold) > 255)
        raise(Errc::invariant_violation, "silence band exceeds the byte range");
    if (is_silence(silence_code, *this))
        raise(Errc::invariant_violation, "silence_code lies inside the silence band");
    if (start_threshold < 1 || stop_threshold < 1)
        raise(Errc::invariant_violation, "start/stop thresholds must be >= 1");
}

namespace {

void emit_run(std::vector<uint8_t>& out, size_t run_len, uint8_t code) {
    while (run_len > 0) {
        const size_t chunk = run_len < 255 ? run_len : 255;
        out.push_back(code);
        out.push_back(uint8_t(chunk));
        run_len -= chunk;
    }
}

void emit_literal(std::vector<uint8_t>& out, uint8_t sample, uint8_t code) {
    // A raw sample equal to the escape byte is clamped down by one.
    out.push_back(sample == code ? uint8_t(code - 1) : sample);
}

}  // namespace

std::vector<uint8_t> encode_silence(std::span<const uint8_t> samples,
                                    const SilenceParams& params) {
    std::vector<uint8_t> out;
    out.reserve(samples.size());
    const size_t n = samples.size();
    size_t i = 0;
    std::vector<uint8_t> pending;  // non-silent samples inside an open run
    while (i < n) {
        if (!is_silence(samples[i], params)) {
            emit_literal(out, samples[i], params.silence_code);
            ++i;
            continue;
        }
        size_t j = i;
        while (j < n && is_silence(samples[j], params))
            ++j;
        if (j - i < params.start_threshold) {
            for (; i < j; ++i)
                emit_literal(out, samples[i], params.silence_code);
            continue;
        }
        // Run opened; absorb until stop_threshold consecutive non-silent
        // samples (absorbed samples count toward the run length).
        size_t run_len = j - i;
        i = j;
        pending.clear();
        while (i < n) {
            if (is_silence(samples[i], params)) {
                run_len += pending.size() + 1;
                pending.clear();
            } else {
                pending.push_back(samples[i]);
                if (pending.size() == params.stop_threshold) {
                    ++i;
                    break;
                }
            }
            ++i;
        }
        emit_run(out, run_len, params.silence_code);
        for (uint8_t s : pending)
            emit_literal(out, s, params.silence_code);
        pending.clear();
    }
    return out;
}

std::vector<uint8_t> decode_silence(std::span<const uint8_t> stream,
                                    const SilenceParams& params) {
    std::vector<uint8_t> out;
    out.reserve(stream.size());
    for (size_t i = 0; i < stream.size(); ++i) {
        if (stream[i] != params.silence_code) {
            out.push_back(stream[i]);
            continue;
        }
        if (i + 1 >= stream.size())
            raise(Errc::truncated_run, "stream ends after a silence code");
        const size_t count = stream[++i];
        out.insert(out.end(), count, params.silence_center);
    }
    return out;
}

}  // namespace wavcomp
