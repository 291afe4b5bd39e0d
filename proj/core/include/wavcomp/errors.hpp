#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wavcomp {

enum class Errc {
    missing_riff_magic,
    missing_wave_tag,
    missing_chunk,
    truncated,
    unsupported_format,
    invariant_violation,
    truncated_run,
    payload_too_short,
    bits_out_of_range,
    not_compressed,
    bad_version,
    empty_input,
};

/// Single exception type for the whole library; `code()` identifies the
/// structured error condition, `what()` carries a human-readable message.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, std::string msg) {
    throw Error(code, std::move(msg));
}

}  // namespace wavcomp
