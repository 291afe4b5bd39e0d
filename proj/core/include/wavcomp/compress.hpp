#pragma once

#include "wavcomp/container.hpp"
#include "wavcomp/silence.hpp"
#include "wavcomp/wav.hpp"

namespace wavcomp {

/// Silence-compress an 8-bit mono PCM WavFile.
/// Throws Errc::unsupported_format for any other format.
CompressedFile compress_silence(const WavFile& wav, const SilenceParams& params);

/// Compand-compress an 8-bit mono PCM WavFile to `bits`-wide codes.
/// Throws Errc::unsupported_format or Errc::bits_out_of_range.
CompressedFile compress_companding(const WavFile& wav, int bits);

/// Decode either codec back to a plain WavFile of original_data_len samples.
WavFile decompress_file(const CompressedFile& file);

}  // namespace wavcomp
