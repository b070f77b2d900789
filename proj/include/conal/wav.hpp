#pragma once

#include <string>

#include "conal/speech.hpp"

namespace conal {

/// PCM 16-bit signed little-endian; multi-channel inputs are downmixed by
/// averaging. Samples are scaled to [-1, 1).
AudioSignal read_wav(const std::string& path);
void write_wav(const std::string& path, const AudioSignal& audio);

}  // namespace conal
