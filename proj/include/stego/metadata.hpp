#pragma once

#include <filesystem>
#include <string>

#include "stego/prng.hpp"
#include "stego/segmenter.hpp"

namespace stego {

/// Sidecar JSON written next to a stego image so the receiver does not have
/// to repeat the embedding flags. Carries the parameters and a weak key
/// fingerprint (seed mod 65521, as a decimal string), never the key itself.
std::string sidecar_json(const SegParams& p, StegoKey key);

/// Parameters back from sidecar text. Throws BadParams on malformed input
/// or an unknown format_version.
SegParams params_from_sidecar(const std::string& text);

/// Fingerprint check: true when the sidecar either has no fingerprint or
/// it matches the given key.
bool sidecar_matches_key(const std::string& text, StegoKey key);

std::string flat_bits_name(FlatBits mode);
FlatBits flat_bits_from_name(const std::string& name);

} // namespace stego
