#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stego/image.hpp"
#include "stego/prng.hpp"

namespace stego {

using BitVec = std::vector<std::uint8_t>; // one bit per element

enum class VisitOrder { Sequential, KeyedRandom };

struct BaselineOrder {
    VisitOrder mode = VisitOrder::Sequential;
    StegoKey key{};
};

/// Classic LSB replacement: overwrite the least significant bit of each
/// visited pixel.
Image lsb_replace_embed(const Image& cover, const BitVec& bits, const BaselineOrder& order);

/// LSB matching: leave matching pixels alone, otherwise +-1 picked by the
/// low bit of the generator (0 -> -1, 1 -> +1); forced +1 at 0, -1 at 255.
Image lsb_match_embed(const Image& cover, const BitVec& bits, const BaselineOrder& order,
                      Prng& rng);

/// LSBs of the visited pixels, in visit order. Works for both baselines.
BitVec lsb_extract(const Image& stego, std::size_t count, const BaselineOrder& order);

BitVec bytes_to_bits(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> bits_to_bytes(const BitVec& bits);

} // namespace stego
