#pragma once

#include <cstdint>
#include <vector>

namespace stego {

/// Embedding key. Seed 0 selects the unkeyed/canonical mode: identity pair
/// mappings and canonical embedding matrices, no PRNG draws at all.
struct StegoKey {
    std::uint64_t seed = 0;
    bool keyed() const { return seed != 0; }
};

/// xorshift64* generator. The state is never zero; a zero seed is replaced
/// by 0x9E3779B97F4A7C15 so that every key yields a usable stream.
class Prng {
public:
    explicit Prng(StegoKey key)
        : state_(key.seed != 0 ? key.seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint32_t next_u32() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return static_cast<std::uint32_t>((x * 0x2545F4914F6CDD1DULL) >> 32);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// Fisher-Yates from the identity, j = next_u32() mod (i+1) for i from k-1
/// down to 1. Consumes exactly k-1 outputs. Modulo bias is accepted; exact
/// replay on both sides is what matters here.
std::vector<std::uint32_t> derive_permutation(Prng& rng, std::uint32_t k);

} // namespace stego
