#include "stego/baselines.hpp"

#include <numeric>

#include "stego/error.hpp"

namespace stego {

namespace {

std::vector<std::uint32_t> visit_order(const Image& img, const BaselineOrder& order,
                                       std::size_t needed) {
    const std::size_t total = img.count();
    if (needed > total)
        fail(Err::CapacityExceeded, std::to_string(needed) + " bits into " +
                                        std::to_string(total) + " pixels");
    if (order.mode == VisitOrder::Sequential) {
        std::vector<std::uint32_t> idx(needed);
        std::iota(idx.begin(), idx.end(), 0u);
        return idx;
    }
    if (!order.key.keyed())
        fail(Err::BadParams, "keyed-random order needs a nonzero key");
    Prng rng(order.key);
    auto perm = derive_permutation(rng, static_cast<std::uint32_t>(total));
    perm.resize(needed);
    return perm;
}

} // namespace

Image lsb_replace_embed(const Image& cover, const BitVec& bits, const BaselineOrder& order) {
    Image stego = cover;
    auto idx = visit_order(cover, order, bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        std::uint8_t& p = stego.pixels[idx[i]];
        p = static_cast<std::uint8_t>((p & 0xFE) | (bits[i] & 1));
    }
    return stego;
}

Image lsb_match_embed(const Image& cover, const BitVec& bits, const BaselineOrder& order,
                      Prng& rng) {
    Image stego = cover;
    auto idx = visit_order(cover, order, bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        std::uint8_t& p = stego.pixels[idx[i]];
        if ((p & 1) == (bits[i] & 1)) continue;
        if (p == 0) {
            p = 1;
        } else if (p == 255) {
            p = 254;
        } else {
            p = static_cast<std::uint8_t>((rng.next_u32() & 1) ? p + 1 : p - 1);
        }
    }
    return stego;
}

BitVec lsb_extract(const Image& stego, std::size_t count, const BaselineOrder& order) {
    auto idx = visit_order(stego, order, count);
    BitVec bits(count);
    for (std::size_t i = 0; i < count; ++i) bits[i] = stego.pixels[idx[i]] & 1;
    return bits;
}

BitVec bytes_to_bits(std::span<const std::uint8_t> bytes) {
    BitVec bits;
    bits.reserve(bytes.size() * 8);
    for (auto b : bytes)
        for (int i = 7; i >= 0; --i) bits.push_back((b >> i) & 1);
    return bits;
}

std::vector<std::uint8_t> bits_to_bytes(const BitVec& bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) bytes[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
    return bytes;
}

} // namespace stego
