#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stego/error.hpp"

namespace stego {

/// Message frame consumed by the embedder: a 32-bit big-endian payload byte
/// count followed by the payload, most significant bit of each byte first.
/// Reads past the last meaningful bit return zeros (tail padding).
class FrameReader {
public:
    explicit FrameReader(std::span<const std::uint8_t> payload);

    std::uint64_t total_bits() const { return total_bits_; }
    bool done() const { return pos_ >= total_bits_; }

    /// Next `width` bits as an integer, first bit in the most significant
    /// position. width <= 32.
    std::uint32_t take(int width);

private:
    std::vector<std::uint8_t> frame_;
    std::uint64_t total_bits_ = 0;
    std::uint64_t pos_ = 0;
};

/// Bit sink used by the extractor; bits arrive in chunks and are
/// reassembled into the frame.
class FrameCollector {
public:
    void push(std::uint32_t chunk, int width);
    std::uint64_t bit_count() const { return count_; }

    /// Payload byte count from the first 32 bits. Requires bit_count() >= 32.
    std::uint32_t header() const;

    /// Payload bytes (bits 32 .. 32+8L). Requires enough collected bits.
    std::vector<std::uint8_t> payload(std::uint32_t byte_count) const;

private:
    std::vector<std::uint8_t> bits_; // one bit per element, arrival order
    std::uint64_t count_ = 0;
};

} // namespace stego
