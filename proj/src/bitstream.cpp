#include "stego/bitstream.hpp"

namespace stego {

FrameReader::FrameReader(std::span<const std::uint8_t> payload) {
    const std::uint32_t len = static_cast<std::uint32_t>(payload.size());
    frame_.reserve(payload.size() + 4);
    frame_.push_back(static_cast<std::uint8_t>(len >> 24));
    frame_.push_back(static_cast<std::uint8_t>(len >> 16));
    frame_.push_back(static_cast<std::uint8_t>(len >> 8));
    frame_.push_back(static_cast<std::uint8_t>(len));
    frame_.insert(frame_.end(), payload.begin(), payload.end());
    total_bits_ = 32 + 8ULL * payload.size();
}

std::uint32_t FrameReader::take(int width) {
    std::uint32_t out = 0;
    for (int i = 0; i < width; ++i) {
        std::uint32_t bit = 0;
        if (pos_ < total_bits_) {
            bit = (frame_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
            ++pos_;
        }
        out = (out << 1) | bit;
    }
    return out;
}

void FrameCollector::push(std::uint32_t chunk, int width) {
    for (int i = width - 1; i >= 0; --i) bits_.push_back((chunk >> i) & 1u);
    count_ += width;
}

std::uint32_t FrameCollector::header() const {
    std::uint32_t len = 0;
    for (int i = 0; i < 32; ++i) len = (len << 1) | bits_[i];
    return len;
}

std::vector<std::uint8_t> FrameCollector::payload(std::uint32_t byte_count) const {
    std::vector<std::uint8_t> out(byte_count, 0);
    for (std::uint32_t i = 0; i < 8u * byte_count; ++i)
        out[i >> 3] = static_cast<std::uint8_t>((out[i >> 3] << 1) | bits_[32 + i]);
    return out;
}

} // namespace stego
