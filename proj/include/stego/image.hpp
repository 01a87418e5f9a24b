#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace stego {

/// 8-bit grayscale image, row-major, origin top-left. x is the column,
/// y is the row.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    Image() = default;
    Image(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    /// Clamped access: out-of-range coordinates replicate the border pixel.
    std::uint8_t at_clamped(int x, int y) const {
        if (x < 0) x = 0;
        if (x >= width) x = width - 1;
        if (y < 0) y = 0;
        if (y >= height) y = height - 1;
        return at(x, y);
    }
    std::size_t count() const { return pixels.size(); }

    bool operator==(const Image&) const = default;
};

/// Parses a binary PGM (P5, maxval 255). '#' comments are accepted between
/// header tokens. Throws Error with BadMagic/BadHeader/UnsupportedMaxval/
/// Truncated.
Image read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical form: "P5\n<w> <h>\n255\n" followed by the raw pixel rows.
/// Byte-identical across platforms.
std::vector<std::uint8_t> write_pgm(const Image& img);

Image load_pgm(const std::filesystem::path& path);
void save_pgm(const Image& img, const std::filesystem::path& path);

} // namespace stego
