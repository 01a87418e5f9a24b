#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "stego/image.hpp"

namespace stego {

struct Histogram {
    std::array<std::uint64_t, 256> counts{};

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }
};

/// Spatial displacement (dx columns, dy rows). (0,0) is not a valid offset.
struct Offset {
    int dx = 1;
    int dy = 0;
};

/// 256x256 pair-frequency table: at(i,j) counts positions where the pixel
/// value is i and the pixel at (+dx,+dy) is j.
struct CoocMatrix {
    Offset offset;
    std::vector<std::uint64_t> entries = std::vector<std::uint64_t>(256 * 256, 0);

    std::uint64_t at(int i, int j) const { return entries[i * 256 + j]; }
    std::uint64_t& at(int i, int j) { return entries[i * 256 + j]; }
    std::uint64_t total() const;
};

Histogram histogram(const Image& img);

CoocMatrix cooccurrence(const Image& img, Offset off);

/// Sum of absolute entry differences. Offsets must match.
std::uint64_t cooc_l1_distance(const CoocMatrix& a, const CoocMatrix& b);

/// Log-scaled 256x256 visualization; pixel (j,i) shows entry (i,j). An
/// all-zero matrix renders black.
Image render_cooc(const CoocMatrix& m);

/// 10*log10(255^2/MSE) in dB; +infinity for identical images.
double psnr(const Image& a, const Image& b);

/// 3x3 mean filter with border replication; output = floor((sum+4)/9).
Image box_smooth(const Image& img);

/// Difference measure of an n x n block: sum over vertical and horizontal
/// neighbor pairs of |difference|^r, in exact integer arithmetic (saturates
/// at uint64 max, far above any usable threshold).
std::uint64_t block_difference(std::span<const std::uint8_t> block, int n, int r);

/// Same measure over an n x n window of an image starting at (x0,y0).
std::uint64_t block_difference_at(const Image& img, int x0, int y0, int n, int r);

} // namespace stego
