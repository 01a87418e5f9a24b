#pragma once

#include <cstdint>
#include <vector>

#include "stego/image.hpp"

namespace stego {

enum class FlatBits {
    PositionOnly, // b bits per flat sub-block, sign chosen by neighborhood
    PositionSign, // b+1 bits, last bit selects the sign
};

/// Segmentation / embedding parameters. Defaults follow the reference
/// configuration: 6x6 blocks, exponent 4, threshold 2500, smoothing on,
/// 3x3 flat sub-blocks.
struct SegParams {
    int n = 6;
    int r = 4;
    std::uint64_t threshold = 2500;
    bool smooth = true;
    int m = 3;
    FlatBits flat_bits = FlatBits::PositionOnly;

    void validate() const; // throws BadParams
};

/// Bits carried by the cell position of an m x m flat sub-block:
/// floor(log2(m^2)).
int flat_code_bits(int m);

/// Per-carrier chunk width in flat blocks (code bits plus the optional
/// sign bit).
int flat_chunk_bits(const SegParams& p);

/// Flat/noisy classification of the complete n x n blocks of a cover.
/// Partial edge strips belong to no block. Pure function of (cover, params);
/// extraction recomputes it from the cover.
struct RegionMap {
    int blocks_x = 0;
    int blocks_y = 0;
    std::vector<std::uint8_t> flags; // row-major, 1 = flat
    SegParams params;

    bool flat(int bx, int by) const {
        return flags[static_cast<std::size_t>(by) * blocks_x + bx] != 0;
    }
    std::size_t block_count() const { return flags.size(); }
};

RegionMap classify(const Image& cover, const SegParams& p);

/// Visualization: flat blocks 255, noisy blocks 0, edge strips 128.
Image region_mask_image(const RegionMap& map, int width, int height);

/// Gross capacity in bits: noisy blocks carry 3*floor(n^2/2), flat blocks
/// (n/m)^2 * chunk width.
std::uint64_t capacity_bits(const RegionMap& map);

} // namespace stego
