#include "stego/segmenter.hpp"

#include "stego/error.hpp"
#include "stego/stats.hpp"

namespace stego {

void SegParams::validate() const {
    if (n < 2) fail(Err::BadParams, "block size n must be at least 2");
    if (m < 2) fail(Err::BadParams, "sub-block size m must be at least 2");
    if (n % m != 0) fail(Err::BadParams, "m must divide n");
    if (threshold < 1) fail(Err::BadParams, "threshold must be positive");
    if (r < 1) fail(Err::BadParams, "exponent r must be at least 1");
}

int flat_code_bits(int m) {
    int cells = m * m;
    int b = 0;
    while ((1 << (b + 1)) <= cells) ++b;
    return b;
}

int flat_chunk_bits(const SegParams& p) {
    return flat_code_bits(p.m) + (p.flat_bits == FlatBits::PositionSign ? 1 : 0);
}

RegionMap classify(const Image& cover, const SegParams& p) {
    p.validate();
    if (cover.width < p.n || cover.height < p.n)
        fail(Err::ImageTooSmall, "cover smaller than one block");

    Image working = p.smooth ? box_smooth(cover) : cover;

    RegionMap map;
    map.params = p;
    map.blocks_x = cover.width / p.n;
    map.blocks_y = cover.height / p.n;
    map.flags.resize(static_cast<std::size_t>(map.blocks_x) * map.blocks_y);

    const std::int64_t blocks = static_cast<std::int64_t>(map.flags.size());
#pragma omp parallel for
    for (std::int64_t b = 0; b < blocks; ++b) {
        int bx = static_cast<int>(b % map.blocks_x);
        int by = static_cast<int>(b / map.blocks_x);
        std::uint64_t d = block_difference_at(working, bx * p.n, by * p.n, p.n, p.r);
        map.flags[b] = d < p.threshold ? 1 : 0;
    }
    return map;
}

Image region_mask_image(const RegionMap& map, int width, int height) {
    Image out(width, height, 128); // edge strips keep mid gray
    const int n = map.params.n;
    for (int by = 0; by < map.blocks_y; ++by) {
        for (int bx = 0; bx < map.blocks_x; ++bx) {
            std::uint8_t v = map.flat(bx, by) ? 255 : 0;
            for (int y = by * n; y < (by + 1) * n; ++y)
                for (int x = bx * n; x < (bx + 1) * n; ++x) out.at(x, y) = v;
        }
    }
    return out;
}

std::uint64_t capacity_bits(const RegionMap& map) {
    const SegParams& p = map.params;
    const std::uint64_t pair_bits = 3ULL * ((static_cast<std::uint64_t>(p.n) * p.n) / 2);
    const std::uint64_t sub_blocks = static_cast<std::uint64_t>(p.n / p.m) * (p.n / p.m);
    const std::uint64_t flat_bits = sub_blocks * flat_chunk_bits(p);

    std::uint64_t total = 0;
    for (auto f : map.flags) total += f ? flat_bits : pair_bits;
    return total;
}

} // namespace stego
