#include "stego/reference.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "stego/error.hpp"

namespace stego::ref {

Histogram histogram(const Image& img) {
    Histogram h;
    for (auto v : img.pixels) ++h.counts[v];
    return h;
}

CoocMatrix cooccurrence(const Image& img, Offset off) {
    if (off.dx == 0 && off.dy == 0) fail(Err::ZeroOffset, "zero offset");
    if (std::abs(off.dx) >= img.width || std::abs(off.dy) >= img.height)
        fail(Err::OffsetTooLarge, "offset exceeds image dimensions");
    CoocMatrix m;
    m.offset = off;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            int x2 = x + off.dx, y2 = y + off.dy;
            if (x2 < 0 || x2 >= img.width || y2 < 0 || y2 >= img.height) continue;
            ++m.at(img.at(x, y), img.at(x2, y2));
        }
    }
    return m;
}

Image box_smooth(const Image& img) {
    Image out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            int sum = 0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) sum += img.at_clamped(x + dx, y + dy);
            out.at(x, y) = static_cast<std::uint8_t>((sum + 4) / 9);
        }
    }
    return out;
}

std::uint64_t squared_error_sum(const Image& a, const Image& b) {
    if (a.width != b.width || a.height != b.height)
        fail(Err::DimensionMismatch, "images differ in size");
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        int d = static_cast<int>(a.pixels[i]) - static_cast<int>(b.pixels[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return sum;
}

std::uint64_t block_difference_at(const Image& img, int x0, int y0, int n, int r) {
    // Straight transcription of the two double sums, kept independent of
    // the pointer/stride kernel in stats.cpp.
    auto B = [&](int i, int j) { return static_cast<int>(img.at(x0 + j - 1, y0 + i - 1)); };
    auto powr = [&](int v) {
        unsigned __int128 acc = 1;
        for (int k = 0; k < r; ++k) acc *= static_cast<unsigned>(v);
        return acc;
    };
    unsigned __int128 d1 = 0, d2 = 0;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) d1 += powr(std::abs(B(i + 1, j) - B(i, j)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) d2 += powr(std::abs(B(i, j + 1) - B(i, j)));
    unsigned __int128 d = d1 + d2;
    const auto max = std::numeric_limits<std::uint64_t>::max();
    return d > max ? max : static_cast<std::uint64_t>(d);
}

RegionMap classify(const Image& cover, const SegParams& p) {
    p.validate();
    if (cover.width < p.n || cover.height < p.n)
        fail(Err::ImageTooSmall, "cover smaller than one block");
    Image working = p.smooth ? ref::box_smooth(cover) : cover;
    RegionMap map;
    map.params = p;
    map.blocks_x = cover.width / p.n;
    map.blocks_y = cover.height / p.n;
    map.flags.resize(static_cast<std::size_t>(map.blocks_x) * map.blocks_y);
    for (int by = 0; by < map.blocks_y; ++by)
        for (int bx = 0; bx < map.blocks_x; ++bx)
            map.flags[static_cast<std::size_t>(by) * map.blocks_x + bx] =
                ref::block_difference_at(working, bx * p.n, by * p.n, p.n, p.r) < p.threshold
                    ? 1
                    : 0;
    return map;
}

} // namespace stego::ref
