#include "stego/stats.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "stego/error.hpp"

namespace stego {

namespace {

// |a-b|^r with unsigned 128-bit accumulation; callers saturate the total.
unsigned __int128 diff_pow(int a, int b, int r) {
    unsigned __int128 base = static_cast<unsigned>(std::abs(a - b));
    unsigned __int128 acc = 1;
    for (int i = 0; i < r; ++i) acc *= base;
    return acc;
}

std::uint64_t saturate_u64(unsigned __int128 v) {
    const auto max = std::numeric_limits<std::uint64_t>::max();
    return v > max ? max : static_cast<std::uint64_t>(v);
}

std::uint64_t block_difference_core(const std::uint8_t* block, int stride, int n, int r) {
    unsigned __int128 d = 0;
    // vertical neighbors (d1), then horizontal (d2)
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < n; ++j)
            d += diff_pow(block[(i + 1) * stride + j], block[i * stride + j], r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < n; ++j)
            d += diff_pow(block[i * stride + j + 1], block[i * stride + j], r);
    return saturate_u64(d);
}

} // namespace

std::uint64_t CoocMatrix::total() const {
    std::uint64_t t = 0;
    for (auto e : entries) t += e;
    return t;
}

Histogram histogram(const Image& img) {
    Histogram h;
    const std::uint8_t* px = img.pixels.data();
    const std::int64_t count = static_cast<std::int64_t>(img.pixels.size());
#pragma omp parallel
    {
        std::array<std::uint64_t, 256> local{};
#pragma omp for nowait
        for (std::int64_t i = 0; i < count; ++i) ++local[px[i]];
#pragma omp critical(stego_histogram_merge)
        for (int v = 0; v < 256; ++v) h.counts[v] += local[v];
    }
    return h;
}

CoocMatrix cooccurrence(const Image& img, Offset off) {
    if (off.dx == 0 && off.dy == 0)
        fail(Err::ZeroOffset, "co-occurrence offset must be nonzero");
    if (std::abs(off.dx) >= img.width || std::abs(off.dy) >= img.height)
        fail(Err::OffsetTooLarge, "offset exceeds image dimensions");

    CoocMatrix m;
    m.offset = off;
    const int x_lo = off.dx < 0 ? -off.dx : 0;
    const int x_hi = off.dx > 0 ? img.width - off.dx : img.width;
    const int y_lo = off.dy < 0 ? -off.dy : 0;
    const int y_hi = off.dy > 0 ? img.height - off.dy : img.height;

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(256 * 256, 0);
#pragma omp for nowait
        for (int y = y_lo; y < y_hi; ++y) {
            for (int x = x_lo; x < x_hi; ++x) {
                int i = img.at(x, y);
                int j = img.at(x + off.dx, y + off.dy);
                ++local[i * 256 + j];
            }
        }
#pragma omp critical(stego_cooc_merge)
        for (std::size_t k = 0; k < local.size(); ++k) m.entries[k] += local[k];
    }
    return m;
}

std::uint64_t cooc_l1_distance(const CoocMatrix& a, const CoocMatrix& b) {
    if (a.offset.dx != b.offset.dx || a.offset.dy != b.offset.dy)
        fail(Err::OffsetMismatch, "matrices computed for different offsets");
    std::uint64_t sum = 0;
    const std::int64_t cells = 256 * 256;
#pragma omp parallel for reduction(+ : sum)
    for (std::int64_t k = 0; k < cells; ++k) {
        std::uint64_t x = a.entries[k], y = b.entries[k];
        sum += x > y ? x - y : y - x;
    }
    return sum;
}

Image render_cooc(const CoocMatrix& m) {
    std::uint64_t max_entry = 0;
    for (auto e : m.entries) max_entry = std::max(max_entry, e);

    Image img(256, 256);
    if (max_entry == 0) return img;
    const double denom = std::log1p(static_cast<double>(max_entry));
    for (int i = 0; i < 256; ++i) {
        for (int j = 0; j < 256; ++j) {
            double v = std::log1p(static_cast<double>(m.at(i, j))) / denom;
            img.at(j, i) = static_cast<std::uint8_t>(std::lround(255.0 * v));
        }
    }
    return img;
}

double psnr(const Image& a, const Image& b) {
    if (a.width != b.width || a.height != b.height)
        fail(Err::DimensionMismatch, "psnr needs equal dimensions");
    const std::int64_t count = static_cast<std::int64_t>(a.pixels.size());
    std::uint64_t sum = 0;
#pragma omp parallel for reduction(+ : sum)
    for (std::int64_t i = 0; i < count; ++i) {
        int d = static_cast<int>(a.pixels[i]) - static_cast<int>(b.pixels[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    if (sum == 0) return std::numeric_limits<double>::infinity();
    double mse = static_cast<double>(sum) / static_cast<double>(count);
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

Image box_smooth(const Image& img) {
    Image out(img.width, img.height);
#pragma omp parallel for
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

std::uint64_t block_difference(std::span<const std::uint8_t> block, int n, int r) {
    if (n < 2) fail(Err::BlockTooSmall, "block size must be at least 2");
    if (block.size() != static_cast<std::size_t>(n) * n)
        fail(Err::BadParams, "block span does not hold n*n values");
    if (r < 1) fail(Err::BadParams, "exponent r must be at least 1");
    return block_difference_core(block.data(), n, n, r);
}

std::uint64_t block_difference_at(const Image& img, int x0, int y0, int n, int r) {
    if (n < 2) fail(Err::BlockTooSmall, "block size must be at least 2");
    if (x0 < 0 || y0 < 0 || x0 + n > img.width || y0 + n > img.height)
        fail(Err::BadParams, "block window outside the image");
    return block_difference_core(img.pixels.data() + static_cast<std::size_t>(y0) * img.width + x0,
                                 img.width, n, r);
}

} // namespace stego
