#pragma once

#include "stego/segmenter.hpp"
#include "stego/stats.hpp"

// Plain serial implementations of the data-parallel kernels. The public
// functions in stats.hpp/segmenter.hpp run the OpenMP versions when the
// build enables it; these stay around so tests can pin exact equality and
// the bench tool can measure the speedup.
namespace stego::ref {

Histogram histogram(const Image& img);
CoocMatrix cooccurrence(const Image& img, Offset off);
Image box_smooth(const Image& img);
std::uint64_t squared_error_sum(const Image& a, const Image& b);
std::uint64_t block_difference_at(const Image& img, int x0, int y0, int n, int r);
RegionMap classify(const Image& cover, const SegParams& p);

} // namespace stego::ref
