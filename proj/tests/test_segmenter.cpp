#include <doctest.h>

#include "stego/error.hpp"
#include "stego/segmenter.hpp"
#include "stego/stats.hpp"
#include "support/synthetic.hpp"

using namespace stego;

namespace {

Image columns_0_255(int w, int h) {
    Image img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.at(x, y) = x % 2 ? 255 : 0;
    return img;
}

} // namespace

TEST_CASE("flat_code_bits") {
    CHECK(flat_code_bits(2) == 2);  // 4 cells -> 4 codes
    CHECK(flat_code_bits(3) == 3);  // 9 cells -> 8 codes, 1 blank
    CHECK(flat_code_bits(4) == 4);  // 16 cells -> 16 codes
    CHECK(flat_code_bits(5) == 4);  // 25 cells -> 16 codes, 9 blanks
}

TEST_CASE("param validation") {
    SegParams p;
    CHECK_NOTHROW(p.validate());
    p.m = 4; // does not divide 6
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("BadParams"), Error);
    p = SegParams{};
    p.n = 1;
    CHECK_THROWS_AS(p.validate(), Error);
    p = SegParams{};
    p.r = 0;
    CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("classify constant and checkerboard covers") {
    SegParams p;

    Image constant(12, 12, 50);
    auto flat_map = classify(constant, p);
    CHECK(flat_map.blocks_x == 2);
    CHECK(flat_map.blocks_y == 2);
    for (auto f : flat_map.flags) CHECK(f == 1);

    auto noisy_map = classify(columns_0_255(12, 12), p);
    for (auto f : noisy_map.flags) CHECK(f == 0);

    Image tiny(5, 5, 0);
    CHECK_THROWS_WITH_AS(classify(tiny, p), doctest::Contains("ImageTooSmall"), Error);
}

TEST_CASE("threshold boundary: d == T is noisy") {
    // build a 2x2-block cover whose d equals T exactly, with smoothing off
    SegParams p;
    p.n = 2;
    p.m = 2;
    p.r = 1;
    p.smooth = false;

    Image img(2, 2, 10);
    img.at(1, 0) = 11;
    img.at(1, 1) = 10;
    // d1 = |10-10| + |10-11| = 1 ; d2 = |11-10| + |10-10| = 1 ; d = 2
    CHECK(block_difference(img.pixels, 2, 1) == 2);

    p.threshold = 2;
    CHECK(classify(img, p).flags[0] == 0); // strict d < T
    p.threshold = 3;
    CHECK(classify(img, p).flags[0] == 1);
}

TEST_CASE("classify is deterministic and monotone in T") {
    auto cover = testsupport::natural_cover(77, 60, 48);
    SegParams p;
    auto a = classify(cover, p);
    auto b = classify(cover, p);
    CHECK(a.flags == b.flags);

    SegParams higher = p;
    higher.threshold = p.threshold * 4;
    auto c = classify(cover, higher);
    for (std::size_t i = 0; i < a.flags.size(); ++i)
        if (a.flags[i]) CHECK(c.flags[i]); // raising T never turns flat into noisy
}

TEST_CASE("smoothing rescues a flat block with one noise pixel") {
    // isolated spike: raw differences of 30 dominate d, smoothed ones of 3
    // stay under the threshold
    Image img(12, 12, 80);
    img.at(3, 3) = 110;
    SegParams with_smooth;
    SegParams without = with_smooth;
    without.smooth = false;
    CHECK(classify(img, with_smooth).flags[0] == 1);
    CHECK(classify(img, without).flags[0] == 0);
}

TEST_CASE("region_mask_image marks strips with 128") {
    auto cover = testsupport::natural_cover(5, 13, 13);
    SegParams p;
    auto map = classify(cover, p);
    auto mask = region_mask_image(map, 13, 13);
    for (int y = 0; y < 13; ++y) CHECK(mask.at(12, y) == 128);
    for (int x = 0; x < 13; ++x) CHECK(mask.at(x, 12) == 128);
    for (int y = 0; y < 12; ++y)
        for (int x = 0; x < 12; ++x) {
            auto v = mask.at(x, y);
            CHECK((v == 0 || v == 255));
        }
}

TEST_CASE("capacity formulas") {
    SegParams p;

    auto noisy = classify(columns_0_255(12, 12), p);
    CHECK(capacity_bits(noisy) == 216); // 4 blocks * 18 pairs * 3 bits = 1.5 bpp

    Image constant(12, 12, 50);
    auto flat = classify(constant, p);
    CHECK(capacity_bits(flat) == 48); // 4 blocks * 4 sub-blocks * 3 bits

    SegParams sign = p;
    sign.flat_bits = FlatBits::PositionSign;
    auto flat_sign = classify(constant, sign);
    CHECK(capacity_bits(flat_sign) == 64);

    // no complete block -> no capacity; classify itself refuses such covers
    RegionMap empty;
    empty.params = p;
    CHECK(capacity_bits(empty) == 0);
    CHECK_THROWS_AS(classify(Image(5, 5, 0), p), Error);
}

TEST_CASE("position+sign capacity dominates position-only") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto cover = testsupport::natural_cover(seed, 48, 48);
        SegParams pos;
        SegParams sign;
        sign.flat_bits = FlatBits::PositionSign;
        auto cap_pos = capacity_bits(classify(cover, pos));
        auto cap_sign = capacity_bits(classify(cover, sign));
        CHECK(cap_sign >= cap_pos);
        std::size_t flats = 0;
        for (auto f : classify(cover, pos).flags) flats += f;
        if (flats == 0) CHECK(cap_sign == cap_pos);
        else CHECK(cap_sign > cap_pos);
    }
}

TEST_CASE("all-noisy capacity is exactly 1.5 bpp over complete blocks") {
    auto map = classify(columns_0_255(24, 18), SegParams{});
    CHECK(capacity_bits(map) == map.block_count() * 36 * 3 / 2);
}
