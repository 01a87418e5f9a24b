#include <doctest.h>

#include <algorithm>

#include "stego/bitstream.hpp"
#include "stego/prng.hpp"

using namespace stego;

TEST_CASE("zero seed maps to the golden-ratio constant") {
    Prng rng(StegoKey{0});
    CHECK(rng.state() == 0x9E3779B97F4A7C15ULL);
}

TEST_CASE("xorshift64* golden outputs for seed 1") {
    // frozen from two independent implementations of the recurrence
    Prng rng(StegoKey{1});
    CHECK(rng.next_u32() == 0x47E4CE4Bu);
    CHECK(rng.next_u32() == 0xABCFA6A8u);
    CHECK(rng.next_u32() == 0xB9D10D8Fu);
}

TEST_CASE("same seed, same stream") {
    Prng a(StegoKey{987654321});
    Prng b(StegoKey{987654321});
    for (int i = 0; i < 100; ++i) CHECK(a.next_u32() == b.next_u32());
}

TEST_CASE("derive_permutation") {
    SUBCASE("k=1 is identity and consumes nothing") {
        Prng rng(StegoKey{5});
        const auto before = rng.state();
        auto p = derive_permutation(rng, 1);
        CHECK(p == std::vector<std::uint32_t>{0});
        CHECK(rng.state() == before);
    }
    SUBCASE("k=9 yields a bijection for many seeds") {
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            Prng rng(StegoKey{seed});
            auto p = derive_permutation(rng, 9);
            auto sorted = p;
            std::sort(sorted.begin(), sorted.end());
            for (std::uint32_t i = 0; i < 9; ++i) CHECK(sorted[i] == i);
        }
    }
    SUBCASE("consumes exactly k-1 outputs") {
        Prng a(StegoKey{42});
        Prng b(StegoKey{42});
        derive_permutation(a, 9);
        for (int i = 0; i < 8; ++i) b.next_u32();
        CHECK(a.state() == b.state());
    }
}

TEST_CASE("frame reader produces header then payload then zero padding") {
    std::vector<std::uint8_t> payload{0xAB};
    FrameReader r(payload);
    CHECK(r.total_bits() == 40);
    CHECK(r.take(32) == 1u); // byte count big-endian
    CHECK(r.take(4) == 0xAu);
    CHECK(!r.done());
    CHECK(r.take(4) == 0xBu);
    CHECK(r.done());
    CHECK(r.take(7) == 0u); // tail padding
}

TEST_CASE("frame collector reassembles chunks") {
    std::vector<std::uint8_t> payload{0x12, 0x34};
    FrameReader r(payload);
    FrameCollector c;
    while (!c.bit_count() || c.bit_count() < r.total_bits()) c.push(r.take(3), 3);
    CHECK(c.header() == 2u);
    CHECK(c.payload(2) == payload);
}
