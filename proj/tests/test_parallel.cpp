#include <doctest.h>

#include <cmath>

#include "stego/reference.hpp"
#include "stego/steganalysis.hpp"
#include "support/synthetic.hpp"

using namespace stego;

// The shipping kernels run under OpenMP when the build enables it; every
// result must stay bit-identical to the serial reference.

TEST_CASE("parallel kernels match the serial reference exactly") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto img = testsupport::natural_cover(seed, 133, 97);

        CHECK(histogram(img).counts == ref::histogram(img).counts);
        CHECK(box_smooth(img) == ref::box_smooth(img));

        for (Offset off : {Offset{1, 0}, Offset{0, 1}, Offset{-1, 1}, Offset{2, -3}}) {
            CHECK(cooccurrence(img, off).entries == ref::cooccurrence(img, off).entries);
        }

        auto other = testsupport::natural_cover(seed + 100, 133, 97);
        const auto sum = ref::squared_error_sum(img, other);
        const double expected =
            10.0 * std::log10(255.0 * 255.0 * img.count() / static_cast<double>(sum));
        CHECK(psnr(img, other) == doctest::Approx(expected).epsilon(1e-12));

        SegParams p;
        CHECK(classify(img, p).flags == ref::classify(img, p).flags);
    }
}

TEST_CASE("parallel evaluation is repeatable") {
    auto img = testsupport::natural_cover(9, 257, 129);
    auto first = cooccurrence(img, {1, 0});
    auto again = cooccurrence(img, {1, 0});
    CHECK(first.entries == again.entries);

    auto rep1 = rs_attack(img);
    auto rep2 = rs_attack(img);
    CHECK(rep1.estimate == rep2.estimate);
    CHECK(rep1.details == rep2.details);

    SegParams p;
    CHECK(classify(img, p).flags == classify(img, p).flags);
}
