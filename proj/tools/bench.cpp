// Times the OpenMP kernels against their serial reference implementations
// on a synthetic image and checks the results match. Usage:
//   stego_bench [size] [reps]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stego/image.hpp"
#include "stego/prng.hpp"
#include "stego/reference.hpp"
#include "stego/segmenter.hpp"
#include "stego/stats.hpp"

using namespace stego;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

Image make_image(int size) {
    Image img(size, size);
    Prng rng(StegoKey{12345});
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            int base = (x / 3 + y / 2) % 200;
            img.at(x, y) = static_cast<std::uint8_t>((base + (rng.next_u32() % 17)) & 0xFF);
        }
    return img;
}

template <typename SerialFn, typename ParallelFn>
void bench(const char* name, int reps, SerialFn serial, ParallelFn parallel) {
    // warm up and correctness check
    auto expect = serial();
    auto got = parallel();
    const bool ok = expect == got;

    double t0 = now_ms();
    for (int i = 0; i < reps; ++i) serial();
    double serial_ms = (now_ms() - t0) / reps;

    t0 = now_ms();
    for (int i = 0; i < reps; ++i) parallel();
    double parallel_ms = (now_ms() - t0) / reps;

    std::printf("%-14s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, ok ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const int size = argc > 1 ? std::atoi(argv[1]) : 2048;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;

    const Image img = make_image(size);
    Image other = img;
    other.at(size / 2, size / 2) ^= 1;

#ifdef _OPENMP
    std::printf("image %dx%d, %d reps, %d OpenMP threads\n", size, size, reps,
                omp_get_max_threads());
#else
    std::printf("image %dx%d, %d reps, OpenMP disabled\n", size, size, reps);
#endif
    std::printf("%-14s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    bench("histogram", reps,
          [&] { return ref::histogram(img).counts; },
          [&] { return histogram(img).counts; });

    bench("cooccurrence", reps,
          [&] { return ref::cooccurrence(img, {1, 0}).entries; },
          [&] { return cooccurrence(img, {1, 0}).entries; });

    bench("box_smooth", reps,
          [&] { return ref::box_smooth(img); },
          [&] { return box_smooth(img); });

    bench("mse_sum", reps,
          [&] { return ref::squared_error_sum(img, other); },
          [&] {
              double db = psnr(img, other);
              // invert psnr back to the integer sum for the comparison
              double mse = 255.0 * 255.0 / std::pow(10.0, db / 10.0);
              return static_cast<std::uint64_t>(mse * img.count() + 0.5);
          });

    SegParams p;
    bench("classify", reps,
          [&] { return ref::classify(img, p).flags; },
          [&] { return classify(img, p).flags; });

    return 0;
}
