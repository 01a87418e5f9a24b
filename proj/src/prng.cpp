#include "stego/prng.hpp"

#include <numeric>
#include <utility>

namespace stego {

std::vector<std::uint32_t> derive_permutation(Prng& rng, std::uint32_t k) {
    std::vector<std::uint32_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::uint32_t i = k - 1; i >= 1; --i) {
        std::uint32_t j = rng.next_u32() % (i + 1);
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

} // namespace stego
