#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vidcom::detail {

// std::mt19937_64 output is fixed by the standard; the distributions in
// <random> are not, so the few we need are written out here.

// Uniform integer in [0, bound), bound > 0, by rejection of the biased tail.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = gen();
        if (x >= threshold) return x % bound;
    }
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller; one draw per call, the sine branch is discarded.
inline double standard_normal(std::mt19937_64& gen) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const double u1 = 1.0 - uniform_unit(gen);  // (0, 1]
    const double u2 = uniform_unit(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace vidcom::detail
