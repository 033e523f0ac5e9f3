#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace vidcom::detail {

// Shared by cosine() and the fused kernels so every path produces the same bits.
inline double finish_cosine(double dot, double sq_norm_a, double sq_norm_b) noexcept {
    if (sq_norm_a == 0.0 || sq_norm_b == 0.0) {
        return 0.0;
    }
    const double value = dot / (std::sqrt(sq_norm_a) * std::sqrt(sq_norm_b));
    return std::clamp(value, -1.0, 1.0);
}

template <typename A, typename B>
inline double cosine_kernel(const A* a, const B* b, std::size_t n) noexcept {
    double dot = 0.0;
    double sq_a = 0.0;
    double sq_b = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        const double x = static_cast<double>(a[c]);
        const double y = static_cast<double>(b[c]);
        dot += x * y;
        sq_a += x * x;
        sq_b += y * y;
    }
    return finish_cosine(dot, sq_a, sq_b);
}

}  // namespace vidcom::detail
