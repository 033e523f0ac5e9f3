#include "pooling.hpp"

#include <algorithm>

#include "cosine_detail.hpp"

namespace vidcom::detail {

namespace {

constexpr std::size_t kChannelBlock = 64;

}  // namespace

std::vector<double> pool_frames(const TokenTensor& tensor, std::size_t first, std::size_t last, Execution exec) {
    const std::size_t dim = tensor.dim();
    const std::size_t tokens = tensor.tokens();
    const float* data = tensor.data().data();
    std::vector<double> sum(dim, 0.0);
    const auto blocks = static_cast<long>((dim + kChannelBlock - 1) / kChannelBlock);

#pragma omp parallel for schedule(static) num_threads(exec.resolved_threads())
    for (long block = 0; block < blocks; ++block) {
        const std::size_t c0 = static_cast<std::size_t>(block) * kChannelBlock;
        const std::size_t c1 = std::min(dim, c0 + kChannelBlock);
        double* acc = sum.data();
        for (std::size_t t = first; t < last; ++t) {
            for (std::size_t m = 0; m < tokens; ++m) {
                const float* x = data + (t * tokens + m) * dim;
                for (std::size_t c = c0; c < c1; ++c) {
                    acc[c] += static_cast<double>(x[c]);
                }
            }
        }
    }

    const auto count = static_cast<double>((last - first) * tokens);
    for (double& v : sum) v /= count;
    return sum;
}

double squared_norm(const std::vector<double>& v) noexcept {
    double s = 0.0;
    for (double y : v) s += y * y;
    return s;
}

void negative_cosines(const TokenTensor& tensor, const std::vector<std::vector<double>>& pools,
                      const std::vector<std::size_t>& frame_to_pool, double* out, Execution exec) {
    std::vector<double> pool_sq(pools.size());
    for (std::size_t p = 0; p < pools.size(); ++p) pool_sq[p] = squared_norm(pools[p]);

    const std::size_t dim = tensor.dim();
    const std::size_t tokens = tensor.tokens();
    const float* data = tensor.data().data();
    const auto total = static_cast<long>(tensor.shape().token_count());

#pragma omp parallel for schedule(static) num_threads(exec.resolved_threads())
    for (long i = 0; i < total; ++i) {
        const auto flat = static_cast<std::size_t>(i);
        const std::size_t pool = frame_to_pool[flat / tokens];
        const float* x = data + flat * dim;
        const double* g = pools[pool].data();
        double dot = 0.0;
        double sq = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            const double v = static_cast<double>(x[c]);
            dot += v * g[c];
            sq += v * v;
        }
        out[flat] = -finish_cosine(dot, sq, pool_sq[pool]);
    }
}

}  // namespace vidcom::detail
