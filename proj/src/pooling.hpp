#pragma once

#include <cstddef>
#include <vector>

#include "vidcom/parallel.hpp"
#include "vidcom/token_tensor.hpp"

namespace vidcom::detail {

// Mean of all tokens in frames [first, last). Each channel is summed over
// frames ascending then tokens ascending; channel blocks run in parallel,
// which leaves every per-channel summation order unchanged.
std::vector<double> pool_frames(const TokenTensor& tensor, std::size_t first, std::size_t last, Execution exec);

// Sum of squares of a pooled vector, accumulated in channel order.
double squared_norm(const std::vector<double>& v) noexcept;

// -cosine(token, pool) for every token, with pool norms precomputed.
void negative_cosines(const TokenTensor& tensor, const std::vector<std::vector<double>>& pools,
                      const std::vector<std::size_t>& frame_to_pool, double* out, Execution exec);

}  // namespace vidcom::detail
