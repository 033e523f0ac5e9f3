#include "vidcom/types.hpp"

#include <algorithm>
#include <numeric>

namespace vidcom {

std::size_t BudgetAllocation::total_count() const noexcept {
    return std::accumulate(per_frame_count.begin(), per_frame_count.end(), std::size_t{0});
}

std::size_t CompressedSelection::total_kept() const noexcept {
    std::size_t total = 0;
    for (const auto& frame : kept_indices) total += frame.size();
    return total;
}

std::size_t CompressedSelection::max_kept() const noexcept {
    std::size_t best = 0;
    for (const auto& frame : kept_indices) best = std::max(best, frame.size());
    return best;
}

std::size_t CompressedSelection::frame_offset(std::size_t frame) const noexcept {
    std::size_t offset = 0;
    for (std::size_t t = 0; t < frame; ++t) offset += kept_indices[t].size();
    return offset;
}

std::span<const float> CompressedSelection::token(std::size_t frame, std::size_t slot) const noexcept {
    return {values.data() + (frame_offset(frame) + slot) * dim, dim};
}

}  // namespace vidcom
