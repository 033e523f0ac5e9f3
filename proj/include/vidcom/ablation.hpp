#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vidcom/config.hpp"
#include "vidcom/parallel.hpp"
#include "vidcom/policies.hpp"
#include "vidcom/token_tensor.hpp"

namespace vidcom {

struct AblationRow {
    std::string label;
    Policy policy;
    std::size_t total_kept = 0;
    std::size_t budget_spread = 0;  // max k_t - min k_t
    double jaccard = 0.0;           // kept (frame, index) pairs vs. the baseline row
};

/// Every score mode (including the weighted combinations u_f + 2 u_v and
/// 2 u_f + u_v), both aggregations, both adjustments, and the windows
/// {global} + {4, 8, 16 below T}, all at base.ratio. A random_drop row with
/// `seed` is appended. Row 0 is the default configuration and the Jaccard
/// reference.
std::vector<AblationRow> run_ablation(const TokenTensor& tensor, const RetentionConfig& base, std::uint64_t seed,
                                      Execution exec = {});

std::string format_ablation(const std::vector<AblationRow>& rows);

/// |A n B| / |A u B| over (frame, index) pairs; 1.0 when both are empty.
double selection_jaccard(const CompressedSelection& a, const CompressedSelection& b);

}  // namespace vidcom
