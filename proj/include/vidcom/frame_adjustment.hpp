#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vidcom/config.hpp"
#include "vidcom/parallel.hpp"
#include "vidcom/token_tensor.hpp"
#include "vidcom/types.hpp"

// Stage 1: per-frame budget allocation from video-level token uniqueness.
namespace vidcom {

/// Products like 0.3 * 10 land a few ulps above the integer they denote;
/// token counts are ceil(value - kCeilSlack) so such noise does not add a
/// token. Shared by every policy that turns a ratio into a count.
inline constexpr double kCeilSlack = 1e-9;
double budget_ceil(double value) noexcept;

/// Mean-pools tokens into video summaries. A global window yields one vector
/// over all frames; window w splits frames into contiguous chunks
/// [0, w), [w, 2w), ... and pools each chunk. window == frames is
/// bit-identical to the global pool. Throws WindowOutOfRange.
PooledVectors global_pool(const TokenTensor& tensor, const Window& window, Execution exec = {});

/// u_video[t][m] = -cosine(x[t][m], pool(t)).
ScoreMatrix video_uniqueness(const TokenTensor& tensor, const PooledVectors& pools, Execution exec = {});

/// Per-frame mean (default) or max of the video uniqueness scores.
std::vector<double> frame_uniqueness(const ScoreMatrix& video_scores, FrameAggregation aggregation);

/// Max-shifted, temperature-scaled softmax with epsilon in the denominator:
/// sigma_t = exp((u_t - max u) / tau) / (sum_l exp((u_l - max u) / tau) + eps).
std::vector<double> softmax_weights(std::span<const double> uniqueness, double temperature, double epsilon);

/// r_t = R * (1 + sigma_t - 1/T), k_t = min(M, max(min_tokens, budget_ceil(r_t * M))).
/// R = 1 is the no-compression setting: every k_t is M while r_t still follows the formula.
/// frame_uniqueness is left empty; callers fill it in.
BudgetAllocation allocate(std::span<const double> weights, double ratio, std::size_t tokens_per_frame,
                          std::size_t min_tokens);

/// Fixed ratio R for every frame (no adjustment); sigma_t is reported as 1/T.
BudgetAllocation uniform_allocation(std::size_t frames, double ratio, std::size_t tokens_per_frame,
                                    std::size_t min_tokens);

struct FrameAdjustment {
    PooledVectors pools;
    ScoreMatrix video_scores;
    BudgetAllocation allocation;
};

/// Runs the whole stage: pooling, video uniqueness, frame uniqueness, and
/// either softmax allocation or the uniform ratio.
FrameAdjustment adjust_frames(const TokenTensor& tensor, const RetentionConfig& config, Execution exec = {});

}  // namespace vidcom
