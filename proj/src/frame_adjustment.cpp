#include "vidcom/frame_adjustment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pooling.hpp"

namespace vidcom {

double budget_ceil(double value) noexcept { return std::ceil(value - kCeilSlack); }

namespace {

std::size_t clamp_count(double raw, std::size_t min_tokens, std::size_t tokens_per_frame) {
    const double k = budget_ceil(raw);
    if (!(k >= static_cast<double>(min_tokens))) return min_tokens;
    if (k >= static_cast<double>(tokens_per_frame)) return tokens_per_frame;
    return static_cast<std::size_t>(k);
}

}  // namespace

PooledVectors global_pool(const TokenTensor& tensor, const Window& window, Execution exec) {
    const std::size_t frames = tensor.frames();
    std::size_t width = frames;
    if (window) {
        if (*window < 1 || *window > frames) {
            throw Error(ErrorKind::WindowOutOfRange, "window " + std::to_string(*window) + " outside [1, " +
                                                         std::to_string(frames) + "]");
        }
        width = *window;
    }

    PooledVectors out;
    out.frame_to_pool.resize(frames);
    for (std::size_t first = 0; first < frames; first += width) {
        const std::size_t last = std::min(frames, first + width);
        for (std::size_t t = first; t < last; ++t) out.frame_to_pool[t] = out.vectors.size();
        out.vectors.push_back(detail::pool_frames(tensor, first, last, exec));
    }
    return out;
}

ScoreMatrix video_uniqueness(const TokenTensor& tensor, const PooledVectors& pools, Execution exec) {
    if (pools.frame_to_pool.size() != tensor.frames() ||
        (!pools.vectors.empty() && pools.vectors.front().size() != tensor.dim())) {
        throw Error(ErrorKind::ShapeMismatch, "pools do not match tensor");
    }
    ScoreMatrix scores(tensor.frames(), tensor.tokens());
    detail::negative_cosines(tensor, pools.vectors, pools.frame_to_pool, &scores.at(0, 0), exec);
    return scores;
}

std::vector<double> frame_uniqueness(const ScoreMatrix& video_scores, FrameAggregation aggregation) {
    std::vector<double> out(video_scores.frames());
    for (std::size_t t = 0; t < video_scores.frames(); ++t) {
        const auto row = video_scores.row(t);
        if (aggregation == FrameAggregation::Max) {
            out[t] = *std::max_element(row.begin(), row.end());
        } else {
            double sum = 0.0;
            for (double v : row) sum += v;
            out[t] = sum / static_cast<double>(row.size());
        }
    }
    return out;
}

std::vector<double> softmax_weights(std::span<const double> uniqueness, double temperature, double epsilon) {
    std::vector<double> out(uniqueness.size());
    if (uniqueness.empty()) return out;
    const double peak = *std::max_element(uniqueness.begin(), uniqueness.end());
    double total = 0.0;
    for (std::size_t t = 0; t < uniqueness.size(); ++t) {
        out[t] = std::exp((uniqueness[t] - peak) / temperature);
        total += out[t];
    }
    const double denominator = total + epsilon;
    for (double& w : out) w /= denominator;
    return out;
}

BudgetAllocation allocate(std::span<const double> weights, double ratio, std::size_t tokens_per_frame,
                          std::size_t min_tokens) {
    const std::size_t frames = weights.size();
    const double inv_frames = 1.0 / static_cast<double>(frames);
    const auto m = static_cast<double>(tokens_per_frame);

    BudgetAllocation out;
    out.per_frame_ratio.resize(frames);
    out.per_frame_count.resize(frames);
    out.frame_weight.assign(weights.begin(), weights.end());
    for (std::size_t t = 0; t < frames; ++t) {
        const double r = ratio * (1.0 + weights[t] - inv_frames);
        out.per_frame_ratio[t] = r;
        out.per_frame_count[t] = ratio >= 1.0 ? tokens_per_frame : clamp_count(r * m, min_tokens, tokens_per_frame);
    }
    return out;
}

BudgetAllocation uniform_allocation(std::size_t frames, double ratio, std::size_t tokens_per_frame,
                                    std::size_t min_tokens) {
    BudgetAllocation out;
    out.per_frame_ratio.assign(frames, ratio);
    out.per_frame_count.assign(frames,
                               clamp_count(ratio * static_cast<double>(tokens_per_frame), min_tokens, tokens_per_frame));
    out.frame_weight.assign(frames, 1.0 / static_cast<double>(frames));
    return out;
}

FrameAdjustment adjust_frames(const TokenTensor& tensor, const RetentionConfig& config, Execution exec) {
    validate(config);
    if (config.min_tokens_per_frame > tensor.tokens()) {
        throw Error(ErrorKind::InvalidConfig, "min_tokens_per_frame exceeds tokens per frame");
    }

    FrameAdjustment out;
    out.pools = global_pool(tensor, config.window, exec);
    out.video_scores = video_uniqueness(tensor, out.pools, exec);
    auto uniqueness = frame_uniqueness(out.video_scores, config.frame_aggregation);

    if (config.adjustment == Adjustment::Adaptive) {
        const auto weights = softmax_weights(uniqueness, config.temperature, config.epsilon);
        out.allocation = allocate(weights, config.ratio, tensor.tokens(), config.min_tokens_per_frame);
    } else {
        out.allocation =
            uniform_allocation(tensor.frames(), config.ratio, tensor.tokens(), config.min_tokens_per_frame);
    }
    out.allocation.frame_uniqueness = std::move(uniqueness);
    return out;
}

}  // namespace vidcom
