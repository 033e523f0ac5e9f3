// Plain-loop version of the full pipeline. No OpenMP, no fused kernels:
// every score goes through vidcom::cosine() directly.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vidcom/frame_adjustment.hpp"
#include "vidcom/token_compression.hpp"

namespace vidcom::serial {

namespace {

std::vector<double> mean_of_frames(const TokenTensor& x, std::size_t first, std::size_t last) {
    std::vector<double> sum(x.dim(), 0.0);
    for (std::size_t t = first; t < last; ++t) {
        for (std::size_t m = 0; m < x.tokens(); ++m) {
            const auto token = x.token(t, m);
            for (std::size_t c = 0; c < x.dim(); ++c) sum[c] += static_cast<double>(token[c]);
        }
    }
    const auto count = static_cast<double>((last - first) * x.tokens());
    for (double& v : sum) v /= count;
    return sum;
}

}  // namespace

CompressionResult compress(const TokenTensor& x, const RetentionConfig& config) {
    validate(config);
    if (config.min_tokens_per_frame > x.tokens()) {
        throw Error(ErrorKind::InvalidConfig, "min_tokens_per_frame exceeds tokens per frame");
    }
    const std::size_t frames = x.frames();
    const std::size_t tokens = x.tokens();
    const std::size_t width = config.window.value_or(frames);
    if (width < 1 || width > frames) throw Error(ErrorKind::WindowOutOfRange, "window out of range");

    CompressionResult out;
    auto& report = out.scores;
    report.video_score = ScoreMatrix(frames, tokens);
    report.frame_score = ScoreMatrix(frames, tokens);

    for (std::size_t first = 0; first < frames; first += width) {
        const std::size_t last = std::min(frames, first + width);
        const auto pool = mean_of_frames(x, first, last);
        for (std::size_t t = first; t < last; ++t) {
            for (std::size_t m = 0; m < tokens; ++m) report.video_score.at(t, m) = -cosine(x.token(t, m), pool);
        }
    }

    report.frame_uniqueness = frame_uniqueness(report.video_score, config.frame_aggregation);
    if (config.adjustment == Adjustment::Adaptive) {
        const auto weights = softmax_weights(report.frame_uniqueness, config.temperature, config.epsilon);
        out.allocation = allocate(weights, config.ratio, tokens, config.min_tokens_per_frame);
    } else {
        out.allocation = uniform_allocation(frames, config.ratio, tokens, config.min_tokens_per_frame);
    }
    out.allocation.frame_uniqueness = report.frame_uniqueness;
    report.frame_weight = out.allocation.frame_weight;

    for (std::size_t t = 0; t < frames; ++t) {
        const auto pool = mean_of_frames(x, t, t + 1);
        for (std::size_t m = 0; m < tokens; ++m) report.frame_score.at(t, m) = -cosine(x.token(t, m), pool);
    }
    report.combined_score =
        combine_scores(report.frame_score, report.video_score, config.score_mode, config.alpha, config.beta);

    std::vector<std::vector<std::uint32_t>> kept(frames);
    for (std::size_t t = 0; t < frames; ++t) {
        const auto row = report.combined_score.row(t);
        std::vector<std::uint32_t> order(tokens);
        std::iota(order.begin(), order.end(), std::uint32_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return row[a] > row[b]; });
        order.resize(out.allocation.per_frame_count[t]);
        std::sort(order.begin(), order.end());
        kept[t] = std::move(order);
    }
    out.selection = gather(x, std::move(kept));
    return out;
}

}  // namespace vidcom::serial
