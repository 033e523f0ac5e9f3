#include "vidcom/token_compression.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>
#include <utility>

#include "pooling.hpp"
#include "vidcom/frame_adjustment.hpp"

namespace vidcom {

PooledVectors frame_pool(const TokenTensor& tensor, Execution exec) {
    const std::size_t frames = tensor.frames();
    const std::size_t tokens = tensor.tokens();
    const std::size_t dim = tensor.dim();

    PooledVectors out;
    out.vectors.assign(frames, std::vector<double>(dim, 0.0));
    out.frame_to_pool.resize(frames);
    std::iota(out.frame_to_pool.begin(), out.frame_to_pool.end(), std::size_t{0});

#pragma omp parallel for schedule(static) num_threads(exec.resolved_threads())
    for (long ti = 0; ti < static_cast<long>(frames); ++ti) {
        const auto t = static_cast<std::size_t>(ti);
        double* acc = out.vectors[t].data();
        const float* frame = tensor.frame(t).data();
        for (std::size_t m = 0; m < tokens; ++m) {
            const float* x = frame + m * dim;
            for (std::size_t c = 0; c < dim; ++c) acc[c] += static_cast<double>(x[c]);
        }
        const auto count = static_cast<double>(tokens);
        for (std::size_t c = 0; c < dim; ++c) acc[c] /= count;
    }
    return out;
}

ScoreMatrix frame_token_uniqueness(const TokenTensor& tensor, const PooledVectors& frame_pools, Execution exec) {
    if (frame_pools.vectors.size() != tensor.frames() || frame_pools.frame_to_pool.size() != tensor.frames()) {
        throw Error(ErrorKind::ShapeMismatch, "expected one pool per frame");
    }
    ScoreMatrix scores(tensor.frames(), tensor.tokens());
    detail::negative_cosines(tensor, frame_pools.vectors, frame_pools.frame_to_pool, &scores.at(0, 0), exec);
    return scores;
}

ScoreMatrix combine_scores(const ScoreMatrix& frame_scores, const ScoreMatrix& video_scores, ScoreMode mode,
                           double alpha, double beta) {
    if (frame_scores.frames() != video_scores.frames() || frame_scores.tokens() != video_scores.tokens()) {
        throw Error(ErrorKind::ShapeMismatch, "frame and video score matrices differ in shape");
    }
    ScoreMatrix out(frame_scores.frames(), frame_scores.tokens());
    for (std::size_t t = 0; t < out.frames(); ++t) {
        for (std::size_t m = 0; m < out.tokens(); ++m) {
            const double uf = frame_scores.at(t, m);
            const double uv = video_scores.at(t, m);
            double u = 0.0;
            switch (mode) {
                case ScoreMode::Combined: u = alpha * uf + beta * uv; break;
                case ScoreMode::FrameOnly: u = uf; break;
                case ScoreMode::VideoOnly: u = uv; break;
                case ScoreMode::PositiveFrame: u = -uf; break;
                case ScoreMode::PositiveVideo: u = -uv; break;
            }
            out.at(t, m) = u;
        }
    }
    return out;
}

std::vector<std::uint32_t> topk_select(std::span<const double> scores, std::size_t k) {
    if (k > scores.size()) {
        throw Error(ErrorKind::KExceedsM,
                    "k=" + std::to_string(k) + " exceeds " + std::to_string(scores.size()) + " candidates");
    }
    std::vector<std::uint32_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::uint32_t{0});
    if (k < scores.size()) {
        // Strict total order: higher score first, lower index on ties.
        auto better = [&](std::uint32_t a, std::uint32_t b) {
            return scores[a] > scores[b] || (scores[a] == scores[b] && a < b);
        };
        std::nth_element(order.begin(), order.begin() + static_cast<long>(k), order.end(), better);
        order.resize(k);
        std::sort(order.begin(), order.end());
    }
    return order;
}

CompressedSelection gather(const TokenTensor& tensor, std::vector<std::vector<std::uint32_t>> kept_indices) {
    CompressedSelection out;
    out.dim = tensor.dim();
    out.kept_indices = std::move(kept_indices);
    out.values.resize(out.total_kept() * out.dim);
    float* dst = out.values.data();
    for (std::size_t t = 0; t < out.kept_indices.size(); ++t) {
        for (std::uint32_t m : out.kept_indices[t]) {
            const auto src = tensor.token(t, m);
            std::memcpy(dst, src.data(), src.size_bytes());
            dst += out.dim;
        }
    }
    return out;
}

CompressionResult compress(const TokenTensor& tensor, const RetentionConfig& config, Execution exec) {
    auto stage1 = adjust_frames(tensor, config, exec);

    const auto pools = frame_pool(tensor, exec);
    auto frame_scores = frame_token_uniqueness(tensor, pools, exec);
    auto combined = combine_scores(frame_scores, stage1.video_scores, config.score_mode, config.alpha, config.beta);

    const std::size_t frames = tensor.frames();
    std::vector<std::vector<std::uint32_t>> kept(frames);
#pragma omp parallel for schedule(dynamic) num_threads(exec.resolved_threads())
    for (long ti = 0; ti < static_cast<long>(frames); ++ti) {
        const auto t = static_cast<std::size_t>(ti);
        kept[t] = topk_select(combined.row(t), stage1.allocation.per_frame_count[t]);
    }

    CompressionResult out;
    out.selection = gather(tensor, std::move(kept));
    out.scores.video_score = std::move(stage1.video_scores);
    out.scores.frame_score = std::move(frame_scores);
    out.scores.combined_score = std::move(combined);
    out.scores.frame_uniqueness = stage1.allocation.frame_uniqueness;
    out.scores.frame_weight = stage1.allocation.frame_weight;
    out.allocation = std::move(stage1.allocation);
    return out;
}

}  // namespace vidcom
