#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vidcom/config.hpp"
#include "vidcom/parallel.hpp"
#include "vidcom/token_tensor.hpp"
#include "vidcom/types.hpp"

// Stage 2: per-token scoring and per-frame top-k, plus the end-to-end pipeline.
namespace vidcom {

/// Per-frame mean of the M tokens, one pool per frame.
PooledVectors frame_pool(const TokenTensor& tensor, Execution exec = {});

/// u_frame[t][m] = -cosine(x[t][m], frame_pool[t]).
ScoreMatrix frame_token_uniqueness(const TokenTensor& tensor, const PooledVectors& frame_pools,
                                   Execution exec = {});

/// Throws ShapeMismatch if the matrices differ in shape.
ScoreMatrix combine_scores(const ScoreMatrix& frame_scores, const ScoreMatrix& video_scores, ScoreMode mode,
                           double alpha, double beta);

/// Indices of the k largest scores, ties to the lower index, returned in
/// ascending index order. Throws KExceedsM when k > scores.size().
std::vector<std::uint32_t> topk_select(std::span<const double> scores, std::size_t k);

/// Copies the selected token vectors out of the tensor.
CompressedSelection gather(const TokenTensor& tensor, std::vector<std::vector<std::uint32_t>> kept_indices);

struct CompressionResult {
    CompressedSelection selection;
    BudgetAllocation allocation;
    ScoreReport scores;
};

CompressionResult compress(const TokenTensor& tensor, const RetentionConfig& config, Execution exec = {});

namespace serial {

/// Single-threaded reference path with no OpenMP. Produces the same bits
/// as vidcom::compress; kept for tests and for the benchmark baseline.
CompressionResult compress(const TokenTensor& tensor, const RetentionConfig& config);

}  // namespace serial

}  // namespace vidcom
