#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vidcom {

/// frames x tokens matrix of per-token scores, row-major by frame.
class ScoreMatrix {
public:
    ScoreMatrix() = default;
    ScoreMatrix(std::size_t frames, std::size_t tokens)
        : m_frames(frames), m_tokens(tokens), m_values(frames * tokens, 0.0) {}

    std::size_t frames() const noexcept { return m_frames; }
    std::size_t tokens() const noexcept { return m_tokens; }

    double& at(std::size_t frame, std::size_t token) noexcept { return m_values[frame * m_tokens + token]; }
    double at(std::size_t frame, std::size_t token) const noexcept { return m_values[frame * m_tokens + token]; }

    std::span<double> row(std::size_t frame) noexcept { return {m_values.data() + frame * m_tokens, m_tokens}; }
    std::span<const double> row(std::size_t frame) const noexcept {
        return {m_values.data() + frame * m_tokens, m_tokens};
    }

    std::span<const double> values() const noexcept { return m_values; }

    friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;

private:
    std::size_t m_frames = 0;
    std::size_t m_tokens = 0;
    std::vector<double> m_values;
};

/// Pooled summary vectors plus the pool each frame maps to.
struct PooledVectors {
    std::vector<std::vector<double>> vectors;
    std::vector<std::size_t> frame_to_pool;

    std::span<const double> for_frame(std::size_t frame) const noexcept { return vectors[frame_to_pool[frame]]; }

    friend bool operator==(const PooledVectors&, const PooledVectors&) = default;
};

struct BudgetAllocation {
    std::vector<double> per_frame_ratio;       // r_t, unclamped
    std::vector<std::size_t> per_frame_count;  // k_t, clamped to [min_tokens, M]
    std::vector<double> frame_uniqueness;      // u_t
    std::vector<double> frame_weight;          // sigma_t

    std::size_t total_count() const noexcept;

    friend bool operator==(const BudgetAllocation&, const BudgetAllocation&) = default;
};

/// Retained token indices per frame (ascending) and the copied token vectors
/// in the same order, stored back to back.
struct CompressedSelection {
    std::size_t dim = 0;
    std::vector<std::vector<std::uint32_t>> kept_indices;
    std::vector<float> values;

    std::size_t frames() const noexcept { return kept_indices.size(); }
    std::size_t total_kept() const noexcept;
    std::size_t max_kept() const noexcept;
    /// Offset (in tokens) of frame t's first retained vector within values.
    std::size_t frame_offset(std::size_t frame) const noexcept;
    std::span<const float> token(std::size_t frame, std::size_t slot) const noexcept;

    friend bool operator==(const CompressedSelection&, const CompressedSelection&) = default;
};

struct ScoreReport {
    ScoreMatrix video_score;
    ScoreMatrix frame_score;
    ScoreMatrix combined_score;
    std::vector<double> frame_uniqueness;
    std::vector<double> frame_weight;

    friend bool operator==(const ScoreReport&, const ScoreReport&) = default;
};

}  // namespace vidcom
