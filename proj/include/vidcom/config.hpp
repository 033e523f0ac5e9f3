#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace vidcom {

enum class Adjustment { Adaptive, Uniform };

enum class FrameAggregation { Mean, Max };

/// Token scoring used for the per-frame top-k.
///   Combined      alpha * u_frame + beta * u_video
///   FrameOnly     u_frame
///   VideoOnly     u_video
///   PositiveFrame -u_frame (raw frame similarity)
///   PositiveVideo -u_video (raw video similarity)
enum class ScoreMode { Combined, FrameOnly, VideoOnly, PositiveFrame, PositiveVideo };

/// Pooling window for the video summary: std::nullopt pools over every
/// frame, a value w pools contiguous chunks of w frames.
using Window = std::optional<std::size_t>;

struct RetentionConfig {
    double ratio = 0.25;
    double temperature = 0.01;
    double epsilon = 1e-8;
    Window window;
    Adjustment adjustment = Adjustment::Adaptive;
    FrameAggregation frame_aggregation = FrameAggregation::Mean;
    ScoreMode score_mode = ScoreMode::Combined;
    double alpha = 1.0;
    double beta = 1.0;
    std::size_t min_tokens_per_frame = 1;
};

/// Throws InvalidConfig when ratio, temperature, epsilon or the score
/// weights are out of range.
void validate(const RetentionConfig& config);

std::string_view to_string(Adjustment value) noexcept;
std::string_view to_string(FrameAggregation value) noexcept;
std::string_view to_string(ScoreMode value) noexcept;
std::string window_to_string(const Window& window);

std::optional<Adjustment> parse_adjustment(std::string_view text) noexcept;
std::optional<FrameAggregation> parse_aggregation(std::string_view text) noexcept;
std::optional<ScoreMode> parse_score_mode(std::string_view text) noexcept;

}  // namespace vidcom
