#include "vidcom/config.hpp"

#include <cmath>

#include "vidcom/error.hpp"

namespace vidcom {

void validate(const RetentionConfig& config) {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
    if (!(config.ratio > 0.0 && config.ratio <= 1.0)) fail("ratio must be in (0, 1]");
    if (!(config.temperature > 0.0) || !std::isfinite(config.temperature)) fail("temperature must be positive");
    if (!(config.epsilon > 0.0) || !std::isfinite(config.epsilon)) fail("epsilon must be positive");
    if (!(config.alpha >= 0.0) || !(config.beta >= 0.0) || !std::isfinite(config.alpha) ||
        !std::isfinite(config.beta)) {
        fail("alpha and beta must be non-negative");
    }
    if (!(config.alpha + config.beta > 0.0)) fail("alpha + beta must be positive");
    if (config.min_tokens_per_frame < 1) fail("min_tokens_per_frame must be at least 1");
    if (config.window && *config.window < 1) fail("window must be at least 1");
}

std::string_view to_string(Adjustment value) noexcept {
    return value == Adjustment::Adaptive ? "adaptive" : "uniform";
}

std::string_view to_string(FrameAggregation value) noexcept {
    return value == FrameAggregation::Mean ? "mean" : "max";
}

std::string_view to_string(ScoreMode value) noexcept {
    switch (value) {
        case ScoreMode::Combined: return "combined";
        case ScoreMode::FrameOnly: return "frame";
        case ScoreMode::VideoOnly: return "video";
        case ScoreMode::PositiveFrame: return "positive-frame";
        case ScoreMode::PositiveVideo: return "positive-video";
    }
    return "combined";
}

std::string window_to_string(const Window& window) {
    return window ? std::to_string(*window) : std::string("global");
}

std::optional<Adjustment> parse_adjustment(std::string_view text) noexcept {
    if (text == "adaptive") return Adjustment::Adaptive;
    if (text == "uniform") return Adjustment::Uniform;
    return std::nullopt;
}

std::optional<FrameAggregation> parse_aggregation(std::string_view text) noexcept {
    if (text == "mean") return FrameAggregation::Mean;
    if (text == "max") return FrameAggregation::Max;
    return std::nullopt;
}

std::optional<ScoreMode> parse_score_mode(std::string_view text) noexcept {
    for (auto mode : {ScoreMode::Combined, ScoreMode::FrameOnly, ScoreMode::VideoOnly, ScoreMode::PositiveFrame,
                      ScoreMode::PositiveVideo}) {
        if (text == to_string(mode)) return mode;
    }
    return std::nullopt;
}

}  // namespace vidcom
