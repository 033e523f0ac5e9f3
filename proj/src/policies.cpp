#include "vidcom/policies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "random.hpp"
#include "vidcom/frame_adjustment.hpp"

namespace vidcom {

CompressedSelection random_drop(const TokenTensor& tensor, double ratio, std::uint64_t seed) {
    if (!(ratio > 0.0 && ratio <= 1.0)) throw Error(ErrorKind::InvalidConfig, "ratio must be in (0, 1]");
    const std::size_t tokens = tensor.tokens();
    const auto k = std::min(tokens, static_cast<std::size_t>(budget_ceil(ratio * static_cast<double>(tokens))));

    std::mt19937_64 gen(seed);
    std::vector<std::vector<std::uint32_t>> kept(tensor.frames());
    std::vector<std::uint32_t> pool(tokens);
    for (auto& frame : kept) {
        std::iota(pool.begin(), pool.end(), std::uint32_t{0});
        for (std::size_t i = 0; i < k; ++i) {
            const auto j = i + static_cast<std::size_t>(detail::uniform_below(gen, tokens - i));
            std::swap(pool[i], pool[j]);
        }
        frame.assign(pool.begin(), pool.begin() + static_cast<long>(k));
        std::sort(frame.begin(), frame.end());
    }
    return gather(tensor, std::move(kept));
}

CompressionResult uniform_topk(const TokenTensor& tensor, RetentionConfig config, Execution exec) {
    config.adjustment = Adjustment::Uniform;
    return compress(tensor, config, exec);
}

std::string Policy::descriptor() const {
    std::ostringstream out;
    out << to_string(kind) << "(R=" << config.ratio;
    if (kind == PolicyKind::RandomDrop) {
        out << ",seed=" << seed << ")";
        return out.str();
    }
    out << ",score=" << to_string(config.score_mode);
    if (config.score_mode == ScoreMode::Combined) out << ",alpha=" << config.alpha << ",beta=" << config.beta;
    if (kind == PolicyKind::VidCom2) {
        out << ",agg=" << to_string(config.frame_aggregation) << ",window=" << window_to_string(config.window)
            << ",adjust=" << to_string(config.adjustment);
    }
    out << ")";
    return out.str();
}

PolicyResult apply(const Policy& policy, const TokenTensor& tensor, Execution exec) {
    switch (policy.kind) {
        case PolicyKind::RandomDrop:
            return {random_drop(tensor, policy.config.ratio, policy.seed), std::nullopt};
        case PolicyKind::UniformTopK: {
            auto result = uniform_topk(tensor, policy.config, exec);
            return {std::move(result.selection), std::move(result.allocation)};
        }
        case PolicyKind::VidCom2:
            break;
    }
    auto result = compress(tensor, policy.config, exec);
    return {std::move(result.selection), std::move(result.allocation)};
}

std::string_view to_string(PolicyKind kind) noexcept {
    switch (kind) {
        case PolicyKind::VidCom2: return "vidcom2";
        case PolicyKind::RandomDrop: return "random";
        case PolicyKind::UniformTopK: return "uniform";
    }
    return "vidcom2";
}

std::optional<PolicyKind> parse_policy(std::string_view text) noexcept {
    for (auto kind : {PolicyKind::VidCom2, PolicyKind::RandomDrop, PolicyKind::UniformTopK}) {
        if (text == to_string(kind)) return kind;
    }
    return std::nullopt;
}

}  // namespace vidcom
