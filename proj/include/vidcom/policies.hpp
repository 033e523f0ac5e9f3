#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <optional>

#include "vidcom/config.hpp"
#include "vidcom/parallel.hpp"
#include "vidcom/token_compression.hpp"

namespace vidcom {

/// Per frame, keeps k = budget_ceil(R * M) indices drawn uniformly without
/// replacement. The generator is std::mt19937_64 seeded with `seed`, bounded
/// draws use rejection sampling on raw 64-bit outputs and the draw is a
/// partial Fisher-Yates shuffle, so selections are identical on every
/// platform. Frames consume the stream in ascending order.
CompressedSelection random_drop(const TokenTensor& tensor, double ratio, std::uint64_t seed);

/// compress() with adjustment forced to Uniform.
CompressionResult uniform_topk(const TokenTensor& tensor, RetentionConfig config, Execution exec = {});

enum class PolicyKind { VidCom2, RandomDrop, UniformTopK };

struct Policy {
    PolicyKind kind = PolicyKind::VidCom2;
    RetentionConfig config;
    std::uint64_t seed = 0;

    static Policy vidcom2(RetentionConfig config) { return {PolicyKind::VidCom2, config, 0}; }
    static Policy random(double ratio, std::uint64_t seed) {
        RetentionConfig config;
        config.ratio = ratio;
        return {PolicyKind::RandomDrop, config, seed};
    }
    static Policy uniform(RetentionConfig config) { return {PolicyKind::UniformTopK, config, 0}; }

    std::string descriptor() const;
};

struct PolicyResult {
    CompressedSelection selection;
    // Absent for random_drop, which does no scoring.
    std::optional<BudgetAllocation> allocation;
};

PolicyResult apply(const Policy& policy, const TokenTensor& tensor, Execution exec = {});

std::string_view to_string(PolicyKind kind) noexcept;
std::optional<PolicyKind> parse_policy(std::string_view text) noexcept;

}  // namespace vidcom
