#include "vidcom/ablation.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace vidcom {

namespace {

struct ScoreVariant {
    ScoreMode mode;
    double alpha;
    double beta;
};

constexpr ScoreVariant kScoreVariants[] = {
    {ScoreMode::Combined, 1.0, 1.0},      {ScoreMode::Combined, 1.0, 2.0},   {ScoreMode::Combined, 2.0, 1.0},
    {ScoreMode::FrameOnly, 1.0, 1.0},     {ScoreMode::VideoOnly, 1.0, 1.0},  {ScoreMode::PositiveFrame, 1.0, 1.0},
    {ScoreMode::PositiveVideo, 1.0, 1.0},
};

std::size_t spread(const CompressedSelection& selection) {
    std::size_t lo = selection.kept_indices.empty() ? 0 : selection.kept_indices.front().size();
    std::size_t hi = lo;
    for (const auto& frame : selection.kept_indices) {
        lo = std::min(lo, frame.size());
        hi = std::max(hi, frame.size());
    }
    return hi - lo;
}

}  // namespace

double selection_jaccard(const CompressedSelection& a, const CompressedSelection& b) {
    if (a.frames() != b.frames()) throw Error(ErrorKind::ShapeMismatch, "selections differ in frame count");
    std::size_t both = 0;
    std::size_t either = 0;
    for (std::size_t t = 0; t < a.frames(); ++t) {
        const auto& x = a.kept_indices[t];
        const auto& y = b.kept_indices[t];
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] == y[j]) {
                ++both;
                ++i;
                ++j;
            } else if (x[i] < y[j]) {
                ++i;
            } else {
                ++j;
            }
        }
        either += x.size() + y.size();
    }
    either -= both;
    return either == 0 ? 1.0 : static_cast<double>(both) / static_cast<double>(either);
}

std::vector<AblationRow> run_ablation(const TokenTensor& tensor, const RetentionConfig& base, std::uint64_t seed,
                                      Execution exec) {
    std::vector<Window> windows{std::nullopt};
    for (std::size_t w : {4u, 8u, 16u}) {
        if (w < tensor.frames()) windows.emplace_back(w);
    }

    RetentionConfig defaults;
    defaults.ratio = base.ratio;
    defaults.temperature = base.temperature;
    defaults.epsilon = base.epsilon;
    defaults.min_tokens_per_frame = base.min_tokens_per_frame;

    std::vector<Policy> policies{Policy::vidcom2(defaults)};
    for (const auto& variant : kScoreVariants) {
        for (auto aggregation : {FrameAggregation::Mean, FrameAggregation::Max}) {
            for (const auto& window : windows) {
                for (auto adjustment : {Adjustment::Adaptive, Adjustment::Uniform}) {
                    RetentionConfig config = defaults;
                    config.score_mode = variant.mode;
                    config.alpha = variant.alpha;
                    config.beta = variant.beta;
                    config.frame_aggregation = aggregation;
                    config.window = window;
                    config.adjustment = adjustment;
                    policies.push_back(Policy::vidcom2(config));
                }
            }
        }
    }
    policies.push_back(Policy::random(base.ratio, seed));

    std::vector<AblationRow> rows;
    rows.reserve(policies.size());
    CompressedSelection reference;
    for (std::size_t i = 0; i < policies.size(); ++i) {
        auto result = apply(policies[i], tensor, exec);
        if (i == 0) reference = result.selection;
        AblationRow row;
        row.label = i == 0 ? "default" : "variant-" + std::to_string(i);
        row.policy = policies[i];
        row.total_kept = result.selection.total_kept();
        row.budget_spread = spread(result.selection);
        row.jaccard = selection_jaccard(reference, result.selection);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_ablation(const std::vector<AblationRow>& rows) {
    std::string out = "label,policy,score_mode,alpha,beta,aggregation,window,adjustment,total_k,k_spread,jaccard\n";
    char buf[64];
    for (const auto& row : rows) {
        const auto& c = row.policy.config;
        const bool scored = row.policy.kind != PolicyKind::RandomDrop;
        out += row.label + ',' + std::string(to_string(row.policy.kind)) + ',';
        if (scored) {
            std::snprintf(buf, sizeof buf, "%g,%g", c.alpha, c.beta);
            out += std::string(to_string(c.score_mode)) + ',' + buf + ',' + std::string(to_string(c.frame_aggregation)) +
                   ',' + window_to_string(c.window) + ',' + std::string(to_string(c.adjustment)) + ',';
        } else {
            out += ",,,,,,";
        }
        std::snprintf(buf, sizeof buf, "%.6f", row.jaccard);
        out += std::to_string(row.total_kept) + ',' + std::to_string(row.budget_spread) + ',' + buf + '\n';
    }
    return out;
}

}  // namespace vidcom
