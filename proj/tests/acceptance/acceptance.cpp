// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "../oracle/brute_force.hpp"
#include "../properties.hpp"
#include "../test_helpers.hpp"
#include "vidcom/ablation.hpp"
#include "vidcom/frame_adjustment.hpp"
#include "vidcom/io.hpp"
#include "vidcom/synthetic.hpp"
#include "vidcom/token_compression.hpp"

using namespace vidcom;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

bool same_bits(std::span<const double> a, std::span<const double> b) {
    return a.size() == b.size() && (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

bool same_bits(const ScoreMatrix& a, const ScoreMatrix& b) {
    return a.frames() == b.frames() && a.tokens() == b.tokens() && same_bits(a.values(), b.values());
}

// Every byte the CLI would write for a compress run.
std::vector<std::uint8_t> encoded_outputs(const CompressionResult& r) {
    auto bytes = encode_vtok(pad_selection(r.selection));
    for (const auto& text : {format_kept_indices(r.selection),
                             format_frame_scores(r.allocation.frame_uniqueness, r.allocation),
                             format_token_scores(r.scores)}) {
        bytes.insert(bytes.end(), text.begin(), text.end());
    }
    return bytes;
}

RetentionConfig random_config(std::mt19937_64& gen, std::size_t frames) {
    RetentionConfig c;
    c.ratio = std::uniform_real_distribution<double>(0.05, 1.0)(gen);
    c.frame_aggregation = gen() % 2 ? FrameAggregation::Mean : FrameAggregation::Max;
    c.adjustment = gen() % 4 == 0 ? Adjustment::Uniform : Adjustment::Adaptive;
    c.score_mode = static_cast<ScoreMode>(gen() % 5);
    c.alpha = static_cast<double>(1 + gen() % 2);
    c.beta = static_cast<double>(1 + gen() % 2);
    if (gen() % 3 == 0) c.window = std::uniform_int_distribution<std::size_t>(1, frames)(gen);
    return c;
}

Outcome oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937_64 gen(1001);
    const int cases = 1000;
    int mismatches = 0;
    for (int i = 0; i < cases; ++i) {
        const auto x = vtest::random_tensor(gen, vtest::random_shape(gen, 5, 8, 4), i % 4 == 0);
        const auto config = random_config(gen, x.frames());
        const auto want = oracle::run(x, config);
        const auto got = compress(x, config);
        const bool ok = got.selection.kept_indices == want.kept && got.allocation.per_frame_count == want.k &&
                        same_bits(got.allocation.per_frame_ratio, want.ratio) &&
                        same_bits(got.allocation.frame_weight, want.sigma) &&
                        same_bits(got.allocation.frame_uniqueness, want.frame_u);
        if (!ok) ++mismatches;
    }
    const double secs = seconds_since(start);
    return {mismatches == 0 && secs < 10.0, fmt("%d/%d cases bit-identical in %.2f s", cases - mismatches, cases, secs)};
}

Outcome budget_preservation() {
    const auto start = Clock::now();
    std::mt19937_64 gen(1002);
    const int cases = 1000;
    int sum_r_failures = 0;
    int sum_k_failures = 0;
    int unclamped = 0;
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
        const auto x = vtest::random_tensor(gen, vtest::random_shape(gen, 48, 200, 6));
        RetentionConfig config;
        config.ratio = std::uniform_real_distribution<double>(0.05, 0.95)(gen);
        const auto adj = adjust_frames(x, config);
        const auto& a = adj.allocation;
        const double frames = static_cast<double>(x.frames());
        const double tokens = static_cast<double>(x.tokens());

        double sum_r = 0.0;
        for (double r : a.per_frame_ratio) sum_r += r;
        const double gap = std::abs(sum_r - config.ratio * frames);
        worst = std::max(worst, gap);
        if (gap > config.ratio * config.epsilon / (1.0 + config.epsilon) + 1e-9) ++sum_r_failures;

        bool clamped = false;
        for (double r : a.per_frame_ratio) {
            const double raw = budget_ceil(r * tokens);
            if (raw > tokens || raw < static_cast<double>(config.min_tokens_per_frame)) clamped = true;
        }
        if (clamped) continue;
        ++unclamped;
        const double budget = config.ratio * frames * tokens;
        const auto sum_k = static_cast<double>(a.total_count());
        if (sum_k < std::floor(budget) - 1.0 || sum_k > budget + frames + 1.0) ++sum_k_failures;
    }
    const double secs = seconds_since(start);
    return {sum_r_failures == 0 && sum_k_failures == 0 && secs < 5.0,
            fmt("sum r failures %d, sum k failures %d over %d unclamped, max |sum r - RT| %.3g, %.2f s",
                sum_r_failures, sum_k_failures, unclamped, worst, secs)};
}

Outcome closed_form_budget() {
    std::vector<float> data;
    const std::vector<float> token{0.3f, -1.2f, 0.7f, 2.0f};
    for (int i = 0; i < 32 * 196; ++i) data.insert(data.end(), token.begin(), token.end());
    const TokenTensor x({32, 196, 4}, std::move(data));
    RetentionConfig config;
    config.ratio = 0.25;
    const auto r = compress(x, config);
    const bool all49 = std::all_of(r.allocation.per_frame_count.begin(), r.allocation.per_frame_count.end(),
                                   [](std::size_t k) { return k == 49; });
    const std::size_t total = r.allocation.total_count();
    return {all49 && total == 1568 && r.selection.total_kept() == 1568,
            fmt("k_t = 49 for all frames: %s, sum k = %zu", all49 ? "yes" : "no", total)};
}

Outcome invariances() {
    const auto start = Clock::now();
    const int cases = 500;
    const int scale = vtest::scale_invariance_failures(4001, cases);
    const int token = vtest::token_permutation_failures(4002, cases);
    const int frame = vtest::frame_permutation_failures(4003, cases);
    const int shift = vtest::softmax_shift_failures(4004, cases);
    const double secs = seconds_since(start);
    return {scale + token + frame + shift == 0 && secs < 30.0,
            fmt("failures: scale %d, token perm %d, frame perm %d, softmax shift %d (of %d each), %.2f s", scale,
                token, frame, shift, cases, secs)};
}

Outcome unique_frame_allocation() {
    const auto start = Clock::now();
    int runs = 0;
    int wins = 0;
    for (double noise : {0.0, 0.05, 0.1}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const std::size_t outlier = (seed * 7 + 3) % 32;
            const auto x = generate({{32, 196, 64}, OutlierFrame{outlier, noise}, seed});
            const auto a = compress(x, RetentionConfig{}).allocation;
            bool strict = true;
            for (std::size_t t = 0; t < 32; ++t) {
                if (t == outlier) continue;
                strict = strict && a.frame_uniqueness[outlier] > a.frame_uniqueness[t] &&
                         a.frame_weight[outlier] > a.frame_weight[t] && a.per_frame_count[outlier] > a.per_frame_count[t];
            }
            ++runs;
            if (strict) ++wins;
        }
    }
    const double secs = seconds_since(start);
    return {wins == runs && secs < 20.0,
            fmt("outlier strict max of u_t, sigma_t, k_t in %d/%d runs (20 seeds x 3 noise levels), %.2f s", wins, runs,
                secs)};
}

Outcome window_equivalence() {
    std::mt19937_64 gen(1006);
    const int cases = 100;
    int mismatches = 0;
    for (int i = 0; i < cases; ++i) {
        const auto x = vtest::random_tensor(gen, vtest::random_shape(gen, 40, 64, 16));
        RetentionConfig global = random_config(gen, x.frames());
        global.window = std::nullopt;
        RetentionConfig full = global;
        full.window = x.frames();
        const auto a = compress(x, global);
        const auto b = compress(x, full);
        const bool ok = a.selection == b.selection && a.allocation.per_frame_count == b.allocation.per_frame_count &&
                        same_bits(a.allocation.per_frame_ratio, b.allocation.per_frame_ratio) &&
                        same_bits(a.allocation.frame_weight, b.allocation.frame_weight) &&
                        same_bits(a.allocation.frame_uniqueness, b.allocation.frame_uniqueness) &&
                        same_bits(a.scores.video_score, b.scores.video_score) &&
                        same_bits(a.scores.combined_score, b.scores.combined_score) &&
                        encoded_outputs(a) == encoded_outputs(b);
        if (!ok) ++mismatches;
    }
    return {mismatches == 0, fmt("%d/%d inputs bitwise identical", cases - mismatches, cases)};
}

Outcome ablation_coverage() {
    const auto start = Clock::now();
    const auto x = generate({{32, 196, 32}, ClusteredFrames{4, 0.1}, 11});
    const RetentionConfig base;
    const auto rows = run_ablation(x, base, 5);

    std::set<std::tuple<ScoreMode, FrameAggregation, Adjustment>> seen;
    for (const auto& row : rows) {
        if (row.policy.kind == PolicyKind::VidCom2) {
            seen.emplace(row.policy.config.score_mode, row.policy.config.frame_aggregation,
                         row.policy.config.adjustment);
        }
    }
    const std::size_t combos = 5 * 2 * 2;
    const auto again = compress(x, base).selection;
    const double self = selection_jaccard(again, compress(x, base).selection);
    const bool default_one = !rows.empty() && rows.front().label == "default" && rows.front().jaccard == 1.0;
    const double secs = seconds_since(start);
    return {seen.size() == combos && default_one && self == 1.0 && secs < 10.0,
            fmt("%zu rows, %zu/%zu score x aggregation x adjustment combinations, default Jaccard %.1f, %.2f s",
                rows.size(), seen.size(), combos, rows.empty() ? 0.0 : rows.front().jaccard, secs)};
}

Outcome parallel_determinism() {
    std::mt19937_64 gen(1008);
    const int cases = 50;
    int mismatches = 0;
    for (int i = 0; i < cases; ++i) {
        const auto x = vtest::random_tensor(gen, vtest::random_shape(gen, 32, 196, 96), i % 5 == 0);
        const auto config = random_config(gen, x.frames());
        const auto reference = encoded_outputs(compress(x, config, Execution{1}));
        for (int threads : {0, 2, 3, 8}) {
            if (encoded_outputs(compress(x, config, Execution{threads})) != reference) {
                ++mismatches;
                break;
            }
        }
    }
    return {mismatches == 0,
            fmt("%d/%d inputs byte-identical across threads 1, auto (%d), 2, 3, 8", cases - mismatches, cases,
                Execution{}.resolved_threads())};
}

Outcome throughput() {
    const auto x = generate({{32, 196, 896}, Iid{}, 9});
    const RetentionConfig config;
    (void)compress(x, config, Execution{1});
    std::vector<double> ms;
    for (int i = 0; i < 7; ++i) {
        const auto start = Clock::now();
        const auto r = compress(x, config, Execution{1});
        ms.push_back(seconds_since(start) * 1e3);
        if (r.selection.total_kept() == 0) return {false, "empty selection"};
    }
    std::sort(ms.begin(), ms.end());
    const double median = ms[ms.size() / 2];
    return {median < 50.0, fmt("32x196x896 single-thread compress: median %.1f ms, min %.1f ms over %zu runs", median,
                               ms.front(), ms.size())};
}

Outcome format_round_trip() {
    std::mt19937_64 gen(1010);
    std::uniform_real_distribution<float> wide(-1e6f, 1e6f);
    const int cases = 200;
    int mismatches = 0;
    for (int i = 0; i < cases; ++i) {
        Shape shape = i == 0 ? Shape{1, 1, 1} : vtest::random_shape(gen, 12, 40, 24);
        if (i % 10 == 1) shape.frames = 1;
        if (i % 10 == 2) shape.tokens = 1;
        if (i % 10 == 3) shape.dim = 1;
        std::vector<float> data(shape.element_count());
        for (float& v : data) v = gen() % 8 == 0 ? -0.0f : wide(gen) * (gen() % 2 ? 1.0f : 1e-40f);
        const TokenTensor x(shape, std::move(data));
        const auto bytes = encode_vtok(x);
        const auto y = decode_vtok(bytes);
        const bool ok = y.shape().frames == shape.frames && y.shape().tokens == shape.tokens &&
                        y.shape().dim == shape.dim &&
                        std::memcmp(x.data().data(), y.data().data(), x.data().size_bytes()) == 0 &&
                        encode_vtok(y) == bytes;
        if (!ok) ++mismatches;
    }
    return {mismatches == 0,
            fmt("%d/%d tensors bit-exact (incl. 1x1x1, signed zeros, subnormals)", cases - mismatches, cases)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"oracle equivalence", oracle_equivalence},
        {"budget preservation", budget_preservation},
        {"closed-form 32x196 budget", closed_form_budget},
        {"scale/permutation invariances", invariances},
        {"unique-frame allocation", unique_frame_allocation},
        {"window equivalence", window_equivalence},
        {"ablation coverage", ablation_coverage},
        {"determinism under parallelism", parallel_determinism},
        {"throughput sanity", throughput},
        {"format round-trip", format_round_trip},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failed;
        std::printf("%s [%d] %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, name, outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
