// vidcom: generate, analyze, compress, ablate and benchmark video token tensors.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vidcom/ablation.hpp"
#include "vidcom/frame_adjustment.hpp"
#include "vidcom/io.hpp"
#include "vidcom/policies.hpp"
#include "vidcom/synthetic.hpp"
#include "vidcom/token_compression.hpp"

namespace {

using namespace vidcom;

struct FlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RetentionFlags {
    double ratio = 0.25;
    double tau = 0.01;
    double epsilon = 1e-8;
    std::string window = "global";
    std::string policy = "vidcom2";
    std::string score_mode = "combined";
    double alpha = 1.0;
    double beta = 1.0;
    std::string aggregation = "mean";
    std::size_t min_tokens = 1;
    std::uint64_t seed = 0;
    std::string threads = "auto";

    void attach(CLI::App& app, bool with_policy) {
        app.add_option("--ratio", ratio, "Retention ratio R in (0, 1]")->capture_default_str();
        app.add_option("--tau", tau, "Softmax temperature")->capture_default_str();
        app.add_option("--epsilon", epsilon, "Softmax denominator epsilon")->capture_default_str();
        app.add_option("--window", window, "Video pooling window: N frames or 'global'")->capture_default_str();
        if (with_policy) {
            app.add_option("--policy", policy, "vidcom2 | random | uniform")->capture_default_str();
        }
        app.add_option("--score-mode", score_mode, "combined | frame | video | positive-frame | positive-video")
            ->capture_default_str();
        app.add_option("--alpha", alpha, "Weight on the frame-level score (combined mode)")->capture_default_str();
        app.add_option("--beta", beta, "Weight on the video-level score (combined mode)")->capture_default_str();
        app.add_option("--aggregation", aggregation, "Frame uniqueness: mean | max")->capture_default_str();
        app.add_option("--min-tokens", min_tokens, "Minimum tokens kept per frame")->capture_default_str();
        app.add_option("--seed", seed, "Seed for the random policy")->capture_default_str();
        app.add_option("--threads", threads, "Worker threads: N or 'auto'")->capture_default_str();
    }

    RetentionConfig config() const {
        RetentionConfig c;
        c.ratio = ratio;
        c.temperature = tau;
        c.epsilon = epsilon;
        if (window != "global") {
            try {
                std::size_t used = 0;
                const long w = std::stol(window, &used);
                if (used != window.size() || w < 1) throw std::invalid_argument(window);
                c.window = static_cast<std::size_t>(w);
            } catch (const std::exception&) {
                throw FlagError("--window expects a positive integer or 'global', got '" + window + "'");
            }
        }
        auto mode = parse_score_mode(score_mode);
        if (!mode) throw FlagError("unknown --score-mode '" + score_mode + "'");
        c.score_mode = *mode;
        auto agg = parse_aggregation(aggregation);
        if (!agg) throw FlagError("unknown --aggregation '" + aggregation + "'");
        c.frame_aggregation = *agg;
        c.alpha = alpha;
        c.beta = beta;
        c.min_tokens_per_frame = min_tokens;
        try {
            validate(c);
        } catch (const Error& e) {
            throw FlagError(e.what());
        }
        return c;
    }

    Policy make_policy() const {
        auto kind = parse_policy(policy);
        if (!kind) throw FlagError("unknown --policy '" + policy + "'");
        const auto c = config();
        switch (*kind) {
            case PolicyKind::RandomDrop: return Policy::random(c.ratio, seed);
            case PolicyKind::UniformTopK: return Policy::uniform(c);
            case PolicyKind::VidCom2: break;
        }
        return Policy::vidcom2(c);
    }

    Execution execution() const {
        if (threads == "auto") return {};
        try {
            std::size_t used = 0;
            const int n = std::stoi(threads, &used);
            if (used != threads.size() || n < 1) throw std::invalid_argument(threads);
            return {n};
        } catch (const std::exception&) {
            throw FlagError("--threads expects a positive integer or 'auto', got '" + threads + "'");
        }
    }
};

struct ShapeFlags {
    std::size_t frames = 32;
    std::size_t tokens = 196;
    std::size_t dim = 896;
    std::string model = "iid";
    std::size_t clusters = 4;
    std::size_t outlier = 0;
    double noise = 0.05;
    std::uint64_t seed = 0;

    void attach(CLI::App& app) {
        app.add_option("--frames", frames, "Frames T")->capture_default_str();
        app.add_option("--tokens", tokens, "Tokens per frame M")->capture_default_str();
        app.add_option("--dim", dim, "Embedding dim D'")->capture_default_str();
        app.add_option("--model", model, "iid | clustered | outlier")->capture_default_str();
        app.add_option("--clusters", clusters, "Clusters for the clustered model")->capture_default_str();
        app.add_option("--outlier", outlier, "Outlier frame index for the outlier model")->capture_default_str();
        app.add_option("--noise", noise, "Gaussian noise sigma")->capture_default_str();
        app.add_option("--seed", seed, "Generator seed")->capture_default_str();
    }

    SyntheticSpec spec() const {
        SyntheticSpec s;
        s.shape = {frames, tokens, dim};
        s.seed = seed;
        if (model == "iid") {
            s.model = Iid{};
        } else if (model == "clustered") {
            s.model = ClusteredFrames{clusters, noise};
        } else if (model == "outlier") {
            s.model = OutlierFrame{outlier, noise};
        } else {
            throw FlagError("unknown --model '" + model + "'");
        }
        try {
            validate(s);
        } catch (const Error& e) {
            throw FlagError(e.what());
        }
        return s;
    }
};

std::string shape_string(const Shape& s) {
    return std::to_string(s.frames) + "x" + std::to_string(s.tokens) + "x" + std::to_string(s.dim);
}

void print_frame_table(const BudgetAllocation& allocation) {
    std::printf("%6s %12s %12s %12s %6s\n", "frame", "u_t", "sigma_t", "r_t", "k_t");
    for (std::size_t t = 0; t < allocation.per_frame_count.size(); ++t) {
        std::printf("%6zu %12.6g %12.6g %12.6g %6zu\n", t, allocation.frame_uniqueness[t], allocation.frame_weight[t],
                    allocation.per_frame_ratio[t], allocation.per_frame_count[t]);
    }
}

double percentile(std::vector<double> sorted, double p) {
    std::sort(sorted.begin(), sorted.end());
    const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(sorted.size())));
    return sorted[std::max<std::size_t>(rank, 1) - 1];
}

long peak_rss_kb() {
    rusage usage{};
    if (getrusage(RUSAGE_SELF, &usage) != 0) return -1;
    return usage.ru_maxrss;
}

int run(int argc, char** argv) {
    CLI::App app{"Two-stage uniqueness-driven token compression for video token tensors"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a synthetic .vtok tensor");
    ShapeFlags gen_shape;
    std::string gen_output;
    gen_shape.attach(*gen);
    gen->add_option("-o,--output", gen_output, "Output .vtok path")->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Per-frame uniqueness and budget report");
    RetentionFlags analyze_flags;
    std::string analyze_input;
    std::string analyze_output;
    bool analyze_full = false;
    bool analyze_uniform = false;
    analyze_flags.attach(*analyze, false);
    analyze->add_option("-i,--input", analyze_input, "Input .vtok")->required();
    analyze->add_option("-o,--output", analyze_output, "Frame score CSV");
    analyze->add_flag("--full", analyze_full, "Also score every token; writes <output>.tokens.csv");
    analyze->add_flag("--uniform", analyze_uniform, "Report the uniform (unadjusted) budget");

    // compress
    auto* compress_cmd = app.add_subcommand("compress", "Compress a .vtok tensor");
    RetentionFlags compress_flags;
    std::string compress_input;
    std::string compress_output;
    std::string compress_indices;
    std::string compress_format = "vtok";
    compress_flags.attach(*compress_cmd, true);
    compress_cmd->add_option("-i,--input", compress_input, "Input .vtok")->required();
    compress_cmd->add_option("-o,--output", compress_output, "Output path")->required();
    compress_cmd->add_option("--indices", compress_indices, "Sidecar index CSV (default <output>.indices.csv)");
    compress_cmd
        ->add_option("--format", compress_format,
                     "vtok: zero-padded frames x max(k_t) x dim tensor plus sidecar; csv: index CSV only")
        ->check(CLI::IsMember({"vtok", "csv"}))
        ->capture_default_str();

    // ablate
    auto* ablate = app.add_subcommand("ablate", "Sweep score modes, aggregations, windows and adjustments");
    RetentionFlags ablate_flags;
    std::string ablate_input;
    std::string ablate_output;
    ablate_flags.attach(*ablate, false);
    ablate->add_option("-i,--input", ablate_input, "Input .vtok")->required();
    ablate->add_option("-o,--output", ablate_output, "CSV path (stdout when omitted)");

    // bench
    auto* bench = app.add_subcommand(
        "bench", "Time compress() on a generated tensor. One untimed warmup run precedes the timed iterations.");
    ShapeFlags bench_shape;
    RetentionFlags bench_flags;
    int iters = 10;
    std::string bench_format = "text";
    bench->add_option("--frames", bench_shape.frames, "Frames T")->capture_default_str();
    bench->add_option("--tokens", bench_shape.tokens, "Tokens per frame M")->capture_default_str();
    bench->add_option("--dim", bench_shape.dim, "Embedding dim D'")->capture_default_str();
    bench->add_option("--ratio", bench_flags.ratio, "Retention ratio")->capture_default_str();
    bench->add_option("--threads", bench_flags.threads, "Worker threads: N or 'auto'")->capture_default_str();
    bench->add_option("--seed", bench_shape.seed, "Generator seed")->capture_default_str();
    bench->add_option("--iters", iters, "Timed iterations")->check(CLI::PositiveNumber)->capture_default_str();
    bench->add_option("--format", bench_format, "text | csv")->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: flag: " << e.what() << "\n";
        return 2;
    }

    if (*gen) {
        const auto spec = gen_shape.spec();
        const auto tensor = generate(spec);
        write_vtok(tensor, gen_output);
        std::printf("wrote %s: %s (%zu bytes)\n", gen_output.c_str(), shape_string(tensor.shape()).c_str(),
                    kVtokHeaderSize + 4 * tensor.data().size());
        return 0;
    }

    if (*analyze) {
        auto config = analyze_flags.config();
        if (analyze_uniform) config.adjustment = Adjustment::Uniform;
        const auto exec = analyze_flags.execution();
        const auto tensor = read_vtok(analyze_input);
        BudgetAllocation allocation;
        if (analyze_full) {
            const auto result = compress(tensor, config, exec);
            allocation = result.allocation;
            if (!analyze_output.empty()) {
                export_scores(result.scores, allocation, analyze_output);
                write_text(analyze_output + ".tokens.csv", format_token_scores(result.scores));
            }
        } else {
            allocation = adjust_frames(tensor, config, exec).allocation;
            if (!analyze_output.empty()) write_text(analyze_output, format_frame_scores(allocation.frame_uniqueness, allocation));
        }
        std::printf("input %s, R=%g, window=%s, total k=%zu\n", shape_string(tensor.shape()).c_str(), config.ratio,
                    window_to_string(config.window).c_str(), allocation.total_count());
        print_frame_table(allocation);
        return 0;
    }

    if (*compress_cmd) {
        const auto policy = compress_flags.make_policy();
        const auto exec = compress_flags.execution();
        const auto tensor = read_vtok(compress_input);
        const auto result = apply(policy, tensor, exec);
        const auto indices = format_kept_indices(result.selection);
        if (compress_format == "csv") {
            write_text(compress_output, indices);
        } else {
            write_vtok(pad_selection(result.selection), compress_output);
            write_text(compress_indices.empty() ? compress_output + ".indices.csv" : compress_indices, indices);
        }
        std::printf("%s: kept %zu of %zu tokens (max k_t=%zu)\n", policy.descriptor().c_str(),
                    result.selection.total_kept(), tensor.shape().token_count(), result.selection.max_kept());
        return 0;
    }

    if (*ablate) {
        const auto config = ablate_flags.config();
        const auto exec = ablate_flags.execution();
        const auto tensor = read_vtok(ablate_input);
        const auto csv = format_ablation(run_ablation(tensor, config, ablate_flags.seed, exec));
        if (ablate_output.empty()) {
            std::fputs(csv.c_str(), stdout);
        } else {
            write_text(ablate_output, csv);
        }
        return 0;
    }

    // bench
    const auto config = bench_flags.config();
    const auto exec = bench_flags.execution();
    const auto tensor = generate(bench_shape.spec());
    (void)compress(tensor, config, exec);
    std::vector<double> ms;
    ms.reserve(static_cast<std::size_t>(iters));
    for (int i = 0; i < iters; ++i) {
        const auto start = std::chrono::steady_clock::now();
        const auto result = compress(tensor, config, exec);
        const auto stop = std::chrono::steady_clock::now();
        ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    const double mean = std::accumulate(ms.begin(), ms.end(), 0.0) / static_cast<double>(ms.size());
    const double tokens_per_sec = static_cast<double>(tensor.shape().token_count()) / (mean / 1000.0);
    const long rss = peak_rss_kb();
    if (bench_format == "csv") {
        std::printf("frames,tokens,dim,threads,iters,mean_ms,p50_ms,p95_ms,tokens_per_sec,peak_rss_kb\n");
        std::printf("%zu,%zu,%zu,%d,%d,%.4f,%.4f,%.4f,%.1f,%ld\n", tensor.frames(), tensor.tokens(), tensor.dim(),
                    exec.resolved_threads(), iters, mean, percentile(ms, 0.5), percentile(ms, 0.95), tokens_per_sec,
                    rss);
    } else {
        std::printf("shape %s, threads %d, %d iterations (after 1 warmup)\n", shape_string(tensor.shape()).c_str(),
                    exec.resolved_threads(), iters);
        std::printf("  mean %.3f ms  p50 %.3f ms  p95 %.3f ms\n", mean, percentile(ms, 0.5), percentile(ms, 0.95));
        std::printf("  %.0f tokens/s scored\n", tokens_per_sec);
        if (rss >= 0) std::printf("  peak RSS %ld KiB\n", rss);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const FlagError& e) {
        std::cerr << "error: flag: " << e.what() << "\n";
        return 2;
    } catch (const vidcom::Error& e) {
        std::cerr << "error: " << vidcom::error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
