#include "vidcom/synthetic.hpp"

#include <cmath>
#include <string>

#include "random.hpp"

namespace vidcom {

namespace {

// Spread of template tokens around the shared center in OutlierFrame videos.
constexpr double kTemplateSpread = 0.5;

std::vector<double> normal_block(std::mt19937_64& gen, std::size_t n) {
    std::vector<double> out(n);
    for (double& v : out) v = detail::standard_normal(gen);
    return out;
}

void check_sigma(double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw Error(ErrorKind::InvalidSpec, "noise_sigma must be >= 0");
}

struct Generator {
    const SyntheticSpec& spec;
    std::mt19937_64 gen;
    std::vector<float> data;

    explicit Generator(const SyntheticSpec& s) : spec(s), gen(s.seed), data(s.shape.element_count()) {}

    std::size_t frame_size() const { return spec.shape.tokens * spec.shape.dim; }

    std::vector<float> operator()(const Iid&) {
        for (float& v : data) v = static_cast<float>(detail::standard_normal(gen));
        return std::move(data);
    }

    std::vector<float> operator()(const ClusteredFrames& model) {
        std::vector<std::vector<double>> templates;
        for (std::size_t k = 0; k < model.num_clusters; ++k) templates.push_back(normal_block(gen, frame_size()));
        const std::size_t frames = spec.shape.frames;
        for (std::size_t t = 0; t < frames; ++t) {
            const auto& tmpl = templates[t * model.num_clusters / frames];
            float* out = data.data() + t * frame_size();
            for (std::size_t i = 0; i < frame_size(); ++i) {
                const double noise = model.noise_sigma > 0.0 ? model.noise_sigma * detail::standard_normal(gen) : 0.0;
                out[i] = static_cast<float>(tmpl[i] + noise);
            }
        }
        return std::move(data);
    }

    std::vector<float> operator()(const OutlierFrame& model) {
        const std::size_t dim = spec.shape.dim;
        const auto center = normal_block(gen, dim);
        double center_sq = 0.0;
        for (double v : center) center_sq += v * v;

        auto tmpl = normal_block(gen, frame_size());
        for (std::size_t i = 0; i < frame_size(); ++i) tmpl[i] = center[i % dim] + kTemplateSpread * tmpl[i];

        for (std::size_t t = 0; t < spec.shape.frames; ++t) {
            float* out = data.data() + t * frame_size();
            if (t == model.outlier_index) {
                for (std::size_t m = 0; m < spec.shape.tokens; ++m) {
                    auto token = normal_block(gen, dim);
                    if (model.noise_sigma > 0.0) {
                        for (double& v : token) v += model.noise_sigma * detail::standard_normal(gen);
                    }
                    double along = 0.0;
                    for (std::size_t c = 0; c < dim; ++c) along += token[c] * center[c];
                    const double coef = center_sq > 0.0 ? along / center_sq : 0.0;
                    for (std::size_t c = 0; c < dim; ++c) out[m * dim + c] = static_cast<float>(token[c] - coef * center[c]);
                }
                continue;
            }
            for (std::size_t i = 0; i < frame_size(); ++i) {
                const double noise = model.noise_sigma > 0.0 ? model.noise_sigma * detail::standard_normal(gen) : 0.0;
                out[i] = static_cast<float>(tmpl[i] + noise);
            }
        }
        return std::move(data);
    }
};

}  // namespace

void validate(const SyntheticSpec& spec) {
    const auto& s = spec.shape;
    if (s.frames == 0 || s.tokens == 0 || s.dim == 0) throw Error(ErrorKind::InvalidSpec, "shape must be non-empty");
    if (const auto* clustered = std::get_if<ClusteredFrames>(&spec.model)) {
        if (clustered->num_clusters == 0 || clustered->num_clusters > s.frames) {
            throw Error(ErrorKind::InvalidSpec, "num_clusters must be in [1, frames]");
        }
        check_sigma(clustered->noise_sigma);
    }
    if (const auto* outlier = std::get_if<OutlierFrame>(&spec.model)) {
        if (outlier->outlier_index >= s.frames) {
            throw Error(ErrorKind::InvalidSpec, "outlier index " + std::to_string(outlier->outlier_index) +
                                                    " must be below frames=" + std::to_string(s.frames));
        }
        check_sigma(outlier->noise_sigma);
    }
}

TokenTensor generate(const SyntheticSpec& spec) {
    validate(spec);
    Generator generator(spec);
    return TokenTensor(spec.shape, std::visit(generator, spec.model));
}

}  // namespace vidcom
