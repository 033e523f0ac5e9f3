#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "vidcom/token_tensor.hpp"

namespace vidcom {

/// Every token drawn independently from N(0, 1).
struct Iid {};

/// num_clusters random frame templates; frames are assigned to templates in
/// contiguous runs (frame t -> template t * num_clusters / T) and each token
/// is its template token plus N(0, noise_sigma^2) noise.
struct ClusteredFrames {
    std::size_t num_clusters = 1;
    double noise_sigma = 0.0;
};

/// A shared template built around a common center direction; every frame
/// but outlier_index repeats it (plus noise). The outlier frame's tokens are
/// fresh draws with the center component projected out.
struct OutlierFrame {
    std::size_t outlier_index = 0;
    double noise_sigma = 0.0;
};

using RedundancyModel = std::variant<Iid, ClusteredFrames, OutlierFrame>;

struct SyntheticSpec {
    Shape shape{1, 1, 1};
    RedundancyModel model = Iid{};
    std::uint64_t seed = 0;
};

/// Throws InvalidSpec when the shape is empty, outlier_index >= T,
/// num_clusters is 0 or > T, or noise_sigma is negative/non-finite.
void validate(const SyntheticSpec& spec);

/// Deterministic per (spec, seed) on every platform: mt19937_64 driving a
/// hand-rolled Box-Muller transform.
TokenTensor generate(const SyntheticSpec& spec);

}  // namespace vidcom
