#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "vidcom/token_tensor.hpp"

namespace vtest {

using namespace vidcom;

inline TokenTensor make_tensor(Shape shape, std::vector<float> data) { return TokenTensor(shape, std::move(data)); }

/// Random tensor with entries in [-1, 1]; with `quantize` the entries are
/// drawn from a small grid so ties and exact zeros show up.
inline TokenTensor random_tensor(std::mt19937_64& gen, Shape shape, bool quantize = false) {
    std::uniform_real_distribution<float> real(-1.0f, 1.0f);
    std::uniform_int_distribution<int> grid(-2, 2);
    std::vector<float> data(shape.element_count());
    for (float& v : data) v = quantize ? static_cast<float>(grid(gen)) * 0.5f : real(gen);
    return TokenTensor(shape, std::move(data));
}

inline Shape random_shape(std::mt19937_64& gen, std::size_t max_frames, std::size_t max_tokens, std::size_t max_dim) {
    auto pick = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(1, hi)(gen); };
    const std::size_t frames = pick(max_frames);
    const std::size_t tokens = pick(max_tokens);
    const std::size_t dim = pick(max_dim);
    return {frames, tokens, dim};
}

inline TokenTensor scaled(const TokenTensor& x, float factor) {
    std::vector<float> data(x.data().begin(), x.data().end());
    for (float& v : data) v *= factor;
    return TokenTensor(x.shape(), std::move(data));
}

}  // namespace vtest
