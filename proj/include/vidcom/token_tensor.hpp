#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vidcom/error.hpp"

namespace vidcom {

struct Shape {
    std::size_t frames = 0;
    std::size_t tokens = 0;  // per frame
    std::size_t dim = 0;

    std::size_t token_count() const noexcept { return frames * tokens; }
    std::size_t element_count() const noexcept { return frames * tokens * dim; }

    friend bool operator==(const Shape&, const Shape&) = default;
};

struct ValidationIssue {
    ErrorKind kind;
    std::size_t index = 0;  // first offending flat index for NonFinite
    std::string message;
};

/// Checks the shape/length/finiteness invariants of a token block.
/// Returns std::nullopt when the data is a legal TokenTensor payload.
std::optional<ValidationIssue> validate(const Shape& shape, std::span<const float> data);

/// Dense frames x tokens x dim block of float embeddings, row-major in
/// (frame, token, channel) order. Immutable once constructed; construction
/// validates and throws vidcom::Error on violation.
class TokenTensor {
public:
    TokenTensor(Shape shape, std::vector<float> data);

    const Shape& shape() const noexcept { return m_shape; }
    std::size_t frames() const noexcept { return m_shape.frames; }
    std::size_t tokens() const noexcept { return m_shape.tokens; }
    std::size_t dim() const noexcept { return m_shape.dim; }

    std::span<const float> data() const noexcept { return m_data; }

    std::span<const float> token(std::size_t frame, std::size_t index) const noexcept {
        return {m_data.data() + (frame * m_shape.tokens + index) * m_shape.dim, m_shape.dim};
    }

    std::span<const float> frame(std::size_t frame) const noexcept {
        return {m_data.data() + frame * m_shape.tokens * m_shape.dim, m_shape.tokens * m_shape.dim};
    }

    friend bool operator==(const TokenTensor&, const TokenTensor&) = default;

private:
    Shape m_shape;
    std::vector<float> m_data;
};

/// Cosine similarity accumulated in double precision, channels in ascending
/// order. Zero-norm operands yield 0; the result is clamped to [-1, 1].
/// Throws LengthMismatch when the operands differ in length.
double cosine(std::span<const float> a, std::span<const float> b);
double cosine(std::span<const float> a, std::span<const double> b);

}  // namespace vidcom
