#include "vidcom/token_tensor.hpp"

#include <cmath>
#include <utility>

#include "cosine_detail.hpp"

namespace vidcom {

std::optional<ValidationIssue> validate(const Shape& shape, std::span<const float> data) {
    if (shape.frames == 0 || shape.tokens == 0 || shape.dim == 0) {
        return ValidationIssue{ErrorKind::DimensionMismatch, 0,
                               "frames, tokens and dim must all be at least 1"};
    }
    if (data.size() != shape.element_count()) {
        return ValidationIssue{ErrorKind::DimensionMismatch, 0,
                               "data length " + std::to_string(data.size()) + " != " +
                                   std::to_string(shape.frames) + "x" + std::to_string(shape.tokens) + "x" +
                                   std::to_string(shape.dim)};
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!std::isfinite(data[i])) {
            return ValidationIssue{ErrorKind::NonFinite, i, "non-finite value at flat index " + std::to_string(i)};
        }
    }
    return std::nullopt;
}

TokenTensor::TokenTensor(Shape shape, std::vector<float> data) : m_shape(shape), m_data(std::move(data)) {
    if (auto issue = validate(m_shape, m_data)) {
        throw Error(issue->kind, issue->message);
    }
}

double cosine(std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, "cosine operands differ in length");
    }
    return detail::cosine_kernel(a.data(), b.data(), a.size());
}

double cosine(std::span<const float> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, "cosine operands differ in length");
    }
    return detail::cosine_kernel(a.data(), b.data(), a.size());
}

}  // namespace vidcom
