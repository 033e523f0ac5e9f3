#include "vidcom/error.hpp"

namespace vidcom {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::NonFinite: return "non-finite";
        case ErrorKind::LengthMismatch: return "length-mismatch";
        case ErrorKind::ShapeMismatch: return "shape-mismatch";
        case ErrorKind::WindowOutOfRange: return "window-out-of-range";
        case ErrorKind::KExceedsM: return "k-exceeds-m";
        case ErrorKind::InvalidConfig: return "invalid-config";
        case ErrorKind::InvalidSpec: return "invalid-spec";
        case ErrorKind::BadMagic: return "bad-magic";
        case ErrorKind::BadVersion: return "bad-version";
        case ErrorKind::TruncatedPayload: return "truncated-payload";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace vidcom
