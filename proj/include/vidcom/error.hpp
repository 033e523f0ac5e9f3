#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vidcom {

enum class ErrorKind {
    DimensionMismatch,
    NonFinite,
    LengthMismatch,
    ShapeMismatch,
    WindowOutOfRange,
    KExceedsM,
    InvalidConfig,
    InvalidSpec,
    BadMagic,
    BadVersion,
    TruncatedPayload,
    Io,
};

/// Stable kebab-case name, used as the CLI error prefix (`error: <name>`).
std::string_view error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), m_kind(kind) {}

    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

}  // namespace vidcom
