#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vidcom/token_tensor.hpp"
#include "vidcom/types.hpp"

namespace vidcom {

// .vtok layout, all little-endian:
//   offset 0   4 bytes  magic "VTK1"
//   offset 4   u16      version (1)
//   offset 6   u32      frames
//   offset 10  u32      tokens per frame
//   offset 14  u32      dim
//   offset 18  f32[frames * tokens * dim], (frame, token, channel) order
inline constexpr std::size_t kVtokHeaderSize = 18;
inline constexpr std::uint16_t kVtokVersion = 1;

std::vector<std::uint8_t> encode_vtok(const TokenTensor& tensor);
/// Throws BadMagic, BadVersion, TruncatedPayload, DimensionMismatch
/// (trailing bytes) or NonFinite.
TokenTensor decode_vtok(std::span<const std::uint8_t> bytes);

void write_vtok(const TokenTensor& tensor, const std::filesystem::path& path);
TokenTensor read_vtok(const std::filesystem::path& path);

/// `frame,u_t,sigma_t,r_t,k_t` CSV, one row per frame, %.6g, LF endings.
std::string format_frame_scores(const std::vector<double>& frame_uniqueness,
                                const BudgetAllocation& allocation);
void export_scores(const ScoreReport& report, const BudgetAllocation& allocation,
                   const std::filesystem::path& path);

/// `frame,token,u_video,u_frame,u` CSV, one row per token.
std::string format_token_scores(const ScoreReport& report);

/// `frame,slot,index` CSV listing each retained index; frames with fewer
/// than max k_t tokens simply have fewer rows.
std::string format_kept_indices(const CompressedSelection& selection);

/// Packs a selection into a frames x max(k_t) x dim tensor, zero-padding
/// slots past each frame's k_t.
TokenTensor pad_selection(const CompressedSelection& selection);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace vidcom
