#include "vidcom/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>

namespace vidcom {

namespace {

constexpr char kMagic[4] = {'V', 'T', 'K', '1'};

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFF));
}

std::uint16_t get_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint32_t checked_u32(std::size_t v, const char* what) {
    if (v > 0xFFFFFFFFu) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " does not fit in 32 bits");
    return static_cast<std::uint32_t>(v);
}

std::string format_g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::vector<std::uint8_t> encode_vtok(const TokenTensor& tensor) {
    std::vector<std::uint8_t> out;
    out.reserve(kVtokHeaderSize + 4 * tensor.data().size());
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
    put_u16(out, kVtokVersion);
    put_u32(out, checked_u32(tensor.frames(), "frames"));
    put_u32(out, checked_u32(tensor.tokens(), "tokens"));
    put_u32(out, checked_u32(tensor.dim(), "dim"));
    for (float v : tensor.data()) put_u32(out, std::bit_cast<std::uint32_t>(v));
    return out;
}

TokenTensor decode_vtok(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw Error(ErrorKind::BadMagic, "missing VTK1 magic");
    }
    if (bytes.size() < kVtokHeaderSize) throw Error(ErrorKind::TruncatedPayload, "header shorter than 18 bytes");
    const std::uint16_t version = get_u16(bytes.data() + 4);
    if (version != kVtokVersion) throw Error(ErrorKind::BadVersion, "unsupported version " + std::to_string(version));

    const Shape shape{get_u32(bytes.data() + 6), get_u32(bytes.data() + 10), get_u32(bytes.data() + 14)};
    if (shape.frames == 0 || shape.tokens == 0 || shape.dim == 0) {
        throw Error(ErrorKind::DimensionMismatch, "header has a zero dimension");
    }
    const auto payload = static_cast<unsigned __int128>(bytes.size() - kVtokHeaderSize);
    const auto expected = static_cast<unsigned __int128>(shape.frames) * shape.tokens * shape.dim * 4;
    if (payload < expected) throw Error(ErrorKind::TruncatedPayload, "payload shorter than header shape");
    if (payload > expected) throw Error(ErrorKind::DimensionMismatch, "trailing bytes after payload");

    std::vector<float> data(shape.element_count());
    const std::uint8_t* p = bytes.data() + kVtokHeaderSize;
    for (std::size_t i = 0; i < data.size(); ++i, p += 4) data[i] = std::bit_cast<float>(get_u32(p));
    return TokenTensor(shape, std::move(data));
}

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::Io, "write failed: " + path.string());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    write_bytes(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

void write_vtok(const TokenTensor& tensor, const std::filesystem::path& path) {
    write_bytes(path, encode_vtok(tensor));
}

TokenTensor read_vtok(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(ErrorKind::Io, "read failed: " + path.string());
    return decode_vtok(bytes);
}

std::string format_frame_scores(const std::vector<double>& frame_uniqueness, const BudgetAllocation& allocation) {
    const std::size_t frames = allocation.per_frame_count.size();
    if (frame_uniqueness.size() != frames || allocation.frame_weight.size() != frames ||
        allocation.per_frame_ratio.size() != frames) {
        throw Error(ErrorKind::ShapeMismatch, "report and allocation disagree on frame count");
    }
    std::string out = "frame,u_t,sigma_t,r_t,k_t\n";
    for (std::size_t t = 0; t < frames; ++t) {
        out += std::to_string(t) + ',' + format_g6(frame_uniqueness[t]) + ',' + format_g6(allocation.frame_weight[t]) +
               ',' + format_g6(allocation.per_frame_ratio[t]) + ',' + std::to_string(allocation.per_frame_count[t]) +
               '\n';
    }
    return out;
}

void export_scores(const ScoreReport& report, const BudgetAllocation& allocation, const std::filesystem::path& path) {
    write_text(path, format_frame_scores(report.frame_uniqueness, allocation));
}

std::string format_token_scores(const ScoreReport& report) {
    std::string out = "frame,token,u_video,u_frame,u\n";
    for (std::size_t t = 0; t < report.combined_score.frames(); ++t) {
        for (std::size_t m = 0; m < report.combined_score.tokens(); ++m) {
            out += std::to_string(t) + ',' + std::to_string(m) + ',' + format_g6(report.video_score.at(t, m)) + ',' +
                   format_g6(report.frame_score.at(t, m)) + ',' + format_g6(report.combined_score.at(t, m)) + '\n';
        }
    }
    return out;
}

std::string format_kept_indices(const CompressedSelection& selection) {
    std::string out = "frame,slot,index\n";
    for (std::size_t t = 0; t < selection.frames(); ++t) {
        const auto& kept = selection.kept_indices[t];
        for (std::size_t slot = 0; slot < kept.size(); ++slot) {
            out += std::to_string(t) + ',' + std::to_string(slot) + ',' + std::to_string(kept[slot]) + '\n';
        }
    }
    return out;
}

TokenTensor pad_selection(const CompressedSelection& selection) {
    const std::size_t width = selection.max_kept();
    const Shape shape{selection.frames(), width, selection.dim};
    std::vector<float> data(shape.element_count(), 0.0f);
    const float* src = selection.values.data();
    for (std::size_t t = 0; t < selection.frames(); ++t) {
        const std::size_t count = selection.kept_indices[t].size() * selection.dim;
        std::memcpy(data.data() + t * width * selection.dim, src, count * sizeof(float));
        src += count;
    }
    return TokenTensor(shape, std::move(data));
}

}  // namespace vidcom
