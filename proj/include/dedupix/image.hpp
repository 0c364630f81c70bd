#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "dedupix/error.hpp"

namespace dedupix {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<uint8_t> data;

    GrayImage() = default;
    GrayImage(uint32_t w, uint32_t h, uint8_t fill = 0)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    uint8_t at(uint32_t x, uint32_t y) const { return data[static_cast<size_t>(y) * width + x]; }
    uint8_t& at(uint32_t x, uint32_t y) { return data[static_cast<size_t>(y) * width + x]; }

    /// Sample with edge-clamp replication; coordinates may be out of range.
    uint8_t at_clamped(int64_t x, int64_t y) const {
        if (x < 0) x = 0;
        if (y < 0) y = 0;
        if (x >= width) x = width - 1;
        if (y >= height) y = height - 1;
        return at(static_cast<uint32_t>(x), static_cast<uint32_t>(y));
    }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }

    bool operator==(const GrayImage&) const = default;
};

namespace detail {

inline int pgm_next_token(std::span<const uint8_t> bytes, size_t& pos, std::string& token) {
    // Skip whitespace and '#' comment lines between header fields.
    while (pos < bytes.size()) {
        uint8_t c = bytes[pos];
        if (c == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++pos;
        } else {
            break;
        }
    }
    token.clear();
    while (pos < bytes.size()) {
        uint8_t c = bytes[pos];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#') break;
        token.push_back(static_cast<char>(c));
        ++pos;
    }
    return token.empty() ? -1 : 0;
}

}  // namespace detail

/// Parse a binary PGM ("P5"). maxval above 255 is rejected.
inline GrayImage load_pgm(std::span<const uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
        throw MalformedHeader("not a binary PGM (missing P5 magic)");
    }
    size_t pos = 2;
    std::string tok;
    uint64_t fields[3];
    for (auto& field : fields) {
        if (detail::pgm_next_token(bytes, pos, tok) != 0) {
            throw MalformedHeader("incomplete PGM header");
        }
        try {
            field = std::stoull(tok);
        } catch (const std::exception&) {
            throw MalformedHeader("non-numeric PGM header field: " + tok);
        }
    }
    uint64_t w = fields[0], h = fields[1], maxval = fields[2];
    if (w == 0 || h == 0) throw MalformedHeader("zero PGM dimension");
    if (maxval == 0 || maxval > 255) {
        throw UnsupportedMaxval("PGM maxval " + std::to_string(maxval) + " not supported");
    }
    // Exactly one whitespace byte separates the header from the payload.
    if (pos >= bytes.size()) throw TruncatedPayload("PGM payload missing");
    ++pos;
    size_t need = static_cast<size_t>(w) * h;
    if (bytes.size() - pos < need) {
        throw TruncatedPayload("PGM payload has " + std::to_string(bytes.size() - pos) +
                               " bytes, header declares " + std::to_string(need));
    }
    GrayImage img;
    img.width = static_cast<uint32_t>(w);
    img.height = static_cast<uint32_t>(h);
    img.data.assign(bytes.begin() + pos, bytes.begin() + pos + need);
    return img;
}

/// Canonical binary PGM encoding: "P5\n<w> <h>\n255\n" + payload.
inline std::vector<uint8_t> save_pgm(const GrayImage& img) {
    std::string header =
        "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    std::vector<uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

inline GrayImage load_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot read " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return load_pgm(bytes);
}

inline void save_pgm_file(const std::string& path, const GrayImage& img) {
    std::vector<uint8_t> bytes = save_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    if (!out) throw IoFailure("short write to " + path);
}

/// BT.601 luma from interleaved RGBA; alpha is ignored.
inline GrayImage to_gray(std::span<const uint8_t> rgba, uint32_t width, uint32_t height) {
    size_t need = static_cast<size_t>(width) * height * 4;
    if (rgba.size() != need) {
        throw LengthMismatch("RGBA buffer is " + std::to_string(rgba.size()) +
                             " bytes, expected " + std::to_string(need));
    }
    GrayImage img(width, height);
    for (size_t p = 0; p < img.pixel_count(); ++p) {
        double luma = 0.299 * rgba[4 * p] + 0.587 * rgba[4 * p + 1] + 0.114 * rgba[4 * p + 2];
        img.data[p] = static_cast<uint8_t>(std::lround(luma));
    }
    return img;
}

}  // namespace dedupix
