#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dedupix/image.hpp"

namespace dedupix {

/// One tile of the fixed chunk grid.
struct ImageChunk {
    uint16_t row = 0;
    uint16_t col = 0;
    uint32_t chunk_px = 0;
    std::vector<uint8_t> pixels;  // chunk_px * chunk_px, row-major
    bool homogeneous = false;
    std::optional<std::string> label;

    uint8_t at(uint32_t x, uint32_t y) const { return pixels[static_cast<size_t>(y) * chunk_px + x]; }
};

struct ChunkGrid {
    uint16_t rows = 0;
    uint16_t cols = 0;
    uint32_t chunk_px = 0;
    uint32_t orig_w = 0;
    uint32_t orig_h = 0;
    std::vector<ImageChunk> chunks;  // row-major

    const ImageChunk& at(uint16_t i, uint16_t j) const {
        return chunks[static_cast<size_t>(i) * cols + j];
    }
};

struct QuadtreeNode {
    uint32_t depth = 0;
    uint32_t x = 0, y = 0, side = 0;
    double mean_intensity = 0.0;
    bool homogeneous = false;
    std::vector<std::unique_ptr<QuadtreeNode>> children;  // empty or exactly 4

    bool is_leaf() const { return children.empty(); }

    size_t leaf_count() const {
        if (is_leaf()) return 1;
        size_t n = 0;
        for (const auto& c : children) n += c->leaf_count();
        return n;
    }
};

namespace detail {

inline uint32_t next_pow2(uint32_t v) {
    uint32_t p = 1;
    while (p < v) p <<= 1;
    return p;
}

/// Pad to a power-of-two square (at least min_side) by edge replication.
inline GrayImage pad_to_square(const GrayImage& img, uint32_t min_side) {
    uint32_t side = std::max(next_pow2(std::max(img.width, img.height)), min_side);
    if (side == img.width && side == img.height) return img;
    GrayImage out(side, side);
    for (uint32_t y = 0; y < side; ++y) {
        for (uint32_t x = 0; x < side; ++x) {
            out.at(x, y) = img.at_clamped(x, y);
        }
    }
    return out;
}

inline void minmax_mean(const GrayImage& img, uint32_t x0, uint32_t y0, uint32_t side,
                        uint8_t& lo, uint8_t& hi, double& mean) {
    lo = 255;
    hi = 0;
    uint64_t sum = 0;
    for (uint32_t y = y0; y < y0 + side; ++y) {
        for (uint32_t x = x0; x < x0 + side; ++x) {
            uint8_t v = img.at(x, y);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
    }
    mean = static_cast<double>(sum) / (static_cast<double>(side) * side);
}

inline std::unique_ptr<QuadtreeNode> build_node(const GrayImage& padded, uint32_t x, uint32_t y,
                                                uint32_t side, uint32_t depth, uint32_t max_depth,
                                                uint8_t hom_threshold) {
    auto node = std::make_unique<QuadtreeNode>();
    node->depth = depth;
    node->x = x;
    node->y = y;
    node->side = side;
    uint8_t lo, hi;
    detail::minmax_mean(padded, x, y, side, lo, hi, node->mean_intensity);
    node->homogeneous = (hi - lo) <= hom_threshold;
    if (!node->homogeneous && depth < max_depth && side > 1) {
        uint32_t h = side / 2;
        node->children.push_back(build_node(padded, x, y, h, depth + 1, max_depth, hom_threshold));
        node->children.push_back(
            build_node(padded, x + h, y, h, depth + 1, max_depth, hom_threshold));
        node->children.push_back(
            build_node(padded, x, y + h, h, depth + 1, max_depth, hom_threshold));
        node->children.push_back(
            build_node(padded, x + h, y + h, h, depth + 1, max_depth, hom_threshold));
    }
    return node;
}

}  // namespace detail

/// Adaptive quadtree over the padded square; splits stop at homogeneity or max_depth.
inline std::unique_ptr<QuadtreeNode> build_quadtree(const GrayImage& img, uint32_t max_depth,
                                                    uint8_t hom_threshold) {
    if (img.data.empty()) throw EmptyImage("cannot build quadtree of an empty image");
    GrayImage padded = detail::pad_to_square(img, 1u << max_depth);
    return detail::build_node(padded, 0, 0, padded.width, 0, max_depth, hom_threshold);
}

/// Uniform 2^depth x 2^depth grid of square chunks over the padded image.
inline ChunkGrid chunk_grid(const GrayImage& img, uint32_t depth, uint8_t hom_threshold) {
    if (img.data.empty()) throw EmptyImage("cannot chunk an empty image");
    uint32_t n = 1u << depth;
    GrayImage padded = detail::pad_to_square(img, n);
    ChunkGrid grid;
    grid.rows = static_cast<uint16_t>(n);
    grid.cols = static_cast<uint16_t>(n);
    grid.chunk_px = padded.width / n;
    grid.orig_w = img.width;
    grid.orig_h = img.height;
    grid.chunks.reserve(static_cast<size_t>(n) * n);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
            ImageChunk chunk;
            chunk.row = static_cast<uint16_t>(i);
            chunk.col = static_cast<uint16_t>(j);
            chunk.chunk_px = grid.chunk_px;
            chunk.pixels.resize(static_cast<size_t>(grid.chunk_px) * grid.chunk_px);
            uint8_t lo = 255, hi = 0;
            for (uint32_t y = 0; y < grid.chunk_px; ++y) {
                for (uint32_t x = 0; x < grid.chunk_px; ++x) {
                    uint8_t v = padded.at(j * grid.chunk_px + x, i * grid.chunk_px + y);
                    chunk.pixels[static_cast<size_t>(y) * grid.chunk_px + x] = v;
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
            chunk.homogeneous = (hi - lo) <= hom_threshold;
            grid.chunks.push_back(std::move(chunk));
        }
    }
    return grid;
}

/// Tile the chunks back together and crop away the padding.
inline GrayImage reassemble(const ChunkGrid& grid, uint32_t orig_w, uint32_t orig_h) {
    std::vector<std::pair<uint16_t, uint16_t>> missing;
    size_t expected = static_cast<size_t>(grid.rows) * grid.cols;
    size_t chunk_bytes = static_cast<size_t>(grid.chunk_px) * grid.chunk_px;
    for (uint16_t i = 0; i < grid.rows; ++i) {
        for (uint16_t j = 0; j < grid.cols; ++j) {
            size_t idx = static_cast<size_t>(i) * grid.cols + j;
            if (idx >= grid.chunks.size() || grid.chunks[idx].pixels.size() != chunk_bytes) {
                missing.emplace_back(i, j);
            }
        }
    }
    if (grid.chunks.size() != expected || !missing.empty()) {
        if (missing.empty()) missing.emplace_back(0, 0);
        throw MissingChunk(std::move(missing));
    }
    GrayImage out(orig_w, orig_h);
    for (uint32_t y = 0; y < orig_h; ++y) {
        for (uint32_t x = 0; x < orig_w; ++x) {
            const ImageChunk& chunk = grid.at(static_cast<uint16_t>(y / grid.chunk_px),
                                              static_cast<uint16_t>(x / grid.chunk_px));
            out.at(x, y) = chunk.at(x % grid.chunk_px, y % grid.chunk_px);
        }
    }
    return out;
}

}  // namespace dedupix
