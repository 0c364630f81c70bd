#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "dedupix/error.hpp"
#include "dedupix/image.hpp"
#include "dedupix/rng.hpp"

namespace dedupix {

/// One 512x512 synthetic "cross-section": flat background, a shared elliptical
/// body every image has in common, and per-image blobs. Blob count and radii
/// are tuned so about 65% of depth-3 chunks repeat across a 100-image corpus.
inline GrayImage make_synthetic_image(uint64_t corpus_seed, uint32_t index) {
    constexpr uint32_t kSide = 512;
    GrayImage img;
    img.width = kSide;
    img.height = kSide;
    img.data.assign(static_cast<size_t>(kSide) * kSide, 30);

    // Shared body, identical in every image of the corpus.
    constexpr double cx = 255.5, cy = 255.5, rx = 180.0, ry = 140.0;
    for (uint32_t y = 0; y < kSide; ++y) {
        for (uint32_t x = 0; x < kSide; ++x) {
            double dx = (x - cx) / rx;
            double dy = (y - cy) / ry;
            if (dx * dx + dy * dy <= 1.0) img.data[y * kSide + x] = 90;
        }
    }

    Rng rng(corpus_seed * 0x9E3779B97F4A7C15ULL + index + 1);
    uint32_t blobs = 18 + static_cast<uint32_t>(rng.next_below(5));  // 18..22
    for (uint32_t b = 0; b < blobs; ++b) {
        double bx = cx + (rng.next_double() * 2.0 - 1.0) * (rx - 40.0);
        double by = cy + (rng.next_double() * 2.0 - 1.0) * (ry - 40.0);
        double br = 16.0 + rng.next_double() * 28.0;
        uint8_t val = static_cast<uint8_t>(110 + rng.next_below(120));
        int x0 = std::max(0, static_cast<int>(bx - br));
        int x1 = std::min<int>(kSide - 1, static_cast<int>(bx + br) + 1);
        int y0 = std::max(0, static_cast<int>(by - br));
        int y1 = std::min<int>(kSide - 1, static_cast<int>(by + br) + 1);
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                double dx = x - bx, dy = y - by;
                if (dx * dx + dy * dy <= br * br) {
                    img.data[static_cast<size_t>(y) * kSide + x] = val;
                }
            }
        }
    }
    return img;
}

/// Write `count` images as img_0000.pgm .. into out_dir.
inline std::vector<std::filesystem::path> make_synthetic_corpus(
    const std::filesystem::path& out_dir, uint32_t count, uint64_t seed) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoFailure("cannot create " + out_dir.string());
    std::vector<std::filesystem::path> paths;
    for (uint32_t i = 0; i < count; ++i) {
        GrayImage img = make_synthetic_image(seed, i);
        char name[32];
        std::snprintf(name, sizeof(name), "img_%04u.pgm", i);
        std::filesystem::path path = out_dir / name;
        std::vector<uint8_t> bytes = save_pgm(img);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot write " + path.string());
        out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        paths.push_back(path);
    }
    return paths;
}

}  // namespace dedupix
