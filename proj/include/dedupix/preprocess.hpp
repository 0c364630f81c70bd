#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "dedupix/image.hpp"

namespace dedupix {

/// Per-pixel Sobel gradients. magnitude is the L1 norm |gx| + |gy|.
struct GradientField {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<int32_t> gx;
    std::vector<int32_t> gy;
    std::vector<int32_t> magnitude;
    std::vector<double> direction;

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

struct EdgeMap {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<uint8_t> flags;  // 0 or 1 per pixel

    EdgeMap() = default;
    EdgeMap(uint32_t w, uint32_t h) : width(w), height(h), flags(static_cast<size_t>(w) * h, 0) {}

    bool is_edge(uint32_t x, uint32_t y) const {
        return flags[static_cast<size_t>(y) * width + x] != 0;
    }
    void set(uint32_t x, uint32_t y) { flags[static_cast<size_t>(y) * width + x] = 1; }

    size_t edge_count() const {
        size_t n = 0;
        for (uint8_t f : flags) n += f;
        return n;
    }

    GrayImage to_image() const {
        GrayImage img(width, height);
        for (size_t p = 0; p < flags.size(); ++p) img.data[p] = flags[p] ? 255 : 0;
        return img;
    }
};

/// Light-intensity field diffused outward from edge pixels.
struct PhotonMap {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<double> intensity;
    double epsilon = 0.0;
    double decay = 0.0;

    GrayImage to_image() const {
        GrayImage img(width, height);
        for (size_t p = 0; p < intensity.size(); ++p) {
            img.data[p] = static_cast<uint8_t>(std::lround(std::clamp(intensity[p], 0.0, 255.0)));
        }
        return img;
    }
};

inline GrayImage gaussian_smooth(const GrayImage& img, double sigma, uint32_t ksize) {
    if (ksize % 2 == 0 || ksize == 0 || ksize > std::min(img.width, img.height)) {
        throw BadKernelSize("kernel size " + std::to_string(ksize) + " invalid for " +
                            std::to_string(img.width) + "x" + std::to_string(img.height));
    }
    if (sigma <= 0.0) throw BadKernelSize("sigma must be positive");
    int half = static_cast<int>(ksize) / 2;
    std::vector<double> kernel(static_cast<size_t>(ksize) * ksize);
    double sum = 0.0;
    for (int ky = -half; ky <= half; ++ky) {
        for (int kx = -half; kx <= half; ++kx) {
            double w = std::exp(-(kx * kx + ky * ky) / (2.0 * sigma * sigma));
            kernel[static_cast<size_t>(ky + half) * ksize + (kx + half)] = w;
            sum += w;
        }
    }
    for (double& w : kernel) w /= sum;

    GrayImage out(img.width, img.height);
    for (uint32_t y = 0; y < img.height; ++y) {
        for (uint32_t x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int ky = -half; ky <= half; ++ky) {
                for (int kx = -half; kx <= half; ++kx) {
                    acc += kernel[static_cast<size_t>(ky + half) * ksize + (kx + half)] *
                           img.at_clamped(static_cast<int64_t>(x) + kx,
                                          static_cast<int64_t>(y) + ky);
                }
            }
            out.at(x, y) = static_cast<uint8_t>(std::clamp<long>(std::lround(acc), 0, 255));
        }
    }
    return out;
}

inline GradientField sobel_gradients(const GrayImage& img) {
    if (img.width < 3 || img.height < 3) {
        throw ImageTooSmall("sobel needs at least 3x3, got " + std::to_string(img.width) + "x" +
                            std::to_string(img.height));
    }
    GradientField f;
    f.width = img.width;
    f.height = img.height;
    f.gx.resize(f.pixel_count());
    f.gy.resize(f.pixel_count());
    f.magnitude.resize(f.pixel_count());
    f.direction.resize(f.pixel_count());
    for (uint32_t y = 0; y < img.height; ++y) {
        for (uint32_t x = 0; x < img.width; ++x) {
            auto s = [&](int dx, int dy) -> int32_t {
                return img.at_clamped(static_cast<int64_t>(x) + dx, static_cast<int64_t>(y) + dy);
            };
            int32_t gx = -s(-1, -1) + s(1, -1) - 2 * s(-1, 0) + 2 * s(1, 0) - s(-1, 1) + s(1, 1);
            int32_t gy = -s(-1, -1) - 2 * s(0, -1) - s(1, -1) + s(-1, 1) + 2 * s(0, 1) + s(1, 1);
            size_t p = static_cast<size_t>(y) * img.width + x;
            f.gx[p] = gx;
            f.gy[p] = gy;
            f.magnitude[p] = std::abs(gx) + std::abs(gy);
            f.direction[p] = std::atan2(static_cast<double>(gy), static_cast<double>(gx));
        }
    }
    return f;
}

/// Nearest of {0, 45, 90, 135} degrees modulo 180, ties toward the smaller angle.
inline int quantize_direction(double theta) {
    double deg = theta * 180.0 / 3.14159265358979323846;
    deg = std::fmod(deg, 180.0);
    if (deg < 0.0) deg += 180.0;
    int best = 0;
    double best_dist = 1e9;
    for (int cand : {0, 45, 90, 135}) {
        double d = std::abs(deg - cand);
        d = std::min(d, 180.0 - d);  // circular distance modulo 180
        if (d < best_dist - 1e-12) {
            best_dist = d;
            best = cand;
        }
    }
    return best;
}

inline std::vector<int32_t> non_max_suppress(const GradientField& f) {
    // Signed 45-degree sectors; the plateau tie-break is strict toward the
    // gradient vector, which keeps the rule equivariant under grid rotations.
    static const int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    static const int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    std::vector<int32_t> out(f.pixel_count(), 0);
    for (uint32_t y = 1; y + 1 < f.height; ++y) {
        for (uint32_t x = 1; x + 1 < f.width; ++x) {
            size_t p = static_cast<size_t>(y) * f.width + x;
            double deg = f.direction[p] * 180.0 / 3.14159265358979323846;
            if (deg < 0.0) deg += 360.0;
            int sector = static_cast<int>(std::floor(deg / 45.0 + 0.5)) % 8;
            int dx = kDx[sector], dy = kDy[sector];
            int32_t m = f.magnitude[p];
            int32_t a = f.magnitude[static_cast<size_t>(y + dy) * f.width + (x + dx)];
            int32_t b = f.magnitude[static_cast<size_t>(y - dy) * f.width + (x - dx)];
            if (m > a && m >= b) out[p] = m;
        }
    }
    return out;
}

inline EdgeMap hysteresis(const std::vector<int32_t>& thinned, uint32_t width, uint32_t height,
                          int32_t low, int32_t high) {
    if (low < 0 || low >= high) {
        throw BadThresholds("need 0 <= low < high, got low=" + std::to_string(low) +
                            " high=" + std::to_string(high));
    }
    EdgeMap edges(width, height);
    std::vector<std::pair<uint32_t, uint32_t>> stack;
    for (uint32_t y = 0; y < height; ++y) {
        for (uint32_t x = 0; x < width; ++x) {
            if (thinned[static_cast<size_t>(y) * width + x] >= high && !edges.is_edge(x, y)) {
                edges.set(x, y);
                stack.emplace_back(x, y);
                while (!stack.empty()) {
                    auto [cx, cy] = stack.back();
                    stack.pop_back();
                    for (int dy = -1; dy <= 1; ++dy) {
                        for (int dx = -1; dx <= 1; ++dx) {
                            int64_t nx = static_cast<int64_t>(cx) + dx;
                            int64_t ny = static_cast<int64_t>(cy) + dy;
                            if (nx < 0 || ny < 0 || nx >= width || ny >= height) continue;
                            auto ux = static_cast<uint32_t>(nx);
                            auto uy = static_cast<uint32_t>(ny);
                            if (edges.is_edge(ux, uy)) continue;
                            if (thinned[static_cast<size_t>(uy) * width + ux] >= low) {
                                edges.set(ux, uy);
                                stack.emplace_back(ux, uy);
                            }
                        }
                    }
                }
            }
        }
    }
    return edges;
}

inline EdgeMap canny(const GrayImage& img, double sigma, uint32_t ksize, int32_t low,
                     int32_t high) {
    GrayImage smooth = gaussian_smooth(img, sigma, ksize);
    GradientField field = sobel_gradients(smooth);
    std::vector<int32_t> thinned = non_max_suppress(field);
    return hysteresis(thinned, img.width, img.height, low, high);
}

/// Otsu threshold plus the resulting 0/1 raster; pixels > threshold map to 1.
inline std::pair<std::vector<uint8_t>, uint8_t> binarize_otsu(const GrayImage& img) {
    if (img.data.empty()) throw EmptyImage("cannot binarize an empty image");
    uint64_t hist[256] = {};
    for (uint8_t v : img.data) ++hist[v];
    size_t total = img.pixel_count();

    auto minmax = std::minmax_element(img.data.begin(), img.data.end());
    uint8_t threshold;
    if (*minmax.first == *minmax.second) {
        threshold = *minmax.first;  // degenerate constant image
    } else {
        double total_mean = 0.0;
        for (int v = 0; v < 256; ++v) total_mean += static_cast<double>(v) * hist[v];
        total_mean /= static_cast<double>(total);

        int best_t = 0;
        double best_var = -1.0;
        uint64_t w0 = 0;
        double sum0 = 0.0;
        for (int t = 0; t < 256; ++t) {
            w0 += hist[t];
            sum0 += static_cast<double>(t) * hist[t];
            uint64_t w1 = total - w0;
            if (w0 == 0 || w1 == 0) continue;
            double mu0 = sum0 / static_cast<double>(w0);
            double mu1 = (total_mean * static_cast<double>(total) - sum0) / static_cast<double>(w1);
            double var = static_cast<double>(w0) * static_cast<double>(w1) * (mu0 - mu1) *
                         (mu0 - mu1);
            if (var > best_var) {
                best_var = var;
                best_t = t;
            }
        }
        threshold = static_cast<uint8_t>(best_t);
    }

    std::vector<uint8_t> binary(total);
    for (size_t p = 0; p < total; ++p) binary[p] = img.data[p] > threshold ? 1 : 0;
    return {std::move(binary), threshold};
}

/// Ring-synchronous diffusion from edge pixels: each ring takes decay times the
/// mean of its already-assigned 8-neighbors from earlier rings; values that fall
/// below epsilon become 0 and stop propagating.
inline PhotonMap photon_map(const EdgeMap& edges, double epsilon, double decay) {
    if (!(decay > 0.0 && decay < 1.0)) throw BadDecay("decay must be in (0,1)");
    if (!(epsilon > 0.0)) throw BadEpsilon("epsilon must be positive");

    PhotonMap pm;
    pm.width = edges.width;
    pm.height = edges.height;
    pm.epsilon = epsilon;
    pm.decay = decay;
    pm.intensity.assign(edges.flags.size(), 0.0);

    std::vector<uint8_t> assigned(edges.flags.size(), 0);
    std::vector<size_t> frontier;
    for (uint32_t y = 0; y < edges.height; ++y) {
        for (uint32_t x = 0; x < edges.width; ++x) {
            if (edges.is_edge(x, y)) {
                size_t p = static_cast<size_t>(y) * edges.width + x;
                pm.intensity[p] = 255.0;
                assigned[p] = 1;
                frontier.push_back(p);
            }
        }
    }

    while (!frontier.empty()) {
        // Collect the next ring in row-major order.
        std::vector<uint8_t> in_ring(edges.flags.size(), 0);
        for (size_t p : frontier) {
            uint32_t x = static_cast<uint32_t>(p % edges.width);
            uint32_t y = static_cast<uint32_t>(p / edges.width);
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    int64_t nx = static_cast<int64_t>(x) + dx;
                    int64_t ny = static_cast<int64_t>(y) + dy;
                    if (nx < 0 || ny < 0 || nx >= edges.width || ny >= edges.height) continue;
                    size_t np = static_cast<size_t>(ny) * edges.width + nx;
                    if (!assigned[np]) in_ring[np] = 1;
                }
            }
        }
        std::vector<size_t> ring;
        for (size_t p = 0; p < in_ring.size(); ++p) {
            if (in_ring[p]) ring.push_back(p);
        }
        if (ring.empty()) break;

        // Values for the whole ring come from earlier rings only.
        std::vector<double> values(ring.size(), 0.0);
        for (size_t r = 0; r < ring.size(); ++r) {
            size_t p = ring[r];
            uint32_t x = static_cast<uint32_t>(p % edges.width);
            uint32_t y = static_cast<uint32_t>(p / edges.width);
            double sum = 0.0;
            int count = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    int64_t nx = static_cast<int64_t>(x) + dx;
                    int64_t ny = static_cast<int64_t>(y) + dy;
                    if (nx < 0 || ny < 0 || nx >= edges.width || ny >= edges.height) continue;
                    size_t np = static_cast<size_t>(ny) * edges.width + nx;
                    if (assigned[np]) {
                        sum += pm.intensity[np];
                        ++count;
                    }
                }
            }
            values[r] = count > 0 ? decay * sum / count : 0.0;
        }

        frontier.clear();
        for (size_t r = 0; r < ring.size(); ++r) {
            size_t p = ring[r];
            assigned[p] = 1;
            if (values[r] >= epsilon) {
                pm.intensity[p] = values[r];
                frontier.push_back(p);
            }
            // Below epsilon the pixel stays 0 and does not propagate.
        }
    }
    return pm;
}

}  // namespace dedupix
