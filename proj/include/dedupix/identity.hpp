#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dedupix/brief_pattern.hpp"
#include "dedupix/error.hpp"
#include "dedupix/quadtree.hpp"
#include "dedupix/tiger.hpp"

namespace dedupix {

struct Keypoint {
    uint32_t x = 0;
    uint32_t y = 0;
    int32_t score = 0;
    double orientation = 0.0;  // radians, from the intensity centroid
};

struct Descriptor {
    uint8_t cell_x = 0;  // keypoint position quantized to an 8x8 grid
    uint8_t cell_y = 0;
    std::array<uint8_t, 32> bits{};

    auto key() const { return std::tuple(cell_y, cell_x, bits); }
    bool operator==(const Descriptor&) const = default;
};

enum class FeatureKind : uint8_t { Keypoints = 0, Fallback = 1 };

/// Canonical per-chunk content identity. Keypoint-based when corners exist,
/// otherwise a histogram + mean fallback so featureless chunks still hash by
/// content.
struct FeatureVector {
    FeatureKind kind = FeatureKind::Fallback;
    std::vector<Descriptor> descriptors;      // sorted by (cell_y, cell_x, bits)
    std::array<uint8_t, 16> histogram{};      // L1-normalized, quantized to 8 bits
    uint8_t mean = 0;

    bool operator==(const FeatureVector&) const = default;
};

namespace detail {

// 16-pixel Bresenham ring offsets, clockwise from 12 o'clock.
inline constexpr int kRing[16][2] = {
    {0, -3}, {1, -3}, {2, -2}, {3, -1}, {3, 0}, {3, 1}, {2, 2}, {1, 3},
    {0, 3}, {-1, 3}, {-2, 2}, {-3, 1}, {-3, 0}, {-3, -1}, {-2, -2}, {-1, -3},
};

/// Max threshold at which the pixel is still a FAST-9 corner, or -1 if it is
/// not a corner at threshold t.
inline int32_t fast_score(const ImageChunk& chunk, uint32_t x, uint32_t y, int32_t t) {
    int32_t center = chunk.at(x, y);
    int32_t diff[16];
    for (int r = 0; r < 16; ++r) {
        diff[r] = static_cast<int32_t>(
                      chunk.at(x + kRing[r][0], y + kRing[r][1])) - center;
    }
    int32_t best = -1;
    for (int start = 0; start < 16; ++start) {
        int32_t min_bright = INT32_MAX;
        int32_t min_dark = INT32_MAX;
        for (int k = 0; k < 9; ++k) {
            int32_t d = diff[(start + k) % 16];
            min_bright = std::min(min_bright, d);
            min_dark = std::min(min_dark, -d);
        }
        // Bright arc survives up to threshold min_bright - 1, dark likewise.
        best = std::max({best, min_bright - 1, min_dark - 1});
    }
    return best >= t ? best : -1;
}

inline double keypoint_orientation(const ImageChunk& chunk, uint32_t x, uint32_t y) {
    double m10 = 0.0, m01 = 0.0;
    for (int dy = -3; dy <= 3; ++dy) {
        for (int dx = -3; dx <= 3; ++dx) {
            int64_t px = std::clamp<int64_t>(static_cast<int64_t>(x) + dx, 0, chunk.chunk_px - 1);
            int64_t py = std::clamp<int64_t>(static_cast<int64_t>(y) + dy, 0, chunk.chunk_px - 1);
            double v = chunk.at(static_cast<uint32_t>(px), static_cast<uint32_t>(py));
            m10 += dx * v;
            m01 += dy * v;
        }
    }
    return std::atan2(m01, m10);
}

/// 5x5 box-filtered intensity at (x, y), edge-clamped.
inline double smoothed(const ImageChunk& chunk, int64_t x, int64_t y) {
    double sum = 0.0;
    for (int dy = -2; dy <= 2; ++dy) {
        for (int dx = -2; dx <= 2; ++dx) {
            int64_t px = std::clamp<int64_t>(x + dx, 0, chunk.chunk_px - 1);
            int64_t py = std::clamp<int64_t>(y + dy, 0, chunk.chunk_px - 1);
            sum += chunk.at(static_cast<uint32_t>(px), static_cast<uint32_t>(py));
        }
    }
    return sum / 25.0;
}

}  // namespace detail

/// FAST-9 corners with non-max suppression; top max_kp by score, ties by (y, x).
inline std::vector<Keypoint> fast_keypoints(const ImageChunk& chunk, int32_t t, uint32_t max_kp) {
    if (chunk.chunk_px < 7) {
        throw ChunkTooSmall("FAST needs a chunk of at least 7x7, got " +
                            std::to_string(chunk.chunk_px));
    }
    uint32_t n = chunk.chunk_px;
    std::vector<int32_t> score(static_cast<size_t>(n) * n, -1);
    for (uint32_t y = 3; y + 3 < n; ++y) {
        for (uint32_t x = 3; x + 3 < n; ++x) {
            score[static_cast<size_t>(y) * n + x] = detail::fast_score(chunk, x, y, t);
        }
    }
    std::vector<Keypoint> kps;
    for (uint32_t y = 3; y + 3 < n; ++y) {
        for (uint32_t x = 3; x + 3 < n; ++x) {
            int32_t s = score[static_cast<size_t>(y) * n + x];
            if (s < 0) continue;
            bool keep = true;
            for (int dy = -1; dy <= 1 && keep; ++dy) {
                for (int dx = -1; dx <= 1 && keep; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    int64_t nx = static_cast<int64_t>(x) + dx;
                    int64_t ny = static_cast<int64_t>(y) + dy;
                    if (nx < 0 || ny < 0 || nx >= n || ny >= n) continue;
                    int32_t ns = score[static_cast<size_t>(ny) * n + nx];
                    if (ns > s) keep = false;
                    // Equal-score plateau: the lexicographically first pixel wins.
                    if (ns == s && (ny < y || (ny == y && nx < x))) keep = false;
                }
            }
            if (keep) {
                kps.push_back({x, y, s, detail::keypoint_orientation(chunk, x, y)});
            }
        }
    }
    std::sort(kps.begin(), kps.end(), [](const Keypoint& a, const Keypoint& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    });
    if (kps.size() > max_kp) kps.resize(max_kp);
    return kps;
}

/// Steered BRIEF: the sampling pattern is rotated by the keypoint orientation
/// quantized to 12 steps of 30 degrees; comparisons use 5x5 box-smoothed
/// intensities, strict less-than.
inline std::array<uint8_t, 32> brief_descriptor(const ImageChunk& chunk, const Keypoint& kp) {
    double two_pi = 2.0 * 3.14159265358979323846;
    double theta = std::fmod(kp.orientation + two_pi, two_pi);
    int step = static_cast<int>(std::lround(theta / (two_pi / 12.0))) % 12;
    double angle = step * (two_pi / 12.0);
    double cs = std::cos(angle), sn = std::sin(angle);

    std::array<uint8_t, 32> bits{};
    for (int k = 0; k < 256; ++k) {
        const int8_t* pair = detail::kBriefPattern[k];
        auto rotate = [&](int8_t px, int8_t py) {
            int64_t rx = static_cast<int64_t>(std::lround(cs * px - sn * py));
            int64_t ry = static_cast<int64_t>(std::lround(sn * px + cs * py));
            return std::pair<int64_t, int64_t>(kp.x + rx, kp.y + ry);
        };
        auto [ax, ay] = rotate(pair[0], pair[1]);
        auto [bx, by] = rotate(pair[2], pair[3]);
        if (detail::smoothed(chunk, ax, ay) < detail::smoothed(chunk, bx, by)) {
            bits[k / 8] |= static_cast<uint8_t>(1u << (k % 8));
        }
    }
    return bits;
}

/// Canonical per-chunk features: keypoint descriptors when FAST fires,
/// histogram + mean fallback otherwise.
inline FeatureVector chunk_features(const ImageChunk& chunk, int32_t t, uint32_t max_kp) {
    FeatureVector fv;
    std::vector<Keypoint> kps =
        chunk.chunk_px >= 7 ? fast_keypoints(chunk, t, max_kp) : std::vector<Keypoint>{};
    if (!kps.empty()) {
        fv.kind = FeatureKind::Keypoints;
        for (const Keypoint& kp : kps) {
            Descriptor d;
            d.cell_x = static_cast<uint8_t>(kp.x * 8 / chunk.chunk_px);
            d.cell_y = static_cast<uint8_t>(kp.y * 8 / chunk.chunk_px);
            d.bits = brief_descriptor(chunk, kp);
            fv.descriptors.push_back(d);
        }
        std::sort(fv.descriptors.begin(), fv.descriptors.end(),
                  [](const Descriptor& a, const Descriptor& b) { return a.key() < b.key(); });
        fv.descriptors.erase(std::unique(fv.descriptors.begin(), fv.descriptors.end()),
                             fv.descriptors.end());
    } else {
        fv.kind = FeatureKind::Fallback;
        uint64_t hist[16] = {};
        uint64_t sum = 0;
        for (uint8_t v : chunk.pixels) {
            ++hist[v / 16];
            sum += v;
        }
        double total = static_cast<double>(chunk.pixels.size());
        for (int b = 0; b < 16; ++b) {
            fv.histogram[b] =
                static_cast<uint8_t>(std::lround(255.0 * static_cast<double>(hist[b]) / total));
        }
        fv.mean = static_cast<uint8_t>(std::lround(static_cast<double>(sum) / total));
    }
    return fv;
}

/// Versioned canonical serialization: "FV01", kind byte, u32 count (LE), then
/// sorted (cell_y, cell_x, 32 descriptor bytes) records or the 17 fallback
/// bytes. Injective over canonical FeatureVectors.
inline std::vector<uint8_t> encode_features(const FeatureVector& fv) {
    if (fv.kind == FeatureKind::Keypoints) {
        if (fv.descriptors.empty()) {
            throw NonCanonicalInput("keypoint feature vector with no descriptors");
        }
        for (size_t i = 1; i < fv.descriptors.size(); ++i) {
            if (!(fv.descriptors[i - 1].key() < fv.descriptors[i].key())) {
                throw NonCanonicalInput("descriptors not strictly sorted");
            }
        }
    } else if (!fv.descriptors.empty()) {
        throw NonCanonicalInput("fallback feature vector carrying descriptors");
    }

    std::vector<uint8_t> out = {'F', 'V', '0', '1'};
    out.push_back(static_cast<uint8_t>(fv.kind));
    uint32_t count =
        fv.kind == FeatureKind::Keypoints ? static_cast<uint32_t>(fv.descriptors.size()) : 0;
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(count >> (8 * i)));
    if (fv.kind == FeatureKind::Keypoints) {
        for (const Descriptor& d : fv.descriptors) {
            out.push_back(d.cell_y);
            out.push_back(d.cell_x);
            out.insert(out.end(), d.bits.begin(), d.bits.end());
        }
    } else {
        out.insert(out.end(), fv.histogram.begin(), fv.histogram.end());
        out.push_back(fv.mean);
    }
    return out;
}

inline FeatureVector decode_features(std::span<const uint8_t> bytes) {
    if (bytes.size() < 9 || std::memcmp(bytes.data(), "FV01", 4) != 0) {
        throw MalformedHeader("bad feature-vector magic");
    }
    FeatureVector fv;
    fv.kind = static_cast<FeatureKind>(bytes[4]);
    uint32_t count = 0;
    for (int i = 0; i < 4; ++i) count |= static_cast<uint32_t>(bytes[5 + i]) << (8 * i);
    size_t pos = 9;
    if (fv.kind == FeatureKind::Keypoints) {
        if (bytes.size() - pos != static_cast<size_t>(count) * 34) {
            throw TruncatedPayload("feature-vector descriptor payload size mismatch");
        }
        for (uint32_t i = 0; i < count; ++i) {
            Descriptor d;
            d.cell_y = bytes[pos];
            d.cell_x = bytes[pos + 1];
            std::memcpy(d.bits.data(), bytes.data() + pos + 2, 32);
            fv.descriptors.push_back(d);
            pos += 34;
        }
    } else if (fv.kind == FeatureKind::Fallback) {
        if (count != 0 || bytes.size() - pos != 17) {
            throw TruncatedPayload("fallback feature-vector payload size mismatch");
        }
        std::memcpy(fv.histogram.data(), bytes.data() + pos, 16);
        fv.mean = bytes[pos + 16];
    } else {
        throw MalformedHeader("unknown feature-vector kind");
    }
    return fv;
}

/// The dedup identity of a chunk: Tiger over the canonical feature encoding.
inline TigerDigest chunk_digest(const FeatureVector& fv) { return tiger(encode_features(fv)); }

}  // namespace dedupix
