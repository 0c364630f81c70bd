#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "dedupix/error.hpp"
#include "dedupix/image.hpp"
#include "dedupix/quadtree.hpp"
#include "dedupix/rng.hpp"

namespace dedupix {

struct HardClustering {
    std::vector<std::vector<double>> centroids;
    std::vector<uint32_t> assignments;
    uint32_t iterations = 0;
    double inertia = 0.0;
};

struct FuzzyClustering {
    std::vector<std::vector<double>> centroids;
    std::vector<std::vector<double>> partition;  // n rows, c memberships each
    double fuzziness = 0.0;
    uint32_t iterations = 0;
};

enum class KmeansInit { SeededRandom, PlusPlus };

namespace detail {

inline double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double t = a[i] - b[i];
        d += t * t;
    }
    return d;
}

inline std::vector<std::vector<double>> kmeans_seed(const std::vector<std::vector<double>>& pts,
                                                    uint32_t k, KmeansInit init, Rng& rng) {
    std::vector<std::vector<double>> centroids;
    if (init == KmeansInit::SeededRandom) {
        // Distinct random indices.
        std::vector<size_t> idx(pts.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        for (size_t i = 0; i < k; ++i) {
            size_t j = i + rng.next_below(idx.size() - i);
            std::swap(idx[i], idx[j]);
            centroids.push_back(pts[idx[i]]);
        }
    } else {
        centroids.push_back(pts[rng.next_below(pts.size())]);
        std::vector<double> d2(pts.size());
        while (centroids.size() < k) {
            double total = 0.0;
            for (size_t i = 0; i < pts.size(); ++i) {
                double best = std::numeric_limits<double>::max();
                for (const auto& c : centroids) best = std::min(best, sq_dist(pts[i], c));
                d2[i] = best;
                total += best;
            }
            size_t pick = 0;
            if (total > 0.0) {
                double target = rng.next_double() * total;
                double acc = 0.0;
                for (size_t i = 0; i < pts.size(); ++i) {
                    acc += d2[i];
                    if (acc >= target) {
                        pick = i;
                        break;
                    }
                }
            } else {
                pick = rng.next_below(pts.size());
            }
            centroids.push_back(pts[pick]);
        }
    }
    return centroids;
}

}  // namespace detail

/// Lloyd iteration. Ties go to the lowest centroid index; an emptied cluster is
/// re-seeded with the point farthest from its current centroid.
inline HardClustering kmeans(const std::vector<std::vector<double>>& vectors, uint32_t k,
                             KmeansInit init, uint32_t max_iter, double tol, uint64_t seed) {
    if (vectors.empty()) throw EmptyInput("kmeans needs at least one vector");
    if (k == 0 || k > vectors.size()) {
        throw BadK("k=" + std::to_string(k) + " with n=" + std::to_string(vectors.size()));
    }
    Rng rng(seed);
    HardClustering result;
    result.centroids = detail::kmeans_seed(vectors, k, init, rng);
    result.assignments.assign(vectors.size(), 0);

    for (uint32_t iter = 0; iter < max_iter; ++iter) {
        result.iterations = iter + 1;
        // Assignment step.
        for (size_t i = 0; i < vectors.size(); ++i) {
            uint32_t best = 0;
            double best_d = detail::sq_dist(vectors[i], result.centroids[0]);
            for (uint32_t j = 1; j < k; ++j) {
                double d = detail::sq_dist(vectors[i], result.centroids[j]);
                if (d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
            result.assignments[i] = best;
        }
        // Update step.
        size_t dim = vectors[0].size();
        std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
        std::vector<size_t> counts(k, 0);
        for (size_t i = 0; i < vectors.size(); ++i) {
            uint32_t j = result.assignments[i];
            ++counts[j];
            for (size_t d = 0; d < dim; ++d) sums[j][d] += vectors[i][d];
        }
        for (uint32_t j = 0; j < k; ++j) {
            if (counts[j] == 0) {
                // Re-seed with the point farthest from its assigned centroid.
                size_t far_i = 0;
                double far_d = -1.0;
                for (size_t i = 0; i < vectors.size(); ++i) {
                    double d = detail::sq_dist(vectors[i], result.centroids[result.assignments[i]]);
                    if (d > far_d) {
                        far_d = d;
                        far_i = i;
                    }
                }
                sums[j] = vectors[far_i];
                counts[j] = 1;
                result.assignments[far_i] = j;
            }
        }
        double max_shift = 0.0;
        for (uint32_t j = 0; j < k; ++j) {
            std::vector<double> next(dim);
            for (size_t d = 0; d < dim; ++d) next[d] = sums[j][d] / static_cast<double>(counts[j]);
            max_shift = std::max(max_shift, std::sqrt(detail::sq_dist(next, result.centroids[j])));
            result.centroids[j] = std::move(next);
        }
        if (max_shift <= tol) break;
    }

    // Final assignment against the converged centroids, plus inertia.
    result.inertia = 0.0;
    for (size_t i = 0; i < vectors.size(); ++i) {
        uint32_t best = 0;
        double best_d = detail::sq_dist(vectors[i], result.centroids[0]);
        for (uint32_t j = 1; j < k; ++j) {
            double d = detail::sq_dist(vectors[i], result.centroids[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        result.assignments[i] = best;
        result.inertia += best_d;
    }
    return result;
}

/// Best inertia over `restarts` seeded runs.
inline HardClustering kmeans_restarts(const std::vector<std::vector<double>>& vectors, uint32_t k,
                                      KmeansInit init, uint32_t max_iter, double tol,
                                      uint64_t seed, uint32_t restarts) {
    HardClustering best;
    bool have = false;
    for (uint32_t r = 0; r < restarts; ++r) {
        HardClustering c = kmeans(vectors, k, init, max_iter, tol, seed + r);
        if (!have || c.inertia < best.inertia) {
            best = std::move(c);
            have = true;
        }
    }
    return best;
}

/// Fuzzy C-Means with the standard two-formula update. A point coincident with
/// a centroid gets membership 1 there and 0 elsewhere.
inline FuzzyClustering fuzzy_cmeans(const std::vector<std::vector<double>>& vectors, uint32_t c,
                                    double m, double eps, uint32_t max_iter, uint64_t seed) {
    if (vectors.empty()) throw EmptyInput("fuzzy_cmeans needs at least one vector");
    if (c < 2 || c > vectors.size()) {
        throw BadC("c=" + std::to_string(c) + " with n=" + std::to_string(vectors.size()));
    }
    if (!(m > 1.0)) throw BadFuzziness("fuzziness m must exceed 1");

    size_t n = vectors.size();
    size_t dim = vectors[0].size();
    Rng rng(seed);

    FuzzyClustering result;
    result.fuzziness = m;
    result.partition.assign(n, std::vector<double>(c, 0.0));
    for (size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (uint32_t j = 0; j < c; ++j) {
            result.partition[i][j] = 0.05 + rng.next_double();
            sum += result.partition[i][j];
        }
        for (uint32_t j = 0; j < c; ++j) result.partition[i][j] /= sum;
    }
    result.centroids.assign(c, std::vector<double>(dim, 0.0));

    for (uint32_t iter = 0; iter < max_iter; ++iter) {
        result.iterations = iter + 1;
        // Centroids: c_j = sum w^m x / sum w^m.
        for (uint32_t j = 0; j < c; ++j) {
            std::vector<double> num(dim, 0.0);
            double den = 0.0;
            for (size_t i = 0; i < n; ++i) {
                double wm = std::pow(result.partition[i][j], m);
                den += wm;
                for (size_t d = 0; d < dim; ++d) num[d] += wm * vectors[i][d];
            }
            for (size_t d = 0; d < dim; ++d) {
                result.centroids[j][d] = den > 0.0 ? num[d] / den : 0.0;
            }
        }
        // Memberships with exponent 2/(m-1).
        double max_change = 0.0;
        double expo = 2.0 / (m - 1.0);
        for (size_t i = 0; i < n; ++i) {
            std::vector<double> dist(c);
            int coincident = -1;
            for (uint32_t j = 0; j < c; ++j) {
                dist[j] = std::sqrt(detail::sq_dist(vectors[i], result.centroids[j]));
                if (dist[j] == 0.0 && coincident < 0) coincident = static_cast<int>(j);
            }
            for (uint32_t j = 0; j < c; ++j) {
                double w;
                if (coincident >= 0) {
                    w = (static_cast<int>(j) == coincident) ? 1.0 : 0.0;
                } else {
                    double denom = 0.0;
                    for (uint32_t l = 0; l < c; ++l) {
                        denom += std::pow(dist[j] / dist[l], expo);
                    }
                    w = 1.0 / denom;
                }
                max_change = std::max(max_change, std::abs(w - result.partition[i][j]));
                result.partition[i][j] = w;
            }
        }
        if (max_change <= eps) break;
    }
    return result;
}

/// Fixed-length image summary: 32-bin L1-normalized intensity histogram plus
/// the count of non-homogeneous chunks at the given grid depth.
inline std::vector<double> image_summary(const GrayImage& img, uint32_t depth,
                                         uint8_t hom_threshold) {
    std::vector<double> summary(33, 0.0);
    for (uint8_t v : img.data) summary[v / 8] += 1.0;
    for (size_t b = 0; b < 32; ++b) summary[b] /= static_cast<double>(img.pixel_count());
    ChunkGrid grid = chunk_grid(img, depth, hom_threshold);
    for (const ImageChunk& chunk : grid.chunks) {
        if (!chunk.homogeneous) summary[32] += 1.0;
    }
    return summary;
}

/// Group images by K-Means over their summaries; drives transfer batching.
inline std::vector<uint32_t> cluster_images(const std::vector<std::vector<double>>& summaries,
                                            uint32_t k, uint32_t max_iter, double tol,
                                            uint64_t seed) {
    HardClustering hc = kmeans(summaries, k, KmeansInit::PlusPlus, max_iter, tol, seed);
    return hc.assignments;
}

}  // namespace dedupix
