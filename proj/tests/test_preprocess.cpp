#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <queue>
#include <vector>

#include "dedupix/preprocess.hpp"
#include "dedupix/rng.hpp"

using namespace dedupix;

namespace {

GrayImage random_image(uint32_t w, uint32_t h, uint64_t seed) {
    GrayImage img(w, h);
    Rng rng(seed);
    for (auto& p : img.data) p = static_cast<uint8_t>(rng.next_below(256));
    return img;
}

GrayImage square_fixture() {
    GrayImage img(64, 64, 0);
    for (uint32_t y = 16; y < 48; ++y) {
        for (uint32_t x = 16; x < 48; ++x) img.at(x, y) = 255;
    }
    return img;
}

GrayImage rotate90(const GrayImage& img) {
    GrayImage out(img.height, img.width);
    for (uint32_t y = 0; y < img.height; ++y) {
        for (uint32_t x = 0; x < img.width; ++x) {
            out.at(img.height - 1 - y, x) = img.at(x, y);
        }
    }
    return out;
}

/// Exhaustive Otsu oracle: maximize between-class variance over all 256 cuts.
int otsu_oracle(const GrayImage& img) {
    uint64_t hist[256] = {};
    for (uint8_t v : img.data) ++hist[v];
    double n = static_cast<double>(img.pixel_count());
    int best_t = 0;
    double best = -1.0;
    for (int t = 0; t < 256; ++t) {
        double w0 = 0, s0 = 0, w1 = 0, s1 = 0;
        for (int v = 0; v <= t; ++v) {
            w0 += hist[v];
            s0 += static_cast<double>(v) * hist[v];
        }
        for (int v = t + 1; v < 256; ++v) {
            w1 += hist[v];
            s1 += static_cast<double>(v) * hist[v];
        }
        if (w0 == 0 || w1 == 0) continue;
        double mu0 = s0 / w0, mu1 = s1 / w1;
        double var = (w0 / n) * (w1 / n) * (mu0 - mu1) * (mu0 - mu1);
        if (var > best + 1e-12) {
            best = var;
            best_t = t;
        }
    }
    return best == -1.0 ? img.data[0] : best_t;
}

}  // namespace

TEST_CASE("gaussian_smooth preserves constants") {
    GrayImage img(9, 9, 77);
    CHECK(gaussian_smooth(img, 1.4, 5) == img);
    GrayImage one(1, 1, 100);
    CHECK(gaussian_smooth(one, 2.0, 1) == one);
}

TEST_CASE("gaussian_smooth center spike matches hand kernel") {
    GrayImage img(3, 3, 0);
    img.at(1, 1) = 255;
    double sum = 0.0, weights[3][3];
    for (int ky = -1; ky <= 1; ++ky) {
        for (int kx = -1; kx <= 1; ++kx) {
            weights[ky + 1][kx + 1] = std::exp(-(kx * kx + ky * ky) / 2.0);
            sum += weights[ky + 1][kx + 1];
        }
    }
    GrayImage out = gaussian_smooth(img, 1.0, 3);
    CHECK(out.at(1, 1) == static_cast<uint8_t>(std::lround(255.0 * weights[1][1] / sum)));
}

TEST_CASE("gaussian_smooth rejects bad kernels") {
    GrayImage img(8, 8, 0);
    CHECK_THROWS_AS(gaussian_smooth(img, 1.0, 4), BadKernelSize);
    CHECK_THROWS_AS(gaussian_smooth(img, 1.0, 9), BadKernelSize);
    CHECK_THROWS_AS(gaussian_smooth(img, -1.0, 3), BadKernelSize);
}

TEST_CASE("sobel on constant image is zero") {
    GradientField f = sobel_gradients(GrayImage(5, 5, 42));
    for (size_t p = 0; p < f.pixel_count(); ++p) {
        CHECK(f.gx[p] == 0);
        CHECK(f.gy[p] == 0);
        CHECK(f.magnitude[p] == 0);
    }
}

TEST_CASE("sobel vertical step edge") {
    GrayImage img(8, 8, 0);
    for (uint32_t y = 0; y < 8; ++y) {
        for (uint32_t x = 4; x < 8; ++x) img.at(x, y) = 255;
    }
    GradientField f = sobel_gradients(img);
    for (uint32_t y = 1; y < 7; ++y) {
        for (uint32_t x : {3u, 4u}) {
            size_t p = static_cast<size_t>(y) * 8 + x;
            CHECK(std::abs(f.gx[p]) == 1020);
            CHECK(f.gy[p] == 0);
        }
    }
}

TEST_CASE("sobel transpose symmetry") {
    GrayImage img = random_image(7, 5, 3);
    GrayImage t(img.height, img.width);
    for (uint32_t y = 0; y < img.height; ++y) {
        for (uint32_t x = 0; x < img.width; ++x) t.at(y, x) = img.at(x, y);
    }
    GradientField f = sobel_gradients(img);
    GradientField ft = sobel_gradients(t);
    for (uint32_t y = 0; y < img.height; ++y) {
        for (uint32_t x = 0; x < img.width; ++x) {
            CHECK(ft.gy[static_cast<size_t>(x) * t.width + y] ==
                  f.gx[static_cast<size_t>(y) * img.width + x]);
        }
    }
}

TEST_CASE("magnitude is the L1 norm") {
    GradientField f = sobel_gradients(random_image(16, 16, 11));
    for (size_t p = 0; p < f.pixel_count(); ++p) {
        CHECK(f.magnitude[p] == std::abs(f.gx[p]) + std::abs(f.gy[p]));
    }
}

TEST_CASE("quantize_direction") {
    double pi = 3.14159265358979323846;
    CHECK(quantize_direction(0.0) == 0);
    CHECK(quantize_direction(pi / 2) == 90);
    CHECK(quantize_direction(pi / 4) == 45);
    CHECK(quantize_direction(3 * pi / 4) == 135);
    CHECK(quantize_direction(3.14159265358979323846 / 8) == 0);  // 22.5 degrees, tie to smaller
    CHECK(quantize_direction(-pi / 2) == 90);
    CHECK(quantize_direction(pi + 0.01) == 0);
}

TEST_CASE("non_max_suppress basics") {
    GradientField zero;
    zero.width = zero.height = 5;
    zero.gx.assign(25, 0);
    zero.gy.assign(25, 0);
    zero.magnitude.assign(25, 0);
    zero.direction.assign(25, 0.0);
    std::vector<int32_t> out = non_max_suppress(zero);
    CHECK(out == std::vector<int32_t>(25, 0));

    GradientField spike = zero;
    spike.magnitude[12] = 50;  // center of 5x5
    out = non_max_suppress(spike);
    CHECK(out[12] == 50);

    // Ramp 10 < 20 < 30 along the 0-degree direction: only the largest survives
    // among the interior ramp pixels.
    GradientField ramp = zero;
    ramp.magnitude[11] = 10;
    ramp.magnitude[12] = 20;
    ramp.magnitude[13] = 30;
    out = non_max_suppress(ramp);
    CHECK(out[11] == 0);
    CHECK(out[12] == 0);
    CHECK(out[13] == 30);
}

TEST_CASE("nms output never exceeds magnitude") {
    GradientField f = sobel_gradients(random_image(24, 24, 8));
    std::vector<int32_t> out = non_max_suppress(f);
    for (size_t p = 0; p < out.size(); ++p) {
        CHECK(out[p] <= f.magnitude[p]);
        CHECK(out[p] >= 0);
    }
}

TEST_CASE("hysteresis basics") {
    std::vector<int32_t> weak(25, 10);
    EdgeMap none = hysteresis(weak, 5, 5, 20, 100);
    CHECK(none.edge_count() == 0);

    // Seed at (0,2), chain of low-strength pixels across the row.
    std::vector<int32_t> chain(25, 0);
    chain[2 * 5 + 0] = 150;
    chain[2 * 5 + 1] = 30;
    chain[2 * 5 + 2] = 30;
    chain[2 * 5 + 3] = 30;
    EdgeMap connected = hysteresis(chain, 5, 5, 20, 100);
    CHECK(connected.edge_count() == 4);
    CHECK(connected.is_edge(3, 2));

    // Same chain with no seed stays dark.
    chain[2 * 5 + 0] = 30;
    CHECK(hysteresis(chain, 5, 5, 20, 100).edge_count() == 0);

    CHECK_THROWS_AS(hysteresis(chain, 5, 5, 100, 100), BadThresholds);
    CHECK_THROWS_AS(hysteresis(chain, 5, 5, -1, 100), BadThresholds);
}

TEST_CASE("hysteresis is monotone in the low threshold") {
    GradientField f = sobel_gradients(random_image(32, 32, 21));
    std::vector<int32_t> thinned = non_max_suppress(f);
    EdgeMap strict = hysteresis(thinned, 32, 32, 80, 200);
    EdgeMap loose = hysteresis(thinned, 32, 32, 20, 200);
    for (size_t p = 0; p < strict.flags.size(); ++p) {
        if (strict.flags[p]) CHECK(loose.flags[p] == 1);
    }
}

TEST_CASE("canny constant image is empty") {
    CHECK(canny(GrayImage(32, 32, 128), 1.0, 5, 40, 100).edge_count() == 0);
}

TEST_CASE("canny square fixture yields one closed thin contour") {
    EdgeMap edges = canny(square_fixture(), 1.0, 5, 40, 100);
    REQUIRE(edges.edge_count() > 0);

    // Single 8-connected component.
    std::vector<int> comp(edges.flags.size(), -1);
    int components = 0;
    for (uint32_t y = 0; y < 64; ++y) {
        for (uint32_t x = 0; x < 64; ++x) {
            size_t p = static_cast<size_t>(y) * 64 + x;
            if (!edges.flags[p] || comp[p] >= 0) continue;
            std::queue<std::pair<uint32_t, uint32_t>> q;
            q.emplace(x, y);
            comp[p] = components;
            while (!q.empty()) {
                auto [cx, cy] = q.front();
                q.pop();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        int nx = static_cast<int>(cx) + dx, ny = static_cast<int>(cy) + dy;
                        if (nx < 0 || ny < 0 || nx >= 64 || ny >= 64) continue;
                        size_t np = static_cast<size_t>(ny) * 64 + nx;
                        if (edges.flags[np] && comp[np] < 0) {
                            comp[np] = components;
                            q.emplace(static_cast<uint32_t>(nx), static_cast<uint32_t>(ny));
                        }
                    }
                }
            }
            ++components;
        }
    }
    CHECK(components == 1);

    // Closed: no endpoints, so at least two neighbors everywhere; at a sharp
    // right angle the two arm pixels also touch diagonally, giving three.
    for (uint32_t y = 0; y < 64; ++y) {
        for (uint32_t x = 0; x < 64; ++x) {
            if (!edges.is_edge(x, y)) continue;
            int neighbors = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    int nx = static_cast<int>(x) + dx, ny = static_cast<int>(y) + dy;
                    if (nx < 0 || ny < 0 || nx >= 64 || ny >= 64) continue;
                    neighbors += edges.is_edge(static_cast<uint32_t>(nx),
                                               static_cast<uint32_t>(ny));
                }
            }
            CHECK(neighbors >= 2);
            CHECK(neighbors <= 3);
        }
    }

    // Thickness 1: no fully set 2x2 block.
    for (uint32_t y = 0; y + 1 < 64; ++y) {
        for (uint32_t x = 0; x + 1 < 64; ++x) {
            CHECK_FALSE((edges.is_edge(x, y) && edges.is_edge(x + 1, y) &&
                         edges.is_edge(x, y + 1) && edges.is_edge(x + 1, y + 1)));
        }
    }
}

TEST_CASE("canny commutes with right-angle rotation") {
    GrayImage img = square_fixture();
    EdgeMap direct = canny(rotate90(img), 1.0, 5, 40, 100);
    GrayImage rotated_edges = rotate90(canny(img, 1.0, 5, 40, 100).to_image());
    CHECK(direct.to_image() == rotated_edges);
}

TEST_CASE("binarize_otsu bimodal") {
    GrayImage img(16, 16);
    for (size_t p = 0; p < img.data.size(); ++p) img.data[p] = p % 2 ? 10 : 200;
    auto [binary, threshold] = binarize_otsu(img);
    CHECK(threshold >= 10);
    CHECK(threshold < 200);
    for (size_t p = 0; p < img.data.size(); ++p) {
        CHECK(binary[p] == (img.data[p] == 200 ? 1 : 0));
    }
}

TEST_CASE("binarize_otsu constant image") {
    auto [binary, threshold] = binarize_otsu(GrayImage(4, 4, 99));
    CHECK(threshold == 99);
    CHECK(binary == std::vector<uint8_t>(16, 0));
}

TEST_CASE("binarize_otsu inversion complements the partition") {
    GrayImage img = random_image(16, 16, 13);
    GrayImage inv = img;
    for (auto& p : inv.data) p = static_cast<uint8_t>(255 - p);
    auto [b1, t1] = binarize_otsu(img);
    auto [b2, t2] = binarize_otsu(inv);
    int agree = 0;
    for (size_t p = 0; p < b1.size(); ++p) agree += (b1[p] != b2[p]);
    // Complementary partitions up to pixels sitting exactly on a threshold.
    CHECK(agree >= static_cast<int>(b1.size()) - 8);
}

TEST_CASE("binarize_otsu equals the exhaustive oracle") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        GrayImage img = random_image(12, 12, seed * 31 + 1);
        auto [binary, threshold] = binarize_otsu(img);
        CHECK(static_cast<int>(threshold) == otsu_oracle(img));
    }
}

TEST_CASE("photon_map of empty edges is zero") {
    PhotonMap pm = photon_map(EdgeMap(8, 8), 1.0, 0.5);
    for (double v : pm.intensity) CHECK(v == 0.0);
}

TEST_CASE("photon_map hand trace of two rings") {
    EdgeMap edges(7, 7);
    edges.set(3, 3);
    PhotonMap pm = photon_map(edges, 100.0, 0.5);
    CHECK(pm.intensity[3 * 7 + 3] == 255.0);
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            CHECK(pm.intensity[(3 + dy) * 7 + (3 + dx)] == 127.5);
        }
    }
    // Second ring falls below epsilon and stays dark.
    CHECK(pm.intensity[1 * 7 + 3] == 0.0);
    CHECK(pm.intensity[3 * 7 + 1] == 0.0);
}

TEST_CASE("photon_map with epsilon above the first ring") {
    EdgeMap edges(5, 5);
    edges.set(2, 2);
    PhotonMap pm = photon_map(edges, 200.0, 0.5);  // 255 * 0.5 < 200
    for (size_t p = 0; p < pm.intensity.size(); ++p) {
        CHECK(pm.intensity[p] == (p == 12 ? 255.0 : 0.0));
    }
}

TEST_CASE("photon_map bounds and parameter validation") {
    EdgeMap edges = canny(square_fixture(), 1.0, 5, 40, 100);
    PhotonMap pm = photon_map(edges, 1.0, 0.8);
    for (double v : pm.intensity) {
        CHECK(v >= 0.0);
        CHECK(v <= 255.0);
    }
    CHECK_THROWS_AS(photon_map(edges, 1.0, 1.5), BadDecay);
    CHECK_THROWS_AS(photon_map(edges, -1.0, 0.5), BadEpsilon);
}
