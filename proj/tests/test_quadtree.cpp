#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "dedupix/quadtree.hpp"
#include "dedupix/rng.hpp"

using namespace dedupix;

namespace {

GrayImage random_image(uint32_t w, uint32_t h, uint64_t seed) {
    GrayImage img(w, h);
    Rng rng(seed);
    for (auto& p : img.data) p = static_cast<uint8_t>(rng.next_below(256));
    return img;
}

size_t leaf_area(const QuadtreeNode& node) {
    if (node.is_leaf()) return static_cast<size_t>(node.side) * node.side;
    size_t area = 0;
    for (const auto& c : node.children) area += leaf_area(*c);
    return area;
}

}  // namespace

TEST_CASE("constant image builds a single leaf") {
    auto root = build_quadtree(GrayImage(32, 32, 60), 4, 2);
    CHECK(root->is_leaf());
    CHECK(root->homogeneous);
    CHECK(root->mean_intensity == 60.0);
}

TEST_CASE("four constant quadrants split once") {
    GrayImage img(8, 8);
    for (uint32_t y = 0; y < 8; ++y) {
        for (uint32_t x = 0; x < 8; ++x) {
            img.at(x, y) = static_cast<uint8_t>((y / 4) * 2 + (x / 4)) * 50;
        }
    }
    auto root = build_quadtree(img, 3, 0);
    REQUIRE(root->children.size() == 4);
    for (const auto& child : root->children) {
        CHECK(child->is_leaf());
        CHECK(child->homogeneous);
    }
}

TEST_CASE("max_depth zero is always a single leaf") {
    auto root = build_quadtree(random_image(16, 16, 4), 0, 0);
    CHECK(root->is_leaf());
    CHECK_THROWS_AS(build_quadtree(GrayImage{}, 2, 0), EmptyImage);
}

TEST_CASE("quadtree leaves tile the padded square") {
    auto root = build_quadtree(random_image(20, 11, 9), 4, 0);
    CHECK(leaf_area(*root) == static_cast<size_t>(root->side) * root->side);
}

TEST_CASE("chunk_grid shapes") {
    GrayImage img = random_image(16, 16, 1);
    ChunkGrid g0 = chunk_grid(img, 0, 2);
    CHECK(g0.rows == 1);
    CHECK(g0.cols == 1);
    CHECK(g0.chunk_px == 16);
    CHECK(g0.chunks[0].pixels == img.data);

    ChunkGrid g3 = chunk_grid(random_image(512, 512, 2), 3, 2);
    CHECK(g3.rows == 8);
    CHECK(g3.cols == 8);
    CHECK(g3.chunk_px == 64);
    CHECK(g3.chunks.size() == 64);
}

TEST_CASE("chunk_grid pads by edge replication") {
    GrayImage img = random_image(500, 500, 3);
    ChunkGrid grid = chunk_grid(img, 3, 2);
    CHECK(grid.chunk_px == 64);  // padded to 512
    const ImageChunk& corner = grid.at(7, 7);
    // Padding columns/rows replicate the nearest in-image sample.
    for (uint32_t y = 0; y < 64; ++y) {
        uint32_t img_y = std::min(7 * 64 + y, 499u);
        for (uint32_t x = 0; x < 64; ++x) {
            uint32_t img_x = std::min(7 * 64 + x, 499u);
            CHECK(corner.at(x, y) == img.at(img_x, img_y));
        }
    }
}

TEST_CASE("homogeneous flag follows the threshold") {
    GrayImage img(8, 8, 100);
    img.at(0, 0) = 103;
    ChunkGrid strict = chunk_grid(img, 0, 2);
    CHECK_FALSE(strict.chunks[0].homogeneous);
    ChunkGrid loose = chunk_grid(img, 0, 3);
    CHECK(loose.chunks[0].homogeneous);
}

TEST_CASE("chunk round trip for depths 0 through 4") {
    for (uint32_t depth = 0; depth <= 4; ++depth) {
        GrayImage img = random_image(100 + depth * 13, 77 + depth * 7, depth + 10);
        ChunkGrid grid = chunk_grid(img, depth, 2);
        CHECK(reassemble(grid, img.width, img.height) == img);
    }
}

TEST_CASE("one by one image survives deep chunking") {
    GrayImage img(1, 1, 200);
    ChunkGrid grid = chunk_grid(img, 2, 2);
    CHECK(grid.chunk_px == 1);
    CHECK(reassemble(grid, 1, 1) == img);
}

TEST_CASE("missing chunk is reported with its coordinates") {
    ChunkGrid grid = chunk_grid(random_image(32, 32, 5), 2, 2);
    grid.chunks[2 * 4 + 1].pixels.clear();
    try {
        reassemble(grid, 32, 32);
        FAIL("expected MissingChunk");
    } catch (const MissingChunk& e) {
        REQUIRE(e.missing.size() == 1);
        CHECK(e.missing[0] == std::make_pair(uint16_t{2}, uint16_t{1}));
    }
}
