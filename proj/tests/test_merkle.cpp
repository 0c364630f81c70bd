#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "dedupix/merkle.hpp"
#include "dedupix/rng.hpp"

using namespace dedupix;

namespace {

TigerDigest digest_of(const std::string& s) { return tiger(s); }

std::vector<TigerDigest> random_leaves(size_t n, Rng& rng) {
    std::vector<TigerDigest> leaves;
    for (size_t i = 0; i < n; ++i) {
        std::string s = "leaf-" + std::to_string(rng.next_u64());
        leaves.push_back(tiger(s));
    }
    return leaves;
}

}  // namespace

TEST_CASE("single leaf is its own root") {
    TigerDigest h = digest_of("only");
    MerkleTree tree = merkle_build({h}, 1, 1);
    CHECK(tree.root() == h);
    CHECK(merkle_root(tree) == h);
    CHECK(tree.levels.size() == 1);
}

TEST_CASE("two leaves hash together") {
    TigerDigest a = digest_of("a"), b = digest_of("b");
    MerkleTree tree = merkle_build({a, b}, 1, 2);
    CHECK(tree.root() == merkle_parent(a, b));
}

TEST_CASE("three leaves pad with the last digest") {
    TigerDigest a = digest_of("a"), b = digest_of("b"), c = digest_of("c");
    MerkleTree tree = merkle_build({a, b, c}, 1, 3);
    TigerDigest expected = merkle_parent(merkle_parent(a, b), merkle_parent(c, c));
    CHECK(tree.root() == expected);
    CHECK(tree.leaf_count == 3);
    CHECK(tree.levels[0].size() == 4);
}

TEST_CASE("count mismatch rejected") {
    TigerDigest a = digest_of("a");
    CHECK_THROWS_AS(merkle_build({a}, 2, 2), CountMismatch);
    CHECK_THROWS_AS(merkle_build({}, 0, 0), CountMismatch);
}

TEST_CASE("permuting distinct leaves changes the root") {
    TigerDigest a = digest_of("a"), b = digest_of("b"), c = digest_of("c"), d = digest_of("d");
    MerkleTree t1 = merkle_build({a, b, c, d}, 2, 2);
    MerkleTree t2 = merkle_build({b, a, c, d}, 2, 2);
    CHECK_FALSE(t1.root() == t2.root());
}

TEST_CASE("rebuild determinism") {
    Rng rng(7);
    std::vector<TigerDigest> leaves = random_leaves(12, rng);
    CHECK(merkle_build(leaves, 3, 4).root() == merkle_build(leaves, 3, 4).root());
}

TEST_CASE("any single-leaf change changes the root") {
    Rng rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
        size_t n = 1 + rng.next_below(16);
        std::vector<TigerDigest> leaves = random_leaves(n, rng);
        MerkleTree before = merkle_build(leaves, 1, static_cast<uint16_t>(n));
        size_t victim = rng.next_below(n);
        leaves[victim].bytes[rng.next_below(24)] ^= static_cast<uint8_t>(1 + rng.next_below(255));
        MerkleTree after = merkle_build(leaves, 1, static_cast<uint16_t>(n));
        REQUIRE_FALSE(before.root() == after.root());
    }
}

TEST_CASE("merkle_dump format") {
    TigerDigest a = digest_of("a"), b = digest_of("b");
    std::string dump = merkle_dump(merkle_build({a, b}, 1, 2));
    CHECK(dump == a.hex() + "\n" + b.hex() + "\n\n" + merkle_parent(a, b).hex() + "\n");
}
