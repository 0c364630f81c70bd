#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dedupix/error.hpp"
#include "dedupix/tiger.hpp"

namespace dedupix {

/// Binary hash tree over chunk digests. Level 0 holds the leaves in row-major
/// chunk order; the top level is the single root.
struct MerkleTree {
    uint32_t leaf_count = 0;  // before power-of-two padding
    std::vector<std::vector<TigerDigest>> levels;

    const TigerDigest& root() const { return levels.back().front(); }
};

/// Parent digest: Tiger over the 48-byte concatenation left || right.
inline TigerDigest merkle_parent(const TigerDigest& left, const TigerDigest& right) {
    uint8_t buf[48];
    for (int i = 0; i < 24; ++i) {
        buf[i] = left.bytes[i];
        buf[24 + i] = right.bytes[i];
    }
    return tiger(std::span<const uint8_t>(buf, 48));
}

/// Leaves padded to the next power of two by repeating the last digest; a
/// single leaf is its own root.
inline MerkleTree merkle_build(const std::vector<TigerDigest>& hashes, uint16_t n, uint16_t m) {
    size_t expected = static_cast<size_t>(n) * m;
    if (hashes.empty() || hashes.size() != expected) {
        throw CountMismatch("got " + std::to_string(hashes.size()) + " leaf digests for a " +
                            std::to_string(n) + "x" + std::to_string(m) + " grid");
    }
    MerkleTree tree;
    tree.leaf_count = static_cast<uint32_t>(hashes.size());
    std::vector<TigerDigest> level = hashes;
    size_t padded = 1;
    while (padded < level.size()) padded <<= 1;
    level.resize(padded, level.back());
    tree.levels.push_back(level);
    while (tree.levels.back().size() > 1) {
        const std::vector<TigerDigest>& below = tree.levels.back();
        std::vector<TigerDigest> above(below.size() / 2);
        for (size_t i = 0; i < above.size(); ++i) {
            above[i] = merkle_parent(below[2 * i], below[2 * i + 1]);
        }
        tree.levels.push_back(std::move(above));
    }
    return tree;
}

inline TigerDigest merkle_root(const MerkleTree& tree) { return tree.root(); }

/// Debug dump: one hex digest per line, levels separated by blank lines.
inline std::string merkle_dump(const MerkleTree& tree) {
    std::string out;
    for (size_t l = 0; l < tree.levels.size(); ++l) {
        if (l > 0) out += "\n";
        for (const TigerDigest& d : tree.levels[l]) {
            out += d.hex();
            out += "\n";
        }
    }
    return out;
}

}  // namespace dedupix
