#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>

#include "dedupix/tiger_tables.hpp"

namespace dedupix {

/// 192-bit Tiger digest.
struct TigerDigest {
    std::array<uint8_t, 24> bytes{};

    bool operator==(const TigerDigest&) const = default;
    auto operator<=>(const TigerDigest&) const = default;

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        out.reserve(48);
        for (uint8_t b : bytes) {
            out.push_back(digits[b >> 4]);
            out.push_back(digits[b & 0xF]);
        }
        return out;
    }

    static TigerDigest from_hex(const std::string& hex) {
        TigerDigest d;
        if (hex.size() != 48) return d;
        auto nibble = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            return -1;
        };
        for (size_t i = 0; i < 24; ++i) {
            int hi = nibble(hex[2 * i]);
            int lo = nibble(hex[2 * i + 1]);
            if (hi < 0 || lo < 0) return TigerDigest{};
            d.bytes[i] = static_cast<uint8_t>((hi << 4) | lo);
        }
        return d;
    }
};

/// Constant-time equality, used for root verification.
inline bool roots_equal(const TigerDigest& a, const TigerDigest& b) {
    uint8_t acc = 0;
    for (size_t i = 0; i < 24; ++i) acc |= static_cast<uint8_t>(a.bytes[i] ^ b.bytes[i]);
    return acc == 0;
}

namespace detail {

inline void tiger_compress(uint64_t state[3], const uint8_t* block) {
    uint64_t x[8];
    for (int i = 0; i < 8; ++i) {
        uint64_t w = 0;
        for (int b = 7; b >= 0; --b) w = (w << 8) | block[8 * i + b];  // little-endian words
        x[i] = w;
    }

    uint64_t a = state[0], b = state[1], c = state[2];
    const uint64_t aa = a, bb = b, cc = c;

    auto round = [](uint64_t& ra, uint64_t& rb, uint64_t& rc, uint64_t w, uint64_t mul) {
        rc ^= w;
        ra -= kTigerSbox[0][rc & 0xFF] ^ kTigerSbox[1][(rc >> 16) & 0xFF] ^
              kTigerSbox[2][(rc >> 32) & 0xFF] ^ kTigerSbox[3][(rc >> 48) & 0xFF];
        rb += kTigerSbox[3][(rc >> 8) & 0xFF] ^ kTigerSbox[2][(rc >> 24) & 0xFF] ^
              kTigerSbox[1][(rc >> 40) & 0xFF] ^ kTigerSbox[0][(rc >> 56) & 0xFF];
        rb *= mul;
    };
    auto pass = [&](uint64_t& pa, uint64_t& pb, uint64_t& pc, uint64_t mul) {
        round(pa, pb, pc, x[0], mul);
        round(pb, pc, pa, x[1], mul);
        round(pc, pa, pb, x[2], mul);
        round(pa, pb, pc, x[3], mul);
        round(pb, pc, pa, x[4], mul);
        round(pc, pa, pb, x[5], mul);
        round(pa, pb, pc, x[6], mul);
        round(pb, pc, pa, x[7], mul);
    };
    auto key_schedule = [&] {
        x[0] -= x[7] ^ 0xA5A5A5A5A5A5A5A5ULL;
        x[1] ^= x[0];
        x[2] += x[1];
        x[3] -= x[2] ^ ((~x[1]) << 19);
        x[4] ^= x[3];
        x[5] += x[4];
        x[6] -= x[5] ^ ((~x[4]) >> 23);
        x[7] ^= x[6];
        x[0] += x[7];
        x[1] -= x[0] ^ ((~x[7]) << 19);
        x[2] ^= x[1];
        x[3] += x[2];
        x[4] -= x[3] ^ ((~x[2]) >> 23);
        x[5] ^= x[4];
        x[6] += x[5];
        x[7] -= x[6] ^ 0x0123456789ABCDEFULL;
    };

    pass(a, b, c, 5);
    key_schedule();
    pass(c, a, b, 7);
    key_schedule();
    pass(b, c, a, 9);

    state[0] = a ^ aa;
    state[1] = b - bb;
    state[2] = c + cc;
}

}  // namespace detail

/// Tiger-192 over an arbitrary byte sequence (0x01 padding, 24 rounds).
inline TigerDigest tiger(std::span<const uint8_t> message) {
    uint64_t state[3] = {0x0123456789ABCDEFULL, 0xFEDCBA9876543210ULL, 0xF096A5B4C3B2E187ULL};

    size_t full_blocks = message.size() / 64;
    for (size_t i = 0; i < full_blocks; ++i) {
        detail::tiger_compress(state, message.data() + 64 * i);
    }

    uint8_t tail[128] = {};
    size_t rem = message.size() - 64 * full_blocks;
    if (rem > 0) std::memcpy(tail, message.data() + 64 * full_blocks, rem);
    tail[rem] = 0x01;
    size_t tail_len = (rem + 9 <= 64) ? 64 : 128;
    uint64_t bit_len = static_cast<uint64_t>(message.size()) << 3;
    for (int i = 0; i < 8; ++i) {
        tail[tail_len - 8 + i] = static_cast<uint8_t>(bit_len >> (8 * i));
    }
    detail::tiger_compress(state, tail);
    if (tail_len == 128) detail::tiger_compress(state, tail + 64);

    TigerDigest digest;
    for (int w = 0; w < 3; ++w) {
        for (int i = 0; i < 8; ++i) {
            digest.bytes[8 * w + i] = static_cast<uint8_t>(state[w] >> (8 * i));
        }
    }
    return digest;
}

inline TigerDigest tiger(const std::string& message) {
    return tiger(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(message.data()),
                                          message.size()));
}

}  // namespace dedupix
