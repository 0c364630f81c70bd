#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dedupix/error.hpp"
#include "dedupix/netio.hpp"
#include "dedupix/tiger.hpp"

namespace dedupix {

// Wire protocol v1. All integers big-endian.
enum MsgTag : uint8_t {
    MSG_ROOT = 0x01,
    MSG_FEAT = 0x02,
    ACK_HAVE = 0x03,
    ACK_NEED = 0x04,
    MSG_CHUNK = 0x05,
    MSG_DONE = 0x06,
    MSG_NAK = 0x07,
    ROOT_OK = 0x08,
    ROOT_MISMATCH = 0x09,
};

using ImageId = std::array<uint8_t, 16>;

struct RootMsg {
    ImageId image_id{};
    TigerDigest root;
    uint16_t n = 0;
    uint16_t m = 0;
    uint16_t chunk_px = 0;
    uint32_t orig_w = 0;
    uint32_t orig_h = 0;
};

struct FeatMsg {
    uint16_t i = 0;
    uint16_t j = 0;
    TigerDigest digest;
    std::vector<uint8_t> feat;
};

struct ChunkMsg {
    uint16_t i = 0;
    uint16_t j = 0;
    std::vector<uint8_t> pixels;
};

struct CoordMsg {  // ACK_HAVE / ACK_NEED / MSG_NAK
    uint8_t tag = 0;
    uint16_t i = 0;
    uint16_t j = 0;
};

namespace wire {

inline void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

inline void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

inline uint16_t get_u16(const uint8_t* p) { return static_cast<uint16_t>((p[0] << 8) | p[1]); }

inline uint32_t get_u32(const uint8_t* p) {
    return (static_cast<uint32_t>(p[0]) << 24) | (static_cast<uint32_t>(p[1]) << 16) |
           (static_cast<uint32_t>(p[2]) << 8) | p[3];
}

}  // namespace wire

inline void send_root(ByteStream& s, const RootMsg& msg) {
    std::vector<uint8_t> buf;
    buf.push_back(MSG_ROOT);
    buf.insert(buf.end(), msg.image_id.begin(), msg.image_id.end());
    buf.insert(buf.end(), msg.root.bytes.begin(), msg.root.bytes.end());
    wire::put_u16(buf, msg.n);
    wire::put_u16(buf, msg.m);
    wire::put_u16(buf, msg.chunk_px);
    wire::put_u32(buf, msg.orig_w);
    wire::put_u32(buf, msg.orig_h);
    s.write_all(buf);
}

inline void send_feat(ByteStream& s, const FeatMsg& msg) {
    std::vector<uint8_t> buf;
    buf.push_back(MSG_FEAT);
    wire::put_u16(buf, msg.i);
    wire::put_u16(buf, msg.j);
    buf.insert(buf.end(), msg.digest.bytes.begin(), msg.digest.bytes.end());
    wire::put_u32(buf, static_cast<uint32_t>(msg.feat.size()));
    buf.insert(buf.end(), msg.feat.begin(), msg.feat.end());
    s.write_all(buf);
}

inline void send_chunk(ByteStream& s, const ChunkMsg& msg) {
    std::vector<uint8_t> buf;
    buf.push_back(MSG_CHUNK);
    wire::put_u16(buf, msg.i);
    wire::put_u16(buf, msg.j);
    wire::put_u32(buf, static_cast<uint32_t>(msg.pixels.size()));
    buf.insert(buf.end(), msg.pixels.begin(), msg.pixels.end());
    s.write_all(buf);
}

inline void send_coord(ByteStream& s, uint8_t tag, uint16_t i, uint16_t j) {
    std::vector<uint8_t> buf;
    buf.push_back(tag);
    wire::put_u16(buf, i);
    wire::put_u16(buf, j);
    s.write_all(buf);
}

inline void send_bare(ByteStream& s, uint8_t tag) {
    uint8_t buf[1] = {tag};
    s.write_all(buf);
}

/// Parsed incoming message; exactly one field is meaningful per tag.
struct Message {
    uint8_t tag = 0;
    RootMsg root;
    FeatMsg feat;
    ChunkMsg chunk;
    CoordMsg coord;
};

/// Blocking read of the next message. max_payload caps FEAT/CHUNK lengths.
inline Message read_message(ByteStream& s, uint32_t max_payload = 1u << 26) {
    Message msg;
    s.read_exact(std::span<uint8_t>(&msg.tag, 1));
    switch (msg.tag) {
        case MSG_ROOT: {
            uint8_t buf[54];
            s.read_exact(buf);
            std::copy(buf, buf + 16, msg.root.image_id.begin());
            std::copy(buf + 16, buf + 40, msg.root.root.bytes.begin());
            msg.root.n = wire::get_u16(buf + 40);
            msg.root.m = wire::get_u16(buf + 42);
            msg.root.chunk_px = wire::get_u16(buf + 44);
            msg.root.orig_w = wire::get_u32(buf + 46);
            msg.root.orig_h = wire::get_u32(buf + 50);
            break;
        }
        case MSG_FEAT: {
            uint8_t buf[32];
            s.read_exact(buf);
            msg.feat.i = wire::get_u16(buf);
            msg.feat.j = wire::get_u16(buf + 2);
            std::copy(buf + 4, buf + 28, msg.feat.digest.bytes.begin());
            uint32_t len = wire::get_u32(buf + 28);
            if (len > max_payload) throw ProtocolViolation("oversized feature payload");
            msg.feat.feat.resize(len);
            s.read_exact(msg.feat.feat);
            break;
        }
        case MSG_CHUNK: {
            uint8_t buf[8];
            s.read_exact(buf);
            msg.chunk.i = wire::get_u16(buf);
            msg.chunk.j = wire::get_u16(buf + 2);
            uint32_t len = wire::get_u32(buf + 4);
            if (len > max_payload) throw ProtocolViolation("oversized chunk payload");
            msg.chunk.pixels.resize(len);
            s.read_exact(msg.chunk.pixels);
            break;
        }
        case ACK_HAVE:
        case ACK_NEED:
        case MSG_NAK: {
            uint8_t buf[4];
            s.read_exact(buf);
            msg.coord.tag = msg.tag;
            msg.coord.i = wire::get_u16(buf);
            msg.coord.j = wire::get_u16(buf + 2);
            break;
        }
        case MSG_DONE:
        case ROOT_OK:
        case ROOT_MISMATCH:
            break;
        default:
            throw ProtocolViolation("unknown message tag " + std::to_string(msg.tag));
    }
    return msg;
}

}  // namespace dedupix
