#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dedupix/identity.hpp"
#include "dedupix/image.hpp"
#include "dedupix/merkle.hpp"
#include "dedupix/netio.hpp"
#include "dedupix/protocol.hpp"
#include "dedupix/quadtree.hpp"
#include "dedupix/store.hpp"

namespace dedupix {

struct TransferConfig {
    uint32_t depth = 3;
    uint8_t hom_threshold = 2;
    int32_t fast_t = 20;
    uint32_t max_kp = 32;
    uint32_t pipeline_window = 64;  // max unacknowledged MSG_FEATs in flight
};

struct TransferReport {
    uint32_t chunks_total = 0;
    uint32_t chunks_sent = 0;
    uint32_t chunks_deduped = 0;
    uint64_t bytes_on_wire = 0;  // payload direction, sender to receiver
    uint64_t bytes_raw = 0;      // original raster size
    double wall_time_s = 0.0;
    bool verified = false;
};

/// Advisory per-peer memory of digests already sent; the receiver's ACK stays
/// authoritative.
using SentHistory = std::set<TigerDigest>;

namespace detail {

struct PreparedImage {
    ChunkGrid grid;
    std::vector<std::vector<uint8_t>> feats;  // encoded, row-major
    std::vector<TigerDigest> digests;         // row-major
    MerkleTree tree;
    ImageId image_id{};
};

inline PreparedImage prepare_image(const GrayImage& img, const TransferConfig& cfg) {
    PreparedImage prep;
    prep.grid = chunk_grid(img, cfg.depth, cfg.hom_threshold);
    for (const ImageChunk& chunk : prep.grid.chunks) {
        FeatureVector fv = chunk_features(chunk, cfg.fast_t, cfg.max_kp);
        prep.feats.push_back(encode_features(fv));
        prep.digests.push_back(tiger(prep.feats.back()));
    }
    prep.tree = merkle_build(prep.digests, prep.grid.rows, prep.grid.cols);
    // Image id: leading 16 bytes of the digest of the canonical raster bytes.
    TigerDigest id_src = tiger(save_pgm(img));
    std::copy(id_src.bytes.begin(), id_src.bytes.begin() + 16, prep.image_id.begin());
    return prep;
}

}  // namespace detail

/// Sender side: root announcement, pipelined per-chunk feature/ack exchange,
/// chunk upload on demand, final root verification.
inline TransferReport send_image(ByteStream& conn, const GrayImage& img,
                                 const TransferConfig& cfg, SentHistory* history = nullptr) {
    auto start = std::chrono::steady_clock::now();
    CountingStream stream(conn);

    detail::PreparedImage prep = detail::prepare_image(img, cfg);
    size_t total = prep.grid.chunks.size();

    TransferReport report;
    report.chunks_total = static_cast<uint32_t>(total);
    report.bytes_raw = static_cast<uint64_t>(img.width) * img.height;

    RootMsg root;
    root.image_id = prep.image_id;
    root.root = prep.tree.root();
    root.n = prep.grid.rows;
    root.m = prep.grid.cols;
    root.chunk_px = static_cast<uint16_t>(prep.grid.chunk_px);
    root.orig_w = prep.grid.orig_w;
    root.orig_h = prep.grid.orig_h;
    send_root(stream, root);

    // ACKs arrive in FEAT order; a NAK may interleave after a chunk upload.
    std::deque<size_t> outstanding;
    std::set<std::pair<uint16_t, uint16_t>> nak_seen;
    size_t next_feat = 0;
    uint32_t window = cfg.pipeline_window == 0 ? 1 : cfg.pipeline_window;

    auto index_of = [&](uint16_t i, uint16_t j) {
        return static_cast<size_t>(i) * prep.grid.cols + j;
    };
    auto handle_ack = [&](const Message& msg) {
        if (msg.tag == MSG_NAK) {
            size_t idx = index_of(msg.coord.i, msg.coord.j);
            auto key = std::make_pair(msg.coord.i, msg.coord.j);
            if (nak_seen.contains(key)) {
                throw PeerProtocolError("repeated NAK for chunk (" +
                                        std::to_string(msg.coord.i) + "," +
                                        std::to_string(msg.coord.j) + ")");
            }
            nak_seen.insert(key);
            send_chunk(stream, {msg.coord.i, msg.coord.j, prep.grid.chunks[idx].pixels});
            return;
        }
        if (msg.tag != ACK_HAVE && msg.tag != ACK_NEED) {
            throw PeerProtocolError("unexpected tag " + std::to_string(msg.tag) +
                                    " while awaiting acks");
        }
        if (outstanding.empty()) throw PeerProtocolError("ack with no outstanding feature");
        size_t idx = outstanding.front();
        outstanding.pop_front();
        const ImageChunk& chunk = prep.grid.chunks[idx];
        if (msg.coord.i != chunk.row || msg.coord.j != chunk.col) {
            throw PeerProtocolError("ack out of order");
        }
        if (msg.tag == ACK_NEED) {
            send_chunk(stream, {chunk.row, chunk.col, chunk.pixels});
            ++report.chunks_sent;
        } else {
            ++report.chunks_deduped;
        }
        if (history) history->insert(prep.digests[idx]);
    };

    while (next_feat < total || !outstanding.empty()) {
        if (next_feat < total && outstanding.size() < window) {
            const ImageChunk& chunk = prep.grid.chunks[next_feat];
            send_feat(stream,
                      {chunk.row, chunk.col, prep.digests[next_feat], prep.feats[next_feat]});
            outstanding.push_back(next_feat);
            ++next_feat;
        } else {
            handle_ack(read_message(stream));
        }
    }

    send_bare(stream, MSG_DONE);
    for (;;) {
        Message msg = read_message(stream);
        if (msg.tag == MSG_NAK) {
            handle_ack(msg);
            continue;
        }
        if (msg.tag == ROOT_OK) {
            report.verified = true;
            break;
        }
        if (msg.tag == ROOT_MISMATCH) {
            report.verified = false;
            break;
        }
        throw PeerProtocolError("unexpected tag " + std::to_string(msg.tag) +
                                " while awaiting verdict");
    }

    report.bytes_on_wire = stream.bytes_written();
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Receiver side of one image transfer. Chunks are verified by recomputing
/// their features and digest from the received pixels; a mismatching chunk is
/// NAKed once, a repeat mismatch aborts the session.
inline std::pair<ImageManifest, TransferReport> receive_image(ByteStream& conn, ChunkStore& store,
                                                              const TransferConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    CountingStream stream(conn);

    Message first = read_message(stream);
    if (first.tag != MSG_ROOT) throw ProtocolViolation("expected MSG_ROOT first");
    const RootMsg& root = first.root;
    size_t total = static_cast<size_t>(root.n) * root.m;
    if (total == 0 || root.chunk_px == 0) throw ProtocolViolation("empty grid announced");

    ImageManifest manifest;
    manifest.image_id = root.image_id;
    manifest.root = root.root;
    manifest.n = root.n;
    manifest.m = root.m;
    manifest.chunk_px = root.chunk_px;
    manifest.orig_w = root.orig_w;
    manifest.orig_h = root.orig_h;
    manifest.chunk_digests.assign(total, TigerDigest{});

    TransferReport report;
    report.chunks_total = static_cast<uint32_t>(total);
    report.bytes_raw = static_cast<uint64_t>(root.orig_w) * root.orig_h;

    // Pending: NEED answered, chunk expected for this coordinate.
    // DupPending: HAVE answered because an identical digest is already in
    // flight in this session; resolves when the source chunk lands.
    enum class Slot : uint8_t { Unseen, Pending, DupPending, Held };
    std::vector<Slot> state(total, Slot::Unseen);
    std::vector<TigerDigest> announced(total);
    std::map<TigerDigest, std::vector<uint8_t>> pending_feat;
    std::map<TigerDigest, std::vector<size_t>> dup_waiting;
    std::set<size_t> nak_sent;
    size_t not_held = total;
    bool done_seen = false;
    size_t chunk_bytes = static_cast<size_t>(root.chunk_px) * root.chunk_px;

    auto index_of = [&](uint16_t i, uint16_t j) -> size_t {
        if (i >= root.n || j >= root.m) throw ProtocolViolation("chunk coordinate out of grid");
        return static_cast<size_t>(i) * root.m + j;
    };

    while (!(done_seen && not_held == 0)) {
        Message msg = read_message(stream);
        if (msg.tag == MSG_FEAT) {
            size_t idx = index_of(msg.feat.i, msg.feat.j);
            if (state[idx] != Slot::Unseen) throw ProtocolViolation("duplicate MSG_FEAT");
            announced[idx] = msg.feat.digest;
            auto pending = pending_feat.find(msg.feat.digest);
            if (store.has(msg.feat.feat, msg.feat.digest, chunk_bytes)) {
                state[idx] = Slot::Held;
                --not_held;
                store.bump(msg.feat.digest);
                ++report.chunks_deduped;
                send_coord(stream, ACK_HAVE, msg.feat.i, msg.feat.j);
            } else if (pending != pending_feat.end() && pending->second == msg.feat.feat) {
                state[idx] = Slot::DupPending;
                dup_waiting[msg.feat.digest].push_back(idx);
                ++report.chunks_deduped;
                send_coord(stream, ACK_HAVE, msg.feat.i, msg.feat.j);
            } else {
                state[idx] = Slot::Pending;
                pending_feat[msg.feat.digest] = msg.feat.feat;
                send_coord(stream, ACK_NEED, msg.feat.i, msg.feat.j);
            }
        } else if (msg.tag == MSG_CHUNK) {
            size_t idx = index_of(msg.chunk.i, msg.chunk.j);
            if (state[idx] != Slot::Pending) throw ProtocolViolation("unsolicited MSG_CHUNK");
            if (msg.chunk.pixels.size() != chunk_bytes) {
                throw ProtocolViolation("chunk payload size mismatch");
            }
            ImageChunk chunk;
            chunk.row = msg.chunk.i;
            chunk.col = msg.chunk.j;
            chunk.chunk_px = root.chunk_px;
            chunk.pixels = msg.chunk.pixels;
            std::vector<uint8_t> feat = encode_features(chunk_features(chunk, cfg.fast_t,
                                                                       cfg.max_kp));
            TigerDigest digest = tiger(feat);
            if (digest != announced[idx]) {
                if (nak_sent.contains(idx)) {
                    throw ProtocolViolation("chunk (" + std::to_string(msg.chunk.i) + "," +
                                            std::to_string(msg.chunk.j) +
                                            ") failed verification twice");
                }
                nak_sent.insert(idx);
                send_coord(stream, MSG_NAK, msg.chunk.i, msg.chunk.j);
                continue;
            }
            store.put(feat, digest, chunk.pixels);
            state[idx] = Slot::Held;
            --not_held;
            ++report.chunks_sent;
            pending_feat.erase(digest);
            auto dups = dup_waiting.find(digest);
            if (dups != dup_waiting.end()) {
                for (size_t dup_idx : dups->second) {
                    state[dup_idx] = Slot::Held;
                    --not_held;
                    store.bump(digest);
                }
                dup_waiting.erase(dups);
            }
        } else if (msg.tag == MSG_DONE) {
            done_seen = true;
            // A NAKed chunk may still be in flight past DONE; anything else
            // missing means the sender finished early.
            for (size_t idx = 0; idx < total; ++idx) {
                if (state[idx] == Slot::Held) continue;
                bool retrying = state[idx] == Slot::Pending && nak_sent.contains(idx);
                bool dup_of_retry = state[idx] == Slot::DupPending;
                if (!retrying && !dup_of_retry) {
                    throw ProtocolViolation("MSG_DONE with chunks still missing");
                }
            }
        } else {
            throw ProtocolViolation("unexpected tag " + std::to_string(msg.tag) +
                                    " in transfer session");
        }
    }

    for (size_t idx = 0; idx < total; ++idx) manifest.chunk_digests[idx] = announced[idx];
    MerkleTree rebuilt = merkle_build(manifest.chunk_digests, root.n, root.m);
    bool ok = roots_equal(rebuilt.root(), root.root);
    send_bare(stream, ok ? ROOT_OK : ROOT_MISMATCH);
    if (ok) store.save_manifest(manifest);

    report.verified = ok;
    report.bytes_on_wire = stream.bytes_read();
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {manifest, report};
}

/// Rebuild the image from the store, re-verifying the manifest root from the
/// stored feature bytes first.
inline GrayImage reconstruct(const ImageManifest& manifest, const ChunkStore& store) {
    size_t total = static_cast<size_t>(manifest.n) * manifest.m;
    std::vector<std::pair<uint16_t, uint16_t>> missing;
    std::vector<TigerDigest> recomputed(total);
    ChunkGrid grid;
    grid.rows = manifest.n;
    grid.cols = manifest.m;
    grid.chunk_px = manifest.chunk_px;
    grid.orig_w = manifest.orig_w;
    grid.orig_h = manifest.orig_h;
    grid.chunks.resize(total);

    for (size_t idx = 0; idx < total; ++idx) {
        uint16_t i = static_cast<uint16_t>(idx / manifest.m);
        uint16_t j = static_cast<uint16_t>(idx % manifest.m);
        auto entry = store.get(manifest.chunk_digests[idx]);
        if (!entry) {
            missing.emplace_back(i, j);
            continue;
        }
        recomputed[idx] = tiger(entry->first);
        ImageChunk& chunk = grid.chunks[idx];
        chunk.row = i;
        chunk.col = j;
        chunk.chunk_px = manifest.chunk_px;
        chunk.pixels = std::move(entry->second);
    }
    if (!missing.empty()) throw MissingChunk(std::move(missing));

    MerkleTree rebuilt = merkle_build(recomputed, manifest.n, manifest.m);
    if (!roots_equal(rebuilt.root(), manifest.root)) {
        throw RootMismatch("reconstructed root " + rebuilt.root().hex() +
                           " != manifest root " + manifest.root.hex());
    }
    return reassemble(grid, manifest.orig_w, manifest.orig_h);
}

}  // namespace dedupix
