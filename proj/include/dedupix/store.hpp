#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

#include "dedupix/error.hpp"
#include "dedupix/identity.hpp"
#include "dedupix/merkle.hpp"
#include "dedupix/protocol.hpp"

namespace dedupix {

/// Per-image record needed for reconstruction: root, grid shape, digests.
struct ImageManifest {
    ImageId image_id{};
    TigerDigest root;
    uint16_t n = 0;
    uint16_t m = 0;
    uint16_t chunk_px = 0;
    uint32_t orig_w = 0;
    uint32_t orig_h = 0;
    std::vector<TigerDigest> chunk_digests;  // row-major

    std::vector<uint8_t> serialize() const {
        std::vector<uint8_t> out;
        out.insert(out.end(), image_id.begin(), image_id.end());
        out.insert(out.end(), root.bytes.begin(), root.bytes.end());
        wire::put_u16(out, n);
        wire::put_u16(out, m);
        wire::put_u16(out, chunk_px);
        wire::put_u32(out, orig_w);
        wire::put_u32(out, orig_h);
        for (const TigerDigest& d : chunk_digests) {
            out.insert(out.end(), d.bytes.begin(), d.bytes.end());
        }
        return out;
    }

    static ImageManifest deserialize(std::span<const uint8_t> bytes) {
        if (bytes.size() < 54) throw TruncatedPayload("manifest too short");
        ImageManifest mf;
        std::copy(bytes.begin(), bytes.begin() + 16, mf.image_id.begin());
        std::copy(bytes.begin() + 16, bytes.begin() + 40, mf.root.bytes.begin());
        mf.n = wire::get_u16(bytes.data() + 40);
        mf.m = wire::get_u16(bytes.data() + 42);
        mf.chunk_px = wire::get_u16(bytes.data() + 44);
        mf.orig_w = wire::get_u32(bytes.data() + 46);
        mf.orig_h = wire::get_u32(bytes.data() + 50);
        size_t count = static_cast<size_t>(mf.n) * mf.m;
        if (bytes.size() != 54 + count * 24) {
            throw TruncatedPayload("manifest digest list size mismatch");
        }
        for (size_t c = 0; c < count; ++c) {
            TigerDigest d;
            std::copy(bytes.begin() + 54 + c * 24, bytes.begin() + 54 + (c + 1) * 24,
                      d.bytes.begin());
            mf.chunk_digests.push_back(d);
        }
        return mf;
    }

    std::string id_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        for (uint8_t b : image_id) {
            out.push_back(digits[b >> 4]);
            out.push_back(digits[b & 0xF]);
        }
        return out;
    }
};

/// Persistent content-addressed map digest -> (feature bytes, chunk bytes).
/// Layout: <root>/chunks/<hex>.bin (u32 BE feat_len, feat, chunk bytes),
/// <root>/index.tsv, <root>/manifests/<image-id>.manifest.
class ChunkStore {
  public:
    struct Entry {
        uint32_t feat_len = 0;
        uint32_t chunk_len = 0;
        uint32_t refcount = 0;
    };

    static ChunkStore open(const std::filesystem::path& root_dir) {
        ChunkStore store;
        store.root_ = root_dir;
        std::error_code ec;
        std::filesystem::create_directories(root_dir / "chunks", ec);
        std::filesystem::create_directories(root_dir / "manifests", ec);
        if (ec) throw IoFailure("cannot create store at " + root_dir.string());

        std::ifstream index(root_dir / "index.tsv");
        std::string line;
        while (std::getline(index, line)) {
            std::istringstream ls(line);
            std::string hex;
            Entry entry;
            if (!(ls >> hex >> entry.feat_len >> entry.chunk_len >> entry.refcount)) continue;
            TigerDigest digest = TigerDigest::from_hex(hex);
            // Verify the chunk file against its digest; bad entries are
            // reported in corrupt_entries and skipped.
            std::vector<uint8_t> feat, chunk;
            if (!store.read_chunk_file(digest, feat, chunk) || tiger(feat) != digest ||
                feat.size() != entry.feat_len || chunk.size() != entry.chunk_len) {
                store.corrupt_entries_.push_back(hex);
                store.index_.erase(digest);
                continue;
            }
            store.index_[digest] = entry;  // last line for a digest wins
        }
        return store;
    }

    /// True when the digest is stored with exactly these feature bytes. The
    /// fallback descriptor does not depend on chunk size, so callers that need
    /// pixels of a specific size must pass expected_chunk_len (0 = any).
    bool has(std::span<const uint8_t> feature_bytes, const TigerDigest& digest,
             size_t expected_chunk_len = 0) const {
        std::shared_lock lock(*mu_);
        auto it = index_.find(digest);
        if (it == index_.end()) return false;
        if (expected_chunk_len != 0 && it->second.chunk_len != expected_chunk_len) return false;
        std::vector<uint8_t> feat, chunk;
        if (!read_chunk_file(digest, feat, chunk)) return false;
        return feat.size() == feature_bytes.size() &&
               std::equal(feat.begin(), feat.end(), feature_bytes.begin());
    }

    /// Durable insert; idempotent for identical triples (refcount bumped).
    void put(std::span<const uint8_t> feature_bytes, const TigerDigest& digest,
             std::span<const uint8_t> chunk_bytes) {
        std::unique_lock lock(*mu_);
        if (tiger(feature_bytes) != digest) {
            throw DigestMismatch("digest does not match feature bytes: " + digest.hex());
        }
        auto it = index_.find(digest);
        if (it != index_.end() && it->second.chunk_len == chunk_bytes.size()) {
            ++it->second.refcount;
            append_index_line(digest, it->second);
            return;
        }
        uint32_t refcount = it != index_.end() ? it->second.refcount + 1 : 1;
        // Chunk file first, then the index entry, so a crash can leave at
        // worst an orphan file.
        std::filesystem::path final_path = chunk_path(digest);
        std::filesystem::path tmp_path = final_path;
        tmp_path += ".tmp";
        {
            std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
            if (!out) throw IoFailure("cannot write " + tmp_path.string());
            std::vector<uint8_t> hdr;
            wire::put_u32(hdr, static_cast<uint32_t>(feature_bytes.size()));
            out.write(reinterpret_cast<const char*>(hdr.data()), hdr.size());
            out.write(reinterpret_cast<const char*>(feature_bytes.data()), feature_bytes.size());
            out.write(reinterpret_cast<const char*>(chunk_bytes.data()), chunk_bytes.size());
            out.flush();
            if (!out) throw IoFailure("short write to " + tmp_path.string());
        }
        std::error_code ec;
        std::filesystem::rename(tmp_path, final_path, ec);
        if (ec) throw IoFailure("rename failed: " + final_path.string());

        Entry entry{static_cast<uint32_t>(feature_bytes.size()),
                    static_cast<uint32_t>(chunk_bytes.size()), refcount};
        index_[digest] = entry;
        append_index_line(digest, entry);
    }

    /// Bump the refcount of an already-present digest (dedup hit bookkeeping).
    void bump(const TigerDigest& digest) {
        std::unique_lock lock(*mu_);
        auto it = index_.find(digest);
        if (it == index_.end()) return;
        ++it->second.refcount;
        append_index_line(digest, it->second);
    }

    std::optional<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>> get(
        const TigerDigest& digest) const {
        std::shared_lock lock(*mu_);
        if (!index_.contains(digest)) return std::nullopt;
        std::vector<uint8_t> feat, chunk;
        if (!read_chunk_file(digest, feat, chunk)) return std::nullopt;
        return std::make_pair(std::move(feat), std::move(chunk));
    }

    void save_manifest(const ImageManifest& mf) const {
        std::filesystem::path path = root_ / "manifests" / (mf.id_hex() + ".manifest");
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot write manifest " + path.string());
        std::vector<uint8_t> bytes = mf.serialize();
        out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    }

    ImageManifest load_manifest(const std::string& id_hex) const {
        std::filesystem::path path = root_ / "manifests" / (id_hex + ".manifest");
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoFailure("cannot read manifest " + path.string());
        std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
        return ImageManifest::deserialize(bytes);
    }

    size_t size() const { return index_.size(); }
    const std::map<TigerDigest, Entry>& index() const { return index_; }
    const std::vector<std::string>& corrupt_entries() const { return corrupt_entries_; }
    const std::filesystem::path& root_dir() const { return root_; }

    /// Rewrite index.tsv compacted to one line per digest.
    void flush_index() const {
        std::filesystem::path tmp = root_ / "index.tsv.tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            for (const auto& [digest, entry] : index_) {
                out << digest.hex() << '\t' << entry.feat_len << '\t' << entry.chunk_len << '\t'
                    << entry.refcount << '\n';
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, root_ / "index.tsv", ec);
    }

  private:
    std::filesystem::path chunk_path(const TigerDigest& digest) const {
        return root_ / "chunks" / (digest.hex() + ".bin");
    }

    bool read_chunk_file(const TigerDigest& digest, std::vector<uint8_t>& feat,
                         std::vector<uint8_t>& chunk) const {
        std::ifstream in(chunk_path(digest), std::ios::binary);
        if (!in) return false;
        std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
        if (bytes.size() < 4) return false;
        uint32_t feat_len = wire::get_u32(bytes.data());
        if (bytes.size() < 4 + static_cast<size_t>(feat_len)) return false;
        feat.assign(bytes.begin() + 4, bytes.begin() + 4 + feat_len);
        chunk.assign(bytes.begin() + 4 + feat_len, bytes.end());
        return true;
    }

    void append_index_line(const TigerDigest& digest, const Entry& entry) {
        std::ofstream out(root_ / "index.tsv", std::ios::app);
        if (!out) throw IoFailure("cannot append to index.tsv");
        out << digest.hex() << '\t' << entry.feat_len << '\t' << entry.chunk_len << '\t'
            << entry.refcount << '\n';
        out.flush();
    }

    // Heap-allocated so the store stays movable.
    std::unique_ptr<std::shared_mutex> mu_ = std::make_unique<std::shared_mutex>();
    std::filesystem::path root_;
    std::map<TigerDigest, Entry> index_;
    std::vector<std::string> corrupt_entries_;
};

}  // namespace dedupix
