#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "dedupix/identity.hpp"
#include "dedupix/store.hpp"

using namespace dedupix;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("dedupix_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

struct Triple {
    std::vector<uint8_t> feat;
    TigerDigest digest;
    std::vector<uint8_t> chunk;
};

Triple make_triple(uint8_t fill, size_t chunk_len = 64) {
    ImageChunk chunk;
    chunk.chunk_px = 8;
    chunk.pixels.assign(chunk_len, fill);
    Triple t;
    t.feat = encode_features(chunk_features(chunk, 20, 32));
    t.digest = tiger(t.feat);
    t.chunk = chunk.pixels;
    return t;
}

}  // namespace

TEST_CASE("fresh store is empty") {
    TempDir dir;
    ChunkStore store = ChunkStore::open(dir.path / "store");
    CHECK(store.size() == 0);
    CHECK(store.corrupt_entries().empty());
    Triple t = make_triple(1);
    CHECK_FALSE(store.has(t.feat, t.digest));
    CHECK_FALSE(store.get(t.digest).has_value());
}

TEST_CASE("put then has then get") {
    TempDir dir;
    ChunkStore store = ChunkStore::open(dir.path / "store");
    Triple t = make_triple(42);
    store.put(t.feat, t.digest, t.chunk);
    CHECK(store.has(t.feat, t.digest));
    auto entry = store.get(t.digest);
    REQUIRE(entry.has_value());
    CHECK(entry->first == t.feat);
    CHECK(entry->second == t.chunk);
}

TEST_CASE("digest precondition enforced") {
    TempDir dir;
    ChunkStore store = ChunkStore::open(dir.path / "store");
    Triple t = make_triple(7);
    TigerDigest wrong = t.digest;
    wrong.bytes[0] ^= 0xFF;
    CHECK_THROWS_AS(store.put(t.feat, wrong, t.chunk), DigestMismatch);
}

TEST_CASE("duplicate put bumps the refcount once stored") {
    TempDir dir;
    ChunkStore store = ChunkStore::open(dir.path / "store");
    Triple t = make_triple(9);
    store.put(t.feat, t.digest, t.chunk);
    store.put(t.feat, t.digest, t.chunk);
    CHECK(store.size() == 1);
    CHECK(store.index().at(t.digest).refcount == 2);
    store.bump(t.digest);
    CHECK(store.index().at(t.digest).refcount == 3);
}

TEST_CASE("store persists across reopen") {
    TempDir dir;
    fs::path root = dir.path / "store";
    Triple a = make_triple(1), b = make_triple(2), c = make_triple(3);
    {
        ChunkStore store = ChunkStore::open(root);
        store.put(a.feat, a.digest, a.chunk);
        store.put(b.feat, b.digest, b.chunk);
        store.put(c.feat, c.digest, c.chunk);
        store.flush_index();
    }
    ChunkStore reopened = ChunkStore::open(root);
    CHECK(reopened.size() == 3);
    for (const Triple& t : {a, b, c}) {
        CHECK(reopened.has(t.feat, t.digest));
    }
}

TEST_CASE("digest present but different feature bytes is a non-match") {
    TempDir dir;
    ChunkStore store = ChunkStore::open(dir.path / "store");
    Triple t = make_triple(5);
    store.put(t.feat, t.digest, t.chunk);
    std::vector<uint8_t> other_feat = t.feat;
    other_feat.back() ^= 0x01;
    CHECK_FALSE(store.has(other_feat, t.digest));
}

TEST_CASE("tampered chunk file is reported and skipped on open") {
    TempDir dir;
    fs::path root = dir.path / "store";
    Triple t = make_triple(11);
    {
        ChunkStore store = ChunkStore::open(root);
        store.put(t.feat, t.digest, t.chunk);
    }
    fs::path victim = root / "chunks" / (t.digest.hex() + ".bin");
    {
        std::fstream f(victim, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(6);
        f.put('\xA5');
    }
    ChunkStore reopened = ChunkStore::open(root);
    CHECK(reopened.size() == 0);
    REQUIRE(reopened.corrupt_entries().size() == 1);
    CHECK(reopened.corrupt_entries()[0] == t.digest.hex());
    CHECK_FALSE(reopened.has(t.feat, t.digest));
}

TEST_CASE("manifest serialization round trip") {
    ImageManifest mf;
    for (size_t i = 0; i < 16; ++i) mf.image_id[i] = static_cast<uint8_t>(i * 3);
    mf.root = tiger(std::string("root"));
    mf.n = 2;
    mf.m = 3;
    mf.chunk_px = 64;
    mf.orig_w = 500;
    mf.orig_h = 300;
    for (int i = 0; i < 6; ++i) mf.chunk_digests.push_back(tiger("leaf" + std::to_string(i)));
    ImageManifest back = ImageManifest::deserialize(mf.serialize());
    CHECK(back.image_id == mf.image_id);
    CHECK(back.root == mf.root);
    CHECK(back.n == 2);
    CHECK(back.m == 3);
    CHECK(back.chunk_px == 64);
    CHECK(back.orig_w == 500);
    CHECK(back.orig_h == 300);
    CHECK(back.chunk_digests == mf.chunk_digests);

    std::vector<uint8_t> blob = mf.serialize();
    blob.pop_back();
    CHECK_THROWS_AS(ImageManifest::deserialize(blob), TruncatedPayload);
}

TEST_CASE("manifest save and load through the store") {
    TempDir dir;
    ChunkStore store = ChunkStore::open(dir.path / "store");
    ImageManifest mf;
    mf.image_id[0] = 0xAB;
    mf.root = tiger(std::string("r"));
    mf.n = 1;
    mf.m = 1;
    mf.chunk_px = 8;
    mf.orig_w = 8;
    mf.orig_h = 8;
    mf.chunk_digests = {tiger(std::string("leaf"))};
    store.save_manifest(mf);
    ImageManifest loaded = store.load_manifest(mf.id_hex());
    CHECK(loaded.root == mf.root);
    CHECK(loaded.chunk_digests == mf.chunk_digests);
    CHECK_THROWS_AS(store.load_manifest("doesnotexist"), IoFailure);
}
