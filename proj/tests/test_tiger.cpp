#include <catch2/catch_amalgamated.hpp>

#include <bitset>
#include <string>
#include <vector>

#include "dedupix/rng.hpp"
#include "dedupix/tiger.hpp"

using namespace dedupix;

TEST_CASE("tiger matches published reference vectors") {
    CHECK(tiger(std::string("")).hex() == "3293ac630c13f0245f92bbb1766e16167a4e58492dde73f3");
    CHECK(tiger(std::string("abc")).hex() == "2aab1484e8c158f2bfb8c5ff41b57a525129131c957b5f93");
    CHECK(tiger(std::string("Tiger")).hex() ==
          "dd00230799f5009fec6debc838bb6a27df2b9d6f110c7937");
    CHECK(tiger(std::string("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+-"))
              .hex() == "f71c8583902afb879edfe610f82c0d4786a3a534504486b5");
}

TEST_CASE("tiger hex round trip") {
    TigerDigest d = tiger(std::string("round trip"));
    CHECK(TigerDigest::from_hex(d.hex()) == d);
}

TEST_CASE("roots_equal") {
    TigerDigest h = tiger(std::string("x"));
    TigerDigest h2 = h;
    CHECK(roots_equal(h, h2));
    h2.bytes[5] ^= 0x01;
    CHECK_FALSE(roots_equal(h, h2));
    CHECK(roots_equal(h2, h) == roots_equal(h, h2));
}

TEST_CASE("tiger avalanche on single-bit flips") {
    Rng rng(42);
    std::vector<uint8_t> msg(1024);
    for (auto& b : msg) b = static_cast<uint8_t>(rng.next_below(256));
    double total_flipped = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<uint8_t> mutated = msg;
        size_t bit = rng.next_below(1024 * 8);
        mutated[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
        TigerDigest a = tiger(msg);
        TigerDigest b = tiger(mutated);
        int flipped = 0;
        for (int i = 0; i < 24; ++i) {
            flipped += std::bitset<8>(a.bytes[i] ^ b.bytes[i]).count();
        }
        total_flipped += flipped;
    }
    CHECK(total_flipped / 100.0 >= 60.0);
}
