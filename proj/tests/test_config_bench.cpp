#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dedupix/bench.hpp"
#include "dedupix/config.hpp"
#include "dedupix/corpus.hpp"

using namespace dedupix;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("dedupix_cfg_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

fs::path write_file(const TempDir& dir, const std::string& name, const std::string& body) {
    fs::path p = dir.path / name;
    std::ofstream out(p);
    out << body;
    return p;
}

/// Strip the wall_time_s column (index 9) so timing noise is ignored.
std::string without_wall_time(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        int idx = 0;
        while (std::getline(cells, cell, ',')) {
            if (idx != 9) out << cell << ',';
            ++idx;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

TEST_CASE("config file parsing with comments and whitespace") {
    TempDir dir;
    fs::path p = write_file(dir, "a.conf",
                            "# bench setup\n"
                            "\n"
                            "depth = 2   # inline comment\n"
                            "  seed=99\n"
                            "latency_s = 0.01\n"
                            "connect_addr = 10.0.0.5:9000\n");
    Config cfg = load_config(p.string());
    CHECK(cfg.depth == 2);
    CHECK(cfg.seed == 99);
    CHECK(cfg.latency_s == Catch::Approx(0.01));
    CHECK(cfg.connect_addr == "10.0.0.5:9000");
    CHECK(cfg.hom_threshold == 2);  // untouched default
}

TEST_CASE("config parse errors carry line numbers") {
    TempDir dir;
    fs::path p = write_file(dir, "b.conf", "depth = 1\nthis line has no equals\n");
    try {
        load_config(p.string());
        FAIL("expected BadConfig");
    } catch (const BadConfig& e) {
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    CHECK_THROWS_AS(load_config((dir.path / "missing.conf").string()), IoFailure);
}

TEST_CASE("config rejects unknown keys and bad values") {
    Config cfg;
    CHECK_THROWS_AS(config_set(cfg, "no_such_key", "1"), BadConfig);
    CHECK_THROWS_AS(config_set(cfg, "depth", "three"), BadConfig);
    CHECK_THROWS_AS(config_set(cfg, "latency_s", "0.04x"), BadConfig);
    config_set(cfg, "fcm_m", "1.7");
    CHECK(cfg.fcm_m == Catch::Approx(1.7));
}

TEST_CASE("validate_config rejects out-of-range settings") {
    auto broken = [](auto mutate) {
        Config cfg;
        mutate(cfg);
        return cfg;
    };
    CHECK_THROWS_AS(validate_config(broken([](Config& c) { c.depth = 9; })), BadConfig);
    CHECK_THROWS_AS(validate_config(broken([](Config& c) { c.canny_ksize = 4; })), BadConfig);
    CHECK_THROWS_AS(validate_config(broken([](Config& c) { c.canny_low = 200; })), BadConfig);
    CHECK_THROWS_AS(validate_config(broken([](Config& c) { c.fcm_m = 1.0; })), BadConfig);
    CHECK_THROWS_AS(validate_config(broken([](Config& c) { c.photon_decay = 1.0; })), BadConfig);
    CHECK_THROWS_AS(validate_config(broken([](Config& c) { c.bandwidth_bytes_per_s = 0; })),
                    BadConfig);
    CHECK_NOTHROW(validate_config(Config{}));
}

TEST_CASE("split_addr") {
    auto [host, port] = split_addr("127.0.0.1:7740");
    CHECK(host == "127.0.0.1");
    CHECK(port == 7740);
    CHECK_THROWS_AS(split_addr("nohost"), BadConfig);
    CHECK_THROWS_AS(split_addr("h:0"), BadConfig);
    CHECK_THROWS_AS(split_addr("h:99999"), BadConfig);
    CHECK_THROWS_AS(split_addr("h:port"), BadConfig);
}

TEST_CASE("csv header and row formatting") {
    CHECK(csv_header() ==
          "run_label,depth,chunk_px,images,chunks_total,chunks_sent,chunks_deduped,"
          "bytes_raw,bytes_on_wire,wall_time_s,dedup_ratio,modeled_time_s,"
          "modeled_baseline_s,modeled_improvement");

    Config cfg;
    cfg.bandwidth_bytes_per_s = 1e6;
    cfg.latency_s = 0.01;
    BenchRow row;
    row.run_label = "demo";
    row.depth = 3;
    row.chunk_px = 64;
    row.images = 2;
    row.chunks_total = 128;
    row.chunks_sent = 32;
    row.chunks_deduped = 96;
    row.bytes_raw = 1000000;
    row.bytes_on_wire = 400000;
    row.wall_time_s = 0.125;
    CHECK(csv_line(row, cfg) ==
          "demo,3,64,2,128,32,96,1000000,400000,0.125000,0.750000,0.420000,1.010000,0.584158");
}

TEST_CASE("link model arithmetic") {
    Config cfg;
    cfg.bandwidth_bytes_per_s = 100e6;
    cfg.latency_s = 0.04;
    BenchRow row;
    row.bytes_raw = 100000000;
    row.bytes_on_wire = 50000000;
    CHECK(modeled_time_s(row, cfg) == Catch::Approx(0.5 + 0.08));
    CHECK(modeled_baseline_s(row, cfg) == Catch::Approx(1.0 + 0.04));
}

TEST_CASE("bench_depths runs are byte-identical up to wall time") {
    TempDir dir;
    std::vector<fs::path> corpus = make_synthetic_corpus(dir.path / "corpus", 6, 1);
    Config cfg;
    std::vector<uint32_t> depths = {1, 2};

    auto run = [&](const char* tag) {
        std::vector<BenchRow> rows = bench_depths(corpus, depths, cfg, dir.path / tag);
        std::string csv = csv_header() + "\n";
        for (const BenchRow& row : rows) csv += csv_line(row, cfg) + "\n";
        return csv;
    };
    std::string first = run("run_a");
    std::string second = run("run_b");
    CHECK(without_wall_time(first) == without_wall_time(second));
}

TEST_CASE("deeper grids do not reduce the dedup ratio on the synthetic corpus") {
    TempDir dir;
    std::vector<fs::path> corpus = make_synthetic_corpus(dir.path / "corpus", 8, 3);
    Config cfg;
    std::vector<BenchRow> rows = bench_depths(corpus, {1, 2, 3}, cfg, dir.path / "work");
    REQUIRE(rows.size() == 3);
    double prev = -1.0;
    for (const BenchRow& row : rows) {
        REQUIRE(row.chunks_total > 0);
        double ratio = static_cast<double>(row.chunks_deduped) / row.chunks_total;
        CHECK(ratio >= prev);
        prev = ratio;
    }
}
