#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "dedupix/config.hpp"
#include "dedupix/image.hpp"
#include "dedupix/netio.hpp"
#include "dedupix/store.hpp"
#include "dedupix/transfer.hpp"

namespace dedupix {

struct BenchRow {
    std::string run_label;
    uint32_t depth = 0;
    uint32_t chunk_px = 0;
    uint32_t images = 0;
    uint64_t chunks_total = 0;
    uint64_t chunks_sent = 0;
    uint64_t chunks_deduped = 0;
    uint64_t bytes_raw = 0;
    uint64_t bytes_on_wire = 0;
    double wall_time_s = 0.0;
};

inline std::string csv_header() {
    return "run_label,depth,chunk_px,images,chunks_total,chunks_sent,chunks_deduped,"
           "bytes_raw,bytes_on_wire,wall_time_s,dedup_ratio,modeled_time_s,"
           "modeled_baseline_s,modeled_improvement";
}

/// Link model: a session costs its wire bytes plus two latencies (pipelined
/// exchange, then the verification verdict); the raw baseline pays one latency
/// and the full raster.
inline double modeled_time_s(const BenchRow& row, const Config& cfg) {
    return row.bytes_on_wire / cfg.bandwidth_bytes_per_s + 2.0 * cfg.latency_s;
}

inline double modeled_baseline_s(const BenchRow& row, const Config& cfg) {
    return row.bytes_raw / cfg.bandwidth_bytes_per_s + cfg.latency_s;
}

inline std::string csv_line(const BenchRow& row, const Config& cfg) {
    double ratio = row.chunks_total == 0
                       ? 0.0
                       : static_cast<double>(row.chunks_deduped) / row.chunks_total;
    double model = modeled_time_s(row, cfg);
    double baseline = modeled_baseline_s(row, cfg);
    double improvement = baseline == 0.0 ? 0.0 : 1.0 - model / baseline;
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%s,%u,%u,%u,%llu,%llu,%llu,%llu,%llu,%.6f,%.6f,%.6f,%.6f,%.6f",
                  row.run_label.c_str(), row.depth, row.chunk_px, row.images,
                  static_cast<unsigned long long>(row.chunks_total),
                  static_cast<unsigned long long>(row.chunks_sent),
                  static_cast<unsigned long long>(row.chunks_deduped),
                  static_cast<unsigned long long>(row.bytes_raw),
                  static_cast<unsigned long long>(row.bytes_on_wire), row.wall_time_s, ratio,
                  model, baseline, improvement);
    return buf;
}

/// One in-process session: every image sent over a fresh duplex into `store`.
/// Returns the per-image sender reports in input order.
inline std::vector<TransferReport> run_loopback_session(const std::vector<GrayImage>& images,
                                                        ChunkStore& store,
                                                        const TransferConfig& tcfg) {
    std::vector<TransferReport> reports;
    for (const GrayImage& img : images) {
        MemoryDuplex duplex;
        std::exception_ptr recv_err;
        std::thread receiver([&] {
            try {
                receive_image(duplex.b(), store, tcfg);
            } catch (...) {
                recv_err = std::current_exception();
            }
        });
        TransferReport report;
        std::exception_ptr send_err;
        try {
            report = send_image(duplex.a(), img, tcfg);
        } catch (...) {
            send_err = std::current_exception();
        }
        duplex.a().close();
        receiver.join();
        if (send_err) std::rethrow_exception(send_err);
        if (recv_err) std::rethrow_exception(recv_err);
        reports.push_back(report);
    }
    return reports;
}

/// Depth sweep over a corpus; each depth gets a fresh store under work_dir.
inline std::vector<BenchRow> bench_depths(const std::vector<std::filesystem::path>& corpus,
                                          const std::vector<uint32_t>& depths, const Config& cfg,
                                          const std::filesystem::path& work_dir) {
    std::vector<GrayImage> images;
    for (const auto& path : corpus) images.push_back(load_pgm_file(path.string()));

    std::vector<BenchRow> rows;
    for (uint32_t depth : depths) {
        ChunkStore store = ChunkStore::open(work_dir / ("store_d" + std::to_string(depth)));
        TransferConfig tcfg;
        tcfg.depth = depth;
        tcfg.hom_threshold = cfg.hom_threshold;
        tcfg.fast_t = cfg.fast_t;
        tcfg.max_kp = cfg.max_kp;
        tcfg.pipeline_window = cfg.pipeline_window;

        BenchRow row;
        row.run_label = "depth_" + std::to_string(depth);
        row.depth = depth;
        row.images = static_cast<uint32_t>(images.size());
        for (const TransferReport& rep : run_loopback_session(images, store, tcfg)) {
            row.chunks_total += rep.chunks_total;
            row.chunks_sent += rep.chunks_sent;
            row.chunks_deduped += rep.chunks_deduped;
            row.bytes_raw += rep.bytes_raw;
            row.bytes_on_wire += rep.bytes_on_wire;
            row.wall_time_s += rep.wall_time_s;
        }
        if (!images.empty()) {
            ChunkGrid grid = chunk_grid(images.front(), depth, cfg.hom_threshold);
            row.chunk_px = grid.chunk_px;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dedupix
