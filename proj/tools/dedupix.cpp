// dedupix: deduplicating image transfer over content-addressed chunk stores.
//
// Exit codes: 0 success, 1 internal error, 2 I/O or network failure,
// 3 configuration violation, 4 integrity (root) mismatch.

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dedupix/dedupix.hpp"

namespace fs = std::filesystem;
using namespace dedupix;

namespace {

constexpr const char* kConfigKeys[] = {
    "seed",        "depth",         "hom_threshold",   "canny_sigma",
    "canny_ksize", "canny_low",     "canny_high",      "fast_t",
    "max_kp",      "kmeans_k",      "kmeans_tol",      "kmeans_max_iter",
    "fcm_c",       "fcm_m",         "fcm_eps",         "fcm_max_iter",
    "photon_epsilon", "photon_decay", "listen_addr",   "connect_addr",
    "pipeline_window", "bandwidth_bytes_per_s", "latency_s",
};

struct CliState {
    std::string config_path;
    std::map<std::string, std::string> overrides;
};

void add_config_flags(CLI::App* cmd, CliState& state) {
    cmd->add_option("--config", state.config_path, "flat key = value config file");
    for (const char* key : kConfigKeys) {
        std::string name = key;
        cmd->add_option_function<std::string>(
            "--" + name, [&state, name](const std::string& v) { state.overrides[name] = v; },
            "override config key " + name);
    }
}

Config resolve_config(const CliState& state) {
    Config cfg;
    if (!state.config_path.empty()) cfg = load_config(state.config_path);
    for (const auto& [key, value] : state.overrides) config_set(cfg, key, value);
    validate_config(cfg);
    return cfg;
}

TransferConfig transfer_config(const Config& cfg) {
    TransferConfig tcfg;
    tcfg.depth = cfg.depth;
    tcfg.hom_threshold = cfg.hom_threshold;
    tcfg.fast_t = cfg.fast_t;
    tcfg.max_kp = cfg.max_kp;
    tcfg.pipeline_window = cfg.pipeline_window;
    return tcfg;
}

int cmd_preprocess(const Config& cfg, const std::string& input, const std::string& out_prefix) {
    GrayImage img = load_pgm_file(input);
    EdgeMap edges = canny(img, cfg.canny_sigma, cfg.canny_ksize, cfg.canny_low, cfg.canny_high);
    PhotonMap photons = photon_map(edges, cfg.photon_epsilon, cfg.photon_decay);
    auto [binary, threshold] = binarize_otsu(img);

    save_pgm_file(out_prefix + "edge.pgm", edges.to_image());
    save_pgm_file(out_prefix + "photon.pgm", photons.to_image());
    GrayImage bin_img(img.width, img.height);
    for (size_t p = 0; p < binary.size(); ++p) bin_img.data[p] = binary[p] ? 255 : 0;
    save_pgm_file(out_prefix + "binary.pgm", bin_img);
    std::cout << "otsu_threshold " << static_cast<int>(threshold) << "\n";
    return 0;
}

int cmd_chunk(const Config& cfg, const std::string& input) {
    GrayImage img = load_pgm_file(input);
    ChunkGrid grid = chunk_grid(img, cfg.depth, cfg.hom_threshold);
    std::vector<TigerDigest> digests;
    for (const ImageChunk& chunk : grid.chunks) {
        FeatureVector fv = chunk_features(chunk, cfg.fast_t, cfg.max_kp);
        digests.push_back(tiger(encode_features(fv)));
        std::cout << chunk.row << "\t" << chunk.col << "\t" << digests.back().hex() << "\t"
                  << (chunk.homogeneous ? "hom" : "tex") << "\n";
    }
    MerkleTree tree = merkle_build(digests, grid.rows, grid.cols);
    std::cout << "root\t" << tree.root().hex() << "\n";
    return 0;
}

volatile std::sig_atomic_t g_stop = 0;
TcpListener* g_listener = nullptr;

void handle_term(int) {
    g_stop = 1;
    if (g_listener) g_listener->close();
}

int cmd_serve(const Config& cfg, const std::string& store_dir) {
    ChunkStore store = ChunkStore::open(store_dir);
    auto [host, port] = split_addr(cfg.listen_addr);
    TcpListener listener(host, port);
    g_listener = &listener;
    std::signal(SIGTERM, handle_term);
    std::signal(SIGINT, handle_term);
    std::cerr << "listening on " << host << ":" << listener.port() << "\n";

    TransferConfig tcfg = transfer_config(cfg);
    while (!g_stop) {
        TcpStream conn = [&]() -> TcpStream {
            try {
                return listener.accept();
            } catch (const IoFailure&) {
                if (g_stop) std::exit((store.flush_index(), 0));
                throw;
            }
        }();
        // One connection carries images back-to-back until the peer closes.
        try {
            for (;;) {
                auto [manifest, report] = receive_image(conn, store, tcfg);
                std::cout << manifest.id_hex() << " chunks=" << report.chunks_total
                          << " received=" << report.chunks_sent
                          << " deduped=" << report.chunks_deduped
                          << " verified=" << (report.verified ? "yes" : "no") << "\n";
                std::cout.flush();
            }
        } catch (const ConnectionLost&) {
            // end of session
        } catch (const Error& e) {
            std::cerr << "session aborted: " << e.what() << "\n";
        }
        store.flush_index();
    }
    store.flush_index();
    return 0;
}

int cmd_send(const Config& cfg, const std::vector<std::string>& paths) {
    if (paths.empty()) throw BadConfig("no input images given");
    std::vector<GrayImage> images;
    std::vector<std::vector<double>> summaries;
    for (const std::string& path : paths) {
        images.push_back(load_pgm_file(path));
        summaries.push_back(image_summary(images.back(), cfg.depth, cfg.hom_threshold));
    }
    uint32_t k = std::min<uint32_t>(cfg.kmeans_k, static_cast<uint32_t>(images.size()));
    std::vector<uint32_t> groups =
        cluster_images(summaries, k, cfg.kmeans_max_iter, cfg.kmeans_tol, cfg.seed);

    std::vector<size_t> order;
    for (uint32_t g = 0; g < k; ++g) {
        for (size_t i = 0; i < images.size(); ++i) {
            if (groups[i] == g) order.push_back(i);
        }
    }

    auto [host, port] = split_addr(cfg.connect_addr);
    TcpStream conn = TcpStream::connect(host, port);
    TransferConfig tcfg = transfer_config(cfg);

    std::cout << csv_header() << "\n";
    BenchRow summary;
    summary.run_label = "summary";
    summary.depth = cfg.depth;
    summary.images = static_cast<uint32_t>(images.size());
    bool all_verified = true;
    for (size_t idx : order) {
        TransferReport rep = send_image(conn, images[idx], tcfg);
        BenchRow row;
        row.run_label = fs::path(paths[idx]).filename().string();
        row.depth = cfg.depth;
        row.chunk_px = chunk_grid(images[idx], cfg.depth, cfg.hom_threshold).chunk_px;
        row.images = 1;
        row.chunks_total = rep.chunks_total;
        row.chunks_sent = rep.chunks_sent;
        row.chunks_deduped = rep.chunks_deduped;
        row.bytes_raw = rep.bytes_raw;
        row.bytes_on_wire = rep.bytes_on_wire;
        row.wall_time_s = rep.wall_time_s;
        std::cout << csv_line(row, cfg) << "\n";
        summary.chunk_px = row.chunk_px;
        summary.chunks_total += rep.chunks_total;
        summary.chunks_sent += rep.chunks_sent;
        summary.chunks_deduped += rep.chunks_deduped;
        summary.bytes_raw += rep.bytes_raw;
        summary.bytes_on_wire += rep.bytes_on_wire;
        summary.wall_time_s += rep.wall_time_s;
        if (!rep.verified) all_verified = false;
    }
    std::cout << csv_line(summary, cfg) << "\n";
    return all_verified ? 0 : 4;
}

int cmd_bench(const Config& cfg, const std::string& corpus_dir,
              const std::vector<uint32_t>& depths, const std::string& out_path) {
    std::vector<fs::path> corpus;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
        if (entry.path().extension() == ".pgm") corpus.push_back(entry.path());
    }
    std::sort(corpus.begin(), corpus.end());
    if (corpus.size() < 2) throw BadConfig("bench needs a corpus of at least 2 PGMs");

    fs::path work = fs::temp_directory_path() / ("dedupix_bench_" + std::to_string(::getpid()));
    std::vector<BenchRow> rows = bench_depths(corpus, depths, cfg, work);
    fs::remove_all(work);

    std::string csv = csv_header() + "\n";
    for (const BenchRow& row : rows) csv += csv_line(row, cfg) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw IoFailure("cannot write " + out_path);
        out << csv;
        std::cout << csv;
    }
    return 0;
}

int cmd_corpus(const std::string& out_dir, uint32_t count, uint64_t seed) {
    make_synthetic_corpus(out_dir, count, seed);
    return 0;
}

int cmd_reconstruct(const std::string& store_dir, const std::string& id_hex,
                    const std::string& out_path) {
    ChunkStore store = ChunkStore::open(store_dir);
    ImageManifest manifest = store.load_manifest(id_hex);
    GrayImage img = reconstruct(manifest, store);
    save_pgm_file(out_path, img);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deduplicating image transfer toolkit"};
    app.require_subcommand(1);
    CliState state;

    std::string input, out_prefix = "out_", store_dir = "store", id_hex, out_path;
    std::vector<std::string> paths;
    std::vector<uint32_t> depths = {1, 2, 3, 4};
    uint32_t count = 10;
    uint64_t corpus_seed = 1;

    auto* pre = app.add_subcommand("preprocess", "edge map, photon map, Otsu binarization");
    pre->add_option("input", input)->required();
    pre->add_option("--out-prefix", out_prefix);
    add_config_flags(pre, state);

    auto* chk = app.add_subcommand("chunk", "chunk grid digests and Merkle root");
    chk->add_option("input", input)->required();
    add_config_flags(chk, state);

    auto* srv = app.add_subcommand("serve", "run a receiving node");
    srv->add_option("--store", store_dir);
    add_config_flags(srv, state);

    auto* snd = app.add_subcommand("send", "send images to a serving node");
    snd->add_option("paths", paths);
    add_config_flags(snd, state);

    auto* ben = app.add_subcommand("bench", "depth sweep over a corpus, CSV report");
    ben->add_option("corpus_dir", input)->required();
    ben->add_option("--depths", depths);
    ben->add_option("--out", out_path);
    add_config_flags(ben, state);

    auto* cor = app.add_subcommand("corpus", "generate a synthetic corpus");
    cor->add_option("out_dir", input)->required();
    cor->add_option("--count", count);
    cor->add_option("--seed", corpus_seed);

    auto* rec = app.add_subcommand("reconstruct", "rebuild an image from a store");
    rec->add_option("image_id", id_hex)->required();
    rec->add_option("output", out_path)->required();
    rec->add_option("--store", store_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cor->parsed()) return cmd_corpus(input, count, corpus_seed);
        if (rec->parsed()) return cmd_reconstruct(store_dir, id_hex, out_path);
        Config cfg = resolve_config(state);
        if (pre->parsed()) return cmd_preprocess(cfg, input, out_prefix);
        if (chk->parsed()) return cmd_chunk(cfg, input);
        if (srv->parsed()) return cmd_serve(cfg, store_dir);
        if (snd->parsed()) return cmd_send(cfg, paths);
        if (ben->parsed()) return cmd_bench(cfg, input, depths, out_path);
    } catch (const BadConfig& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const RootMismatch& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 4;
    } catch (const MissingChunk& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 4;
    } catch (const IoFailure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const ConnectionLost& e) {
        std::cerr << "network error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
