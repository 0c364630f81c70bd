#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "dedupix/error.hpp"

namespace dedupix {

/// Runtime knobs for every module. Defaults match the documented bench setup
/// (100 MB/s link, 40 ms latency, depth-3 grid).
struct Config {
    uint64_t seed = 1;
    uint32_t depth = 3;
    uint8_t hom_threshold = 2;

    double canny_sigma = 1.0;
    uint32_t canny_ksize = 5;
    uint8_t canny_low = 40;
    uint8_t canny_high = 100;

    int32_t fast_t = 20;
    uint32_t max_kp = 32;

    uint32_t kmeans_k = 3;
    double kmeans_tol = 1e-6;
    uint32_t kmeans_max_iter = 200;

    uint32_t fcm_c = 3;
    double fcm_m = 2.0;
    double fcm_eps = 1e-5;
    uint32_t fcm_max_iter = 200;

    double photon_epsilon = 1.0;
    double photon_decay = 0.75;

    std::string listen_addr = "127.0.0.1:7740";
    std::string connect_addr = "127.0.0.1:7740";
    uint32_t pipeline_window = 64;

    double bandwidth_bytes_per_s = 100e6;
    double latency_s = 0.040;
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

template <typename T>
void parse_num(const std::string& key, const std::string& value, T& out) {
    std::istringstream ss(value);
    long double v;
    if (!(ss >> v) || !(ss >> std::ws).eof()) {
        throw BadConfig(key + ": not a number: '" + value + "'");
    }
    out = static_cast<T>(v);
}

}  // namespace detail

/// Apply one flat `key = value` assignment; unknown keys are rejected.
inline void config_set(Config& cfg, const std::string& key, const std::string& value) {
    if (key == "seed") detail::parse_num(key, value, cfg.seed);
    else if (key == "depth") detail::parse_num(key, value, cfg.depth);
    else if (key == "hom_threshold") detail::parse_num(key, value, cfg.hom_threshold);
    else if (key == "canny_sigma") detail::parse_num(key, value, cfg.canny_sigma);
    else if (key == "canny_ksize") detail::parse_num(key, value, cfg.canny_ksize);
    else if (key == "canny_low") detail::parse_num(key, value, cfg.canny_low);
    else if (key == "canny_high") detail::parse_num(key, value, cfg.canny_high);
    else if (key == "fast_t") detail::parse_num(key, value, cfg.fast_t);
    else if (key == "max_kp") detail::parse_num(key, value, cfg.max_kp);
    else if (key == "kmeans_k") detail::parse_num(key, value, cfg.kmeans_k);
    else if (key == "kmeans_tol") detail::parse_num(key, value, cfg.kmeans_tol);
    else if (key == "kmeans_max_iter") detail::parse_num(key, value, cfg.kmeans_max_iter);
    else if (key == "fcm_c") detail::parse_num(key, value, cfg.fcm_c);
    else if (key == "fcm_m") detail::parse_num(key, value, cfg.fcm_m);
    else if (key == "fcm_eps") detail::parse_num(key, value, cfg.fcm_eps);
    else if (key == "fcm_max_iter") detail::parse_num(key, value, cfg.fcm_max_iter);
    else if (key == "photon_epsilon") detail::parse_num(key, value, cfg.photon_epsilon);
    else if (key == "photon_decay") detail::parse_num(key, value, cfg.photon_decay);
    else if (key == "listen_addr") cfg.listen_addr = value;
    else if (key == "connect_addr") cfg.connect_addr = value;
    else if (key == "pipeline_window") detail::parse_num(key, value, cfg.pipeline_window);
    else if (key == "bandwidth_bytes_per_s") detail::parse_num(key, value, cfg.bandwidth_bytes_per_s);
    else if (key == "latency_s") detail::parse_num(key, value, cfg.latency_s);
    else throw BadConfig("unknown key '" + key + "'");
}

inline void validate_config(const Config& cfg) {
    if (cfg.depth > 8) throw BadConfig("depth must be <= 8");
    if (cfg.canny_ksize % 2 == 0 || cfg.canny_ksize < 3) {
        throw BadConfig("canny_ksize must be odd and >= 3");
    }
    if (cfg.canny_low > cfg.canny_high) throw BadConfig("canny_low must be <= canny_high");
    if (cfg.canny_sigma <= 0) throw BadConfig("canny_sigma must be positive");
    if (cfg.kmeans_k == 0) throw BadConfig("kmeans_k must be >= 1");
    if (cfg.fcm_c == 0) throw BadConfig("fcm_c must be >= 1");
    if (cfg.fcm_m <= 1.0) throw BadConfig("fcm_m must be > 1");
    if (cfg.fcm_eps <= 0) throw BadConfig("fcm_eps must be positive");
    if (cfg.photon_decay <= 0 || cfg.photon_decay >= 1) {
        throw BadConfig("photon_decay must be in (0, 1)");
    }
    if (cfg.photon_epsilon <= 0) throw BadConfig("photon_epsilon must be positive");
    if (cfg.bandwidth_bytes_per_s <= 0) throw BadConfig("bandwidth must be positive");
    if (cfg.latency_s < 0) throw BadConfig("latency must be non-negative");
}

/// Flat `key = value` file with `#` comments and blank lines.
inline Config load_config(const std::string& path, Config base = {}) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot read config " + path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw BadConfig(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        config_set(base, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
    }
    validate_config(base);
    return base;
}

/// Split "host:port" used by listen_addr / connect_addr.
inline std::pair<std::string, uint16_t> split_addr(const std::string& addr) {
    size_t colon = addr.rfind(':');
    if (colon == std::string::npos) throw BadConfig("address must be host:port: " + addr);
    int port = 0;
    try {
        port = std::stoi(addr.substr(colon + 1));
    } catch (const std::exception&) {
        throw BadConfig("bad port in " + addr);
    }
    if (port <= 0 || port > 65535) throw BadConfig("bad port in " + addr);
    return {addr.substr(0, colon), static_cast<uint16_t>(port)};
}

}  // namespace dedupix
