#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <span>
#include <tuple>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dedupix/error.hpp"
#include "dedupix/rng.hpp"

namespace dedupix {

/// Fully-connected sigmoid network. weights[l] has shape (sizes[l+1] x sizes[l]).
struct MlpModel {
    std::vector<uint32_t> layer_sizes;
    std::vector<std::vector<double>> weights;  // row-major per layer
    std::vector<std::vector<double>> biases;

    static MlpModel zeros(std::vector<uint32_t> sizes) {
        MlpModel m;
        m.layer_sizes = std::move(sizes);
        for (size_t l = 0; l + 1 < m.layer_sizes.size(); ++l) {
            m.weights.emplace_back(
                static_cast<size_t>(m.layer_sizes[l + 1]) * m.layer_sizes[l], 0.0);
            m.biases.emplace_back(m.layer_sizes[l + 1], 0.0);
        }
        return m;
    }

    /// Uniform init in [-1/sqrt(fan_in), +1/sqrt(fan_in)].
    static MlpModel random(std::vector<uint32_t> sizes, uint64_t seed) {
        MlpModel m = zeros(std::move(sizes));
        Rng rng(seed);
        for (size_t l = 0; l < m.weights.size(); ++l) {
            double bound = 1.0 / std::sqrt(static_cast<double>(m.layer_sizes[l]));
            for (double& w : m.weights[l]) w = rng.next_range(-bound, bound);
            for (double& b : m.biases[l]) b = rng.next_range(-bound, bound);
        }
        return m;
    }
};

struct LabeledDataset {
    std::vector<std::vector<double>> inputs;
    std::vector<std::vector<double>> labels;  // one-hot rows
};

inline double sigmoid(double t) { return 1.0 / (1.0 + std::exp(-t)); }

/// Layer-by-layer y = sigmoid(Wx + b).
inline std::vector<double> forward(const MlpModel& model, const std::vector<double>& x) {
    if (x.size() != model.layer_sizes[0]) {
        throw DimensionMismatch("input size " + std::to_string(x.size()) + ", model expects " +
                                std::to_string(model.layer_sizes[0]));
    }
    std::vector<double> act = x;
    for (size_t l = 0; l < model.weights.size(); ++l) {
        size_t out_n = model.layer_sizes[l + 1];
        size_t in_n = model.layer_sizes[l];
        std::vector<double> next(out_n);
        for (size_t o = 0; o < out_n; ++o) {
            double z = model.biases[l][o];
            const double* row = &model.weights[l][o * in_n];
            for (size_t i = 0; i < in_n; ++i) z += row[i] * act[i];
            next[o] = sigmoid(z);
        }
        act = std::move(next);
    }
    return act;
}

inline double clamp_pred(double p) { return std::clamp(p, 1e-12, 1.0 - 1e-12); }

/// Average binary cross-entropy, summed over output components.
inline double loss(const std::vector<std::vector<double>>& predictions,
                   const std::vector<std::vector<double>>& targets) {
    if (predictions.size() != targets.size() || predictions.empty()) {
        throw ShapeMismatch("predictions/targets count mismatch");
    }
    double total = 0.0;
    for (size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i].size() != targets[i].size()) {
            throw ShapeMismatch("prediction/target width mismatch at row " + std::to_string(i));
        }
        for (size_t c = 0; c < predictions[i].size(); ++c) {
            double p = clamp_pred(predictions[i][c]);
            double y = targets[i][c];
            total -= y * std::log(p) + (1.0 - y) * std::log(1.0 - p);
        }
    }
    return total / static_cast<double>(predictions.size());
}

/// One full gradient-descent step on the batch. Returns the pre-update loss.
inline double backprop_step(MlpModel& model, const LabeledDataset& batch, double lr) {
    if (batch.inputs.empty()) throw EmptyInput("backprop batch is empty");
    size_t layers = model.weights.size();
    std::vector<std::vector<double>> grad_w(layers), grad_b(layers);
    for (size_t l = 0; l < layers; ++l) {
        grad_w[l].assign(model.weights[l].size(), 0.0);
        grad_b[l].assign(model.biases[l].size(), 0.0);
    }

    double batch_loss = 0.0;
    size_t n = batch.inputs.size();
    for (size_t s = 0; s < n; ++s) {
        // Forward pass keeping every activation.
        std::vector<std::vector<double>> acts;
        acts.push_back(batch.inputs[s]);
        if (acts[0].size() != model.layer_sizes[0]) {
            throw DimensionMismatch("sample " + std::to_string(s) + " has wrong width");
        }
        for (size_t l = 0; l < layers; ++l) {
            size_t out_n = model.layer_sizes[l + 1];
            size_t in_n = model.layer_sizes[l];
            std::vector<double> next(out_n);
            for (size_t o = 0; o < out_n; ++o) {
                double z = model.biases[l][o];
                const double* row = &model.weights[l][o * in_n];
                for (size_t i = 0; i < in_n; ++i) z += row[i] * acts[l][i];
                next[o] = sigmoid(z);
            }
            acts.push_back(std::move(next));
        }

        const std::vector<double>& y = batch.labels[s];
        const std::vector<double>& out = acts.back();
        if (y.size() != out.size()) {
            throw DimensionMismatch("label width mismatch at sample " + std::to_string(s));
        }
        for (size_t c = 0; c < out.size(); ++c) {
            double p = clamp_pred(out[c]);
            batch_loss -= y[c] * std::log(p) + (1.0 - y[c]) * std::log(1.0 - p);
        }

        // Output delta for sigmoid + cross-entropy: dL/dz = (p - y) / n.
        std::vector<double> delta(out.size());
        for (size_t c = 0; c < out.size(); ++c) {
            delta[c] = (out[c] - y[c]) / static_cast<double>(n);
        }
        for (size_t li = layers; li-- > 0;) {
            size_t out_n = model.layer_sizes[li + 1];
            size_t in_n = model.layer_sizes[li];
            for (size_t o = 0; o < out_n; ++o) {
                grad_b[li][o] += delta[o];
                for (size_t i = 0; i < in_n; ++i) {
                    grad_w[li][o * in_n + i] += delta[o] * acts[li][i];
                }
            }
            if (li > 0) {
                std::vector<double> prev(in_n, 0.0);
                for (size_t i = 0; i < in_n; ++i) {
                    double acc = 0.0;
                    for (size_t o = 0; o < out_n; ++o) {
                        acc += model.weights[li][o * in_n + i] * delta[o];
                    }
                    double a = acts[li][i];
                    prev[i] = acc * a * (1.0 - a);
                }
                delta = std::move(prev);
            }
        }
    }

    for (size_t l = 0; l < layers; ++l) {
        for (size_t i = 0; i < model.weights[l].size(); ++i) model.weights[l][i] -= lr * grad_w[l][i];
        for (size_t i = 0; i < model.biases[l].size(); ++i) model.biases[l][i] -= lr * grad_b[l][i];
    }
    return batch_loss / static_cast<double>(n);
}

/// Full-batch training; returns the per-epoch loss curve.
inline std::vector<double> train(MlpModel& model, const LabeledDataset& data, uint32_t epochs,
                                 double lr) {
    if (data.inputs.empty()) throw EmptyInput("training data is empty");
    std::vector<double> curve;
    curve.reserve(epochs);
    for (uint32_t e = 0; e < epochs; ++e) {
        curve.push_back(backprop_step(model, data, lr));
    }
    return curve;
}

// ---------------------------------------------------------------------------
// Ontology: flat labels with typed relations.
// ---------------------------------------------------------------------------

enum class RelationKind { PartOf, AdjacentTo };

struct OntologyLabels {
    std::vector<std::string> labels;  // declaration order matters for tie-breaks
    std::vector<std::tuple<std::string, RelationKind, std::string>> relations;

    int index_of(const std::string& label) const {
        for (size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == label) return static_cast<int>(i);
        }
        return -1;
    }
};

/// Plain text: one label per line; relations as "a part-of b" / "a adjacent-to b".
inline OntologyLabels parse_ontology(const std::string& text) {
    OntologyLabels onto;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string a, rel, b;
        if (!(ls >> a)) continue;  // blank line
        if (a[0] == '#') continue;
        if (ls >> rel >> b) {
            RelationKind kind;
            if (rel == "part-of") {
                kind = RelationKind::PartOf;
            } else if (rel == "adjacent-to") {
                kind = RelationKind::AdjacentTo;
            } else {
                throw BadOntology("unknown relation kind: " + rel);
            }
            if (onto.index_of(a) < 0 || onto.index_of(b) < 0) {
                throw BadOntology("relation references undeclared label: " + line);
            }
            onto.relations.emplace_back(a, kind, b);
        } else {
            if (onto.index_of(a) >= 0) throw BadOntology("duplicate label: " + a);
            onto.labels.push_back(a);
        }
    }
    // part-of must be acyclic.
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [a, kind, b] : onto.relations) {
        if (kind == RelationKind::PartOf) adj[a].push_back(b);
    }
    std::set<std::string> done, visiting;
    std::function<void(const std::string&)> visit = [&](const std::string& node) {
        if (done.count(node)) return;
        if (visiting.count(node)) throw BadOntology("part-of cycle through: " + node);
        visiting.insert(node);
        for (const auto& next : adj[node]) visit(next);
        visiting.erase(node);
        done.insert(node);
    };
    for (const auto& label : onto.labels) visit(label);
    return onto;
}

struct Classification {
    std::string label;
    double confidence = 0.0;
};

/// Argmax over the network output; ties break toward earlier declared labels.
inline Classification classify_chunk(const MlpModel& model, const std::vector<double>& features,
                                     const OntologyLabels& onto) {
    if (model.layer_sizes.back() != onto.labels.size()) {
        throw DimensionMismatch("model outputs " + std::to_string(model.layer_sizes.back()) +
                                " values for " + std::to_string(onto.labels.size()) + " labels");
    }
    std::vector<double> out = forward(model, features);
    size_t best = 0;
    for (size_t i = 1; i < out.size(); ++i) {
        if (out[i] > out[best]) best = i;
    }
    return {onto.labels[best], out[best]};
}

// ---------------------------------------------------------------------------
// Model persistence: "MLP1", u32 layer count, u32 sizes, then per layer the
// row-major weights followed by the biases as little-endian IEEE doubles.
// ---------------------------------------------------------------------------

namespace detail {

inline void put_u32le(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 24));
}

inline void put_f64le(std::vector<uint8_t>& out, double d) {
    uint64_t bits;
    std::memcpy(&bits, &d, 8);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(bits >> (8 * i)));
}

inline uint32_t get_u32le(std::span<const uint8_t> in, size_t& pos) {
    if (in.size() - pos < 4) throw TruncatedPayload("model blob truncated");
    uint32_t v = in[pos] | (in[pos + 1] << 8) | (in[pos + 2] << 16) |
                 (static_cast<uint32_t>(in[pos + 3]) << 24);
    pos += 4;
    return v;
}

inline double get_f64le(std::span<const uint8_t> in, size_t& pos) {
    if (in.size() - pos < 8) throw TruncatedPayload("model blob truncated");
    uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<uint64_t>(in[pos + i]) << (8 * i);
    pos += 8;
    double d;
    std::memcpy(&d, &bits, 8);
    return d;
}

}  // namespace detail

inline std::vector<uint8_t> save_model(const MlpModel& model) {
    std::vector<uint8_t> out = {'M', 'L', 'P', '1'};
    detail::put_u32le(out, static_cast<uint32_t>(model.layer_sizes.size()));
    for (uint32_t s : model.layer_sizes) detail::put_u32le(out, s);
    for (size_t l = 0; l < model.weights.size(); ++l) {
        for (double w : model.weights[l]) detail::put_f64le(out, w);
        for (double b : model.biases[l]) detail::put_f64le(out, b);
    }
    return out;
}

inline MlpModel load_model(std::span<const uint8_t> bytes) {
    if (bytes.size() < 4 || std::memcmp(bytes.data(), "MLP1", 4) != 0) {
        throw MalformedHeader("bad model magic");
    }
    size_t pos = 4;
    uint32_t n_layers = detail::get_u32le(bytes, pos);
    if (n_layers < 2) throw MalformedHeader("model needs at least 2 layers");
    std::vector<uint32_t> sizes(n_layers);
    for (auto& s : sizes) s = detail::get_u32le(bytes, pos);
    MlpModel m = MlpModel::zeros(sizes);
    for (size_t l = 0; l < m.weights.size(); ++l) {
        for (double& w : m.weights[l]) w = detail::get_f64le(bytes, pos);
        for (double& b : m.biases[l]) b = detail::get_f64le(bytes, pos);
    }
    return m;
}

}  // namespace dedupix
