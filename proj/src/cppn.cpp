#include "move/cppn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace move {
namespace cppn {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::string to_string(Activation a) {
    switch (a) {
        case Activation::Sine: return "sine";
        case Activation::Cosine: return "cosine";
        case Activation::Gaussian: return "gaussian";
        case Activation::Identity: return "identity";
        case Activation::Sigmoid: return "sigmoid";
    }
    return "identity";
}

Activation activation_from_string(const std::string& name) {
    if (name == "sine") return Activation::Sine;
    if (name == "cosine") return Activation::Cosine;
    if (name == "gaussian") return Activation::Gaussian;
    if (name == "identity") return Activation::Identity;
    if (name == "sigmoid") return Activation::Sigmoid;
    throw std::invalid_argument("unknown activation: " + name);
}

double activate(Activation a, double x) {
    switch (a) {
        case Activation::Sine: return std::sin(kPi * x);
        case Activation::Cosine: return std::cos(kPi * x);
        case Activation::Gaussian: {
            const double z = 2.5 * x;
            return std::exp(-z * z);
        }
        case Activation::Identity: return std::clamp(x, -1.0, 1.0);
        case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-4.9 * x));
    }
    return x;
}

void activation_range(Activation a, double& lo, double& hi) {
    switch (a) {
        case Activation::Sine:
        case Activation::Cosine:
        case Activation::Identity:
            lo = -1.0;
            hi = 1.0;
            return;
        case Activation::Gaussian:
        case Activation::Sigmoid:
            lo = 0.0;
            hi = 1.0;
            return;
    }
    lo = -1.0;
    hi = 1.0;
}

void validate(const MutationParams& p) {
    auto prob = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!prob(p.p_perturb_weight) || !prob(p.p_reset_weight) || !prob(p.p_add_connection) ||
        !prob(p.p_add_node) || !prob(p.p_remove_connection) || !prob(p.p_change_activation) ||
        !prob(p.p_init_conn))
        throw std::invalid_argument("mutation params: probabilities must lie in [0, 1]");
    if (p.p_perturb_weight + p.p_reset_weight > 1.0)
        throw std::invalid_argument("mutation params: p_perturb_weight + p_reset_weight > 1");
    if (!(p.weight_sigma > 0.0)) throw std::invalid_argument("mutation params: weight_sigma <= 0");
    if (!(p.init_weight > 0.0)) throw std::invalid_argument("mutation params: init_weight <= 0");
}

namespace {

Activation draw_activation(Rng& rng) {
    return static_cast<Activation>(rng.uniform_below(kNumActivations));
}

std::unordered_map<int, std::size_t> node_index(const Genome& g) {
    std::unordered_map<int, std::size_t> idx;
    idx.reserve(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) idx.emplace(g.nodes[i].node_id, i);
    return idx;
}

// Topological order over enabled connections; empty result means a cycle.
std::vector<std::size_t> topo_order(const Genome& g,
                                    const std::unordered_map<int, std::size_t>& idx) {
    const std::size_t n = g.nodes.size();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& c : g.connections) {
        if (!c.enabled) continue;
        const auto s = idx.at(c.source);
        const auto t = idx.at(c.sink);
        ++indegree[t];
        out[s].push_back(t);
    }
    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<bool> placed(n, false);
    bool progress = true;
    while (order.size() < n && progress) {
        progress = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!placed[i] && indegree[i] == 0) {
                placed[i] = true;
                order.push_back(i);
                for (auto t : out[i]) --indegree[t];
                progress = true;
            }
        }
    }
    if (order.size() < n) order.clear();
    return order;
}

bool would_create_cycle(const Genome& g, const std::unordered_map<int, std::size_t>& idx,
                        int source, int sink) {
    // Cycle iff source is reachable from sink through enabled edges.
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& c : g.connections) {
        if (c.enabled) out[idx.at(c.source)].push_back(idx.at(c.sink));
    }
    const auto start = idx.at(sink);
    const auto goal = idx.at(source);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        if (v == goal) return true;
        for (auto t : out[v]) {
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    return false;
}

// Output ids reachable from any input along enabled edges, ignoring the
// connection at `skip` when >= 0.
std::unordered_set<int> reachable_outputs(const Genome& g,
                                          const std::unordered_map<int, std::size_t>& idx,
                                          std::ptrdiff_t skip) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t k = 0; k < g.connections.size(); ++k) {
        if (static_cast<std::ptrdiff_t>(k) == skip) continue;
        const auto& c = g.connections[k];
        if (c.enabled) out[idx.at(c.source)].push_back(idx.at(c.sink));
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i) {
        if (g.nodes[i].role == NodeRole::Input) {
            seen[i] = true;
            stack.push_back(i);
        }
    }
    std::unordered_set<int> outputs;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        if (g.nodes[v].role == NodeRole::Output) outputs.insert(g.nodes[v].node_id);
        for (auto t : out[v]) {
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    return outputs;
}

bool has_connection(const Genome& g, int source, int sink) {
    return std::any_of(g.connections.begin(), g.connections.end(),
                       [&](const ConnectionGene& c) { return c.source == source && c.sink == sink; });
}

}  // namespace

Genome random_genome(Rng& rng, const MutationParams& params, UidSource& uids) {
    Genome g;
    g.uid = uids.take();
    g.nodes = {
        {Genome::kInputX, Activation::Identity, NodeRole::Input},
        {Genome::kInputY, Activation::Identity, NodeRole::Input},
        {Genome::kInputBias, Activation::Identity, NodeRole::Input},
        {Genome::kOutputR, draw_activation(rng), NodeRole::Output},
        {Genome::kOutputG, draw_activation(rng), NodeRole::Output},
        {Genome::kOutputB, draw_activation(rng), NodeRole::Output},
    };
    for (int src = 0; src < 3; ++src) {
        for (int dst = 3; dst < 6; ++dst) {
            if (rng.bernoulli(params.p_init_conn))
                g.connections.push_back(
                    {src, dst, rng.uniform(-params.init_weight, params.init_weight), true});
        }
    }
    if (g.connections.empty()) {
        const auto pick = rng.uniform_below(9);
        g.connections.push_back({static_cast<int>(pick / 3), 3 + static_cast<int>(pick % 3),
                                 rng.uniform(-params.init_weight, params.init_weight), true});
    }
    return g;
}

Genome mutate(const Genome& parent, const MutationParams& params, Rng& rng, UidSource& uids) {
    Genome child = parent;
    child.uid = uids.take();
    child.parent_uid = parent.uid;

    // weight perturbation / reset
    for (auto& c : child.connections) {
        const double u = rng.uniform();
        if (u < params.p_perturb_weight) {
            c.weight += rng.normal(0.0, params.weight_sigma);
        } else if (u < params.p_perturb_weight + params.p_reset_weight) {
            c.weight = rng.uniform(-params.init_weight, params.init_weight);
        }
    }

    auto idx = node_index(child);

    if (rng.bernoulli(params.p_add_connection)) {
        std::vector<int> sources, sinks;
        for (const auto& n : child.nodes) {
            if (n.role != NodeRole::Output) sources.push_back(n.node_id);
            if (n.role != NodeRole::Input) sinks.push_back(n.node_id);
        }
        for (int attempt = 0; attempt < 20; ++attempt) {
            const int src = sources[rng.uniform_below(sources.size())];
            const int dst = sinks[rng.uniform_below(sinks.size())];
            if (src == dst || has_connection(child, src, dst)) continue;
            if (would_create_cycle(child, idx, src, dst)) continue;
            child.connections.push_back(
                {src, dst, rng.uniform(-params.init_weight, params.init_weight), true});
            break;
        }
    }

    if (rng.bernoulli(params.p_add_node)) {
        std::vector<std::size_t> enabled;
        for (std::size_t k = 0; k < child.connections.size(); ++k)
            if (child.connections[k].enabled) enabled.push_back(k);
        if (!enabled.empty()) {
            const auto k = enabled[rng.uniform_below(enabled.size())];
            int new_id = 0;
            for (const auto& n : child.nodes) new_id = std::max(new_id, n.node_id + 1);
            const Activation act = draw_activation(rng);
            auto& split = child.connections[k];
            split.enabled = false;
            child.nodes.push_back({new_id, act, NodeRole::Hidden});
            child.connections.push_back({split.source, new_id, 1.0, true});
            child.connections.push_back({new_id, split.sink, split.weight, true});
            idx = node_index(child);
        }
    }

    if (rng.bernoulli(params.p_remove_connection) && !child.connections.empty()) {
        const auto k = static_cast<std::ptrdiff_t>(rng.uniform_below(child.connections.size()));
        // Keep every currently input-reachable output reachable.
        const auto before = reachable_outputs(child, idx, -1);
        const auto after = reachable_outputs(child, idx, k);
        const bool severs = std::any_of(before.begin(), before.end(),
                                        [&](int o) { return after.count(o) == 0; });
        if (!severs) {
            child.connections.erase(child.connections.begin() + k);
        }
    }

    if (rng.bernoulli(params.p_change_activation)) {
        std::vector<std::size_t> mutable_nodes;
        for (std::size_t i = 0; i < child.nodes.size(); ++i)
            if (child.nodes[i].role != NodeRole::Input) mutable_nodes.push_back(i);
        if (!mutable_nodes.empty()) {
            const auto i = mutable_nodes[rng.uniform_below(mutable_nodes.size())];
            child.nodes[i].activation = draw_activation(rng);
        }
    }

    return child;
}

ImageBuffer render(const Genome& genome, int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("render: bad dimensions");
    const auto idx = node_index(genome);
    const auto order = topo_order(genome, idx);
    if (order.empty()) throw std::logic_error("render: genome has a cycle");

    const std::size_t n_pixels = static_cast<std::size_t>(width) * height;
    const std::size_t n_nodes = genome.nodes.size();

    // incoming enabled edges per node
    std::vector<std::vector<std::pair<std::size_t, double>>> incoming(n_nodes);
    for (const auto& c : genome.connections) {
        if (c.enabled) incoming[idx.at(c.sink)].push_back({idx.at(c.source), c.weight});
    }

    std::vector<std::vector<double>> value(n_nodes);
    for (std::size_t i : order) {
        const auto& node = genome.nodes[i];
        auto& plane = value[i];
        plane.assign(n_pixels, 0.0);
        if (node.role == NodeRole::Input) {
            std::size_t p = 0;
            for (int y = 0; y < height; ++y) {
                const double yy = (height > 1) ? 2.0 * y / (height - 1) - 1.0 : 0.0;
                for (int x = 0; x < width; ++x, ++p) {
                    const double xx = (width > 1) ? 2.0 * x / (width - 1) - 1.0 : 0.0;
                    plane[p] = node.node_id == Genome::kInputX   ? xx
                               : node.node_id == Genome::kInputY ? yy
                                                                 : 1.0;
                }
            }
            continue;
        }
        if (incoming[i].empty()) continue;  // disconnected nodes emit 0
        for (const auto& [src, w] : incoming[i]) {
            const auto& in = value[src];
            for (std::size_t p = 0; p < n_pixels; ++p) plane[p] += w * in[p];
        }
        for (std::size_t p = 0; p < n_pixels; ++p) plane[p] = activate(node.activation, plane[p]);
    }

    ImageBuffer img(width, height);
    const int outputs[3] = {Genome::kOutputR, Genome::kOutputG, Genome::kOutputB};
    for (int c = 0; c < 3; ++c) {
        const auto i = idx.at(outputs[c]);
        if (incoming[i].empty()) continue;  // dead channel stays 0
        double lo, hi;
        activation_range(genome.nodes[i].activation, lo, hi);
        const auto& plane = value[i];
        for (std::size_t p = 0; p < n_pixels; ++p) {
            const double v = (plane[p] - lo) / (hi - lo);
            img.data[p * 3 + c] = std::clamp(v, 0.0, 1.0);
        }
    }
    return img;
}

bool is_acyclic(const Genome& genome) {
    const auto idx = node_index(genome);
    return !topo_order(genome, idx).empty() || genome.nodes.empty();
}

void validate_genome(const Genome& g) {
    std::unordered_set<int> ids;
    int inputs = 0, outputs = 0;
    for (const auto& n : g.nodes) {
        if (!ids.insert(n.node_id).second) throw std::logic_error("genome: duplicate node id");
        if (n.role == NodeRole::Input) {
            ++inputs;
            if (n.node_id > 2 || n.activation != Activation::Identity)
                throw std::logic_error("genome: malformed input node");
        } else if (n.role == NodeRole::Output) {
            ++outputs;
            if (n.node_id < 3 || n.node_id > 5) throw std::logic_error("genome: malformed output node");
        }
    }
    if (inputs != 3 || outputs != 3) throw std::logic_error("genome: need exactly 3 inputs and 3 outputs");

    std::unordered_set<std::uint64_t> seen_pairs;
    const auto idx = node_index(g);
    for (const auto& c : g.connections) {
        if (c.source == c.sink) throw std::logic_error("genome: self loop");
        if (!idx.count(c.source) || !idx.count(c.sink))
            throw std::logic_error("genome: connection references missing node");
        if (g.nodes[idx.at(c.source)].role == NodeRole::Output)
            throw std::logic_error("genome: connection sourced at an output");
        if (g.nodes[idx.at(c.sink)].role == NodeRole::Input)
            throw std::logic_error("genome: connection sinking into an input");
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.source)) << 32) |
            static_cast<std::uint32_t>(c.sink);
        if (!seen_pairs.insert(key).second) throw std::logic_error("genome: duplicate connection");
    }
    if (!is_acyclic(g)) throw std::logic_error("genome: cycle among enabled connections");
}

}  // namespace cppn
}  // namespace move
