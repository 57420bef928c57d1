#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "move/image.hpp"
#include "move/rng.hpp"

namespace move {
namespace cppn {

enum class Activation { Sine, Cosine, Gaussian, Identity, Sigmoid };

constexpr int kNumActivations = 5;

std::string to_string(Activation a);
Activation activation_from_string(const std::string& name);

// Pinned transfer functions. Each maps reals into the stated range, which
// the renderer uses to rescale output channels into [0, 1]:
//   sine     sin(pi x)           [-1, 1]
//   cosine   cos(pi x)           [-1, 1]
//   gaussian exp(-(2.5 x)^2)     (0, 1]
//   identity clamp(x, -1, 1)     [-1, 1]
//   sigmoid  1 / (1 + e^(-4.9x)) (0, 1)
double activate(Activation a, double x);
void activation_range(Activation a, double& lo, double& hi);

enum class NodeRole { Input, Hidden, Output };

struct NodeGene {
    int node_id = 0;
    Activation activation = Activation::Identity;
    NodeRole role = NodeRole::Hidden;

    friend bool operator==(const NodeGene&, const NodeGene&) = default;
};

struct ConnectionGene {
    int source = 0;
    int sink = 0;
    double weight = 0.0;
    bool enabled = true;

    friend bool operator==(const ConnectionGene&, const ConnectionGene&) = default;
};

// Feed-forward pattern network mapping (x, y, bias) to RGB. Inputs are nodes
// 0..2 (x, y, bias=+1), outputs 3..5 (R, G, B). Immutable once created.
struct Genome {
    std::vector<NodeGene> nodes;
    std::vector<ConnectionGene> connections;
    std::uint64_t uid = 0;
    std::optional<std::uint64_t> parent_uid;

    static constexpr int kInputX = 0;
    static constexpr int kInputY = 1;
    static constexpr int kInputBias = 2;
    static constexpr int kOutputR = 3;
    static constexpr int kOutputG = 4;
    static constexpr int kOutputB = 5;
};

struct MutationParams {
    double p_perturb_weight = 0.8;
    double weight_sigma = 0.5;
    double p_reset_weight = 0.05;
    double p_add_connection = 0.15;
    double p_add_node = 0.10;
    double p_remove_connection = 0.05;
    double p_change_activation = 0.10;
    double p_init_conn = 0.5;   // initial input-output wiring probability
    double init_weight = 3.0;   // weights start / reset in [-init_weight, init_weight]
};

void validate(const MutationParams& p);

// Minimal random topology: 3 inputs, 3 outputs with uniformly drawn
// activations, each input-output pair wired with probability p_init_conn
// (at least one connection guaranteed).
Genome random_genome(Rng& rng, const MutationParams& params, UidSource& uids);

// Deep-copied child; the parent is untouched. Operators that cannot apply
// are skipped silently. Enabled connections stay acyclic.
Genome mutate(const Genome& parent, const MutationParams& params, Rng& rng, UidSource& uids);

// Deterministic phenotype. Pixel (row i, col j) feeds x = 2j/(w-1) - 1,
// y = 2i/(h-1) - 1, bias = 1 through the network in topological order;
// output channels go through their node's activation and are rescaled from
// the activation's range to [0, 1]. Nodes with no enabled inputs emit 0.
ImageBuffer render(const Genome& genome, int width, int height);

// True when the enabled-connection digraph has no cycle.
bool is_acyclic(const Genome& genome);

// Structural sanity: io layout, duplicate connections, self loops, acyclicity.
void validate_genome(const Genome& genome);

}  // namespace cppn
}  // namespace move
