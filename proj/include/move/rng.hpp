#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace move {

// 64-bit mixer used for seed derivation. One step of the splitmix64 sequence.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// First output of the splitmix64 stream seeded with `x`.
inline std::uint64_t splitmix64_once(std::uint64_t x) { return splitmix64(x); }

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Seed for trial `index` of an experiment. Published configs plus this rule
// are enough to reproduce any run.
inline std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t index) {
    return base_seed ^ splitmix64_once(index);
}

// Deterministic random generator with implementation-independent draws.
// mt19937_64 provides the (standard-specified) raw stream; the uniform /
// normal transforms below are pinned here rather than delegated to
// std::*_distribution, whose outputs differ across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Named sub-stream of a master seed. Labels keep the streams for
    // independent purposes (subset assignment, genome init, mutation, ...)
    // decoupled, so e.g. running more generations never reshuffles subsets.
    static Rng stream(std::uint64_t master_seed, std::string_view label) {
        std::uint64_t s = master_seed ^ fnv1a64(label);
        return Rng(splitmix64_once(s));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Unbiased integer in [0, n). n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x > limit);
        return x % n;
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller. One normal per pair of uniforms; stateless by design so a
    // stream position fully determines every later draw.
    double normal(double mean, double sigma) {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sigma * r * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    std::mt19937_64 gen_;
};

// Monotone source of genome identifiers, unique within one run.
struct UidSource {
    std::uint64_t next = 1;
    std::uint64_t take() { return next++; }
};

}  // namespace move
