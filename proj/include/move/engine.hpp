#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "move/lineage.hpp"
#include "move/parallel.hpp"
#include "move/rng.hpp"
#include "move/subset.hpp"
#include "move/voting.hpp"

namespace move {

// Which cells a child may take over.
//   None      - only its parent's cell.
//   One       - any single cell; among the cells it wins, the one beaten by
//               the largest vote margin (ties broken by lowest cell id).
//   Unlimited - every cell it wins, applied in ascending cell order.
enum class JumpPolicy { None, One, Unlimited };

std::string to_string(JumpPolicy policy);
JumpPolicy jump_policy_from_string(const std::string& name);

template <typename G>
concept EvolvableGenome = requires(const G& g) {
    { g.uid } -> std::convertible_to<std::uint64_t>;
    { g.parent_uid } -> std::convertible_to<std::optional<std::uint64_t>>;
};

template <EvolvableGenome G>
struct Cell {
    int id = 0;
    ObjectiveSubset subset;
    std::shared_ptr<const G> elite;   // shared: one child may occupy many cells
    FitnessVector elite_scores;       // full K-vector, cached for reporting
};

template <EvolvableGenome G>
struct CellMap {
    std::vector<Cell<G>> cells;
    int generation = 0;

    int num_cells() const { return static_cast<int>(cells.size()); }
};

// How a genome type plugs into the engine. evaluate must be pure and
// thread-safe (children are evaluated concurrently); spawn/mutate draw only
// from the Rng handed to them.
template <typename G>
struct EvolutionHooks {
    std::function<G(Rng&)> spawn;
    std::function<G(const G&, Rng&)> mutate;
    std::function<FitnessVector(const G&)> evaluate;
};

struct EngineParams {
    int num_cells = 100;
    int functions_per_cell = 5;
    int total_objectives = 8;
    int generations = 1000;
    JumpPolicy policy = JumpPolicy::Unlimited;
    int eval_workers = 1;
};

struct GenerationStats {
    long evaluations = 0;
    long replacements = 0;
    long jumps = 0;
};

// Per-objective extremes over every individual evaluated during a run,
// including seeds and failed children. Calibration input.
struct ObservedRange {
    FitnessVector max;
    FitnessVector min;

    void init(int k) {
        max.assign(static_cast<std::size_t>(k), -std::numeric_limits<double>::infinity());
        min.assign(static_cast<std::size_t>(k), std::numeric_limits<double>::infinity());
    }
    void fold(const FitnessVector& v) {
        for (std::size_t f = 0; f < v.size(); ++f) {
            max[f] = std::max(max[f], v[f]);
            min[f] = std::min(min[f], v[f]);
        }
    }
};

template <EvolvableGenome G>
struct EngineResult {
    CellMap<G> map;
    LineageLog log;
    std::vector<GenerationStats> per_generation;  // [0] is generation 1
    ObservedRange observed;
    long seed_evaluations = 0;
};

namespace detail {

inline void validate_engine_params(const EngineParams& p) {
    if (p.num_cells < 1) throw std::invalid_argument("engine: need at least one cell");
    if (p.functions_per_cell < 1 || p.functions_per_cell % 2 == 0)
        throw std::invalid_argument("engine: functions per cell must be odd");
    if (p.functions_per_cell > p.total_objectives)
        throw std::invalid_argument("engine: functions per cell exceeds objective count");
    if (p.generations < 0) throw std::invalid_argument("engine: negative generation count");
}

template <EvolvableGenome G>
FitnessVector checked_evaluate(const EvolutionHooks<G>& hooks, const G& genome, int k,
                               const char* context) {
    FitnessVector v = hooks.evaluate(genome);
    if (static_cast<int>(v.size()) != k)
        throw std::runtime_error(std::string("engine: evaluator returned wrong vector length (") +
                                 context + ")");
    return v;
}

}  // namespace detail

// One generation of the voting loop. Every generation-start elite produces
// one child (the parent set is snapshotted first); children are evaluated
// once on all objectives, then applied in ascending parent cell order
// against the current, possibly already-replaced elites.
template <EvolvableGenome G>
std::vector<ReplacementEvent> step_generation(CellMap<G>& map, const EngineParams& params,
                                              const EvolutionHooks<G>& hooks, Rng& mutation_rng,
                                              LineageLog& log, ObservedRange& observed,
                                              long* evaluations_made = nullptr) {
    const int m = map.num_cells();
    const int generation = map.generation + 1;

    for (const auto& cell : map.cells)
        if (!cell.elite) throw std::logic_error("step_generation: map has an empty cell");

    // Snapshot parents, then mutate sequentially so the mutation stream is a
    // pure function of (seed, elite history).
    std::vector<std::shared_ptr<const G>> children;
    children.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto child = std::make_shared<G>(hooks.mutate(*map.cells[static_cast<std::size_t>(i)].elite,
                                                      mutation_rng));
        log.register_genome({child->uid, child->parent_uid, generation, std::nullopt});
        children.push_back(std::move(child));
    }

    std::vector<FitnessVector> child_scores(static_cast<std::size_t>(m));
    std::atomic<long> eval_calls{0};
    parallel_for(static_cast<std::size_t>(m), params.eval_workers, [&](std::size_t i) {
        child_scores[i] =
            detail::checked_evaluate(hooks, *children[i], params.total_objectives, "child");
        eval_calls.fetch_add(1, std::memory_order_relaxed);
    });
    for (const auto& v : child_scores) observed.fold(v);
    if (evaluations_made) *evaluations_made = eval_calls.load();

    std::vector<ReplacementEvent> events;
    auto replace = [&](int parent_cell, int target_cell, const VoteTally& tally,
                       std::size_t child_index) {
        auto& cell = map.cells[static_cast<std::size_t>(target_cell)];
        cell.elite = children[child_index];
        cell.elite_scores = child_scores[child_index];
        ReplacementEvent ev{generation, parent_cell, target_cell, tally.margin(),
                            children[child_index]->uid};
        log.append_event(ev);
        events.push_back(ev);
    };

    for (int ci = 0; ci < m; ++ci) {
        const auto child_index = static_cast<std::size_t>(ci);
        const FitnessVector& scores = child_scores[child_index];

        switch (params.policy) {
            case JumpPolicy::None: {
                const auto& cell = map.cells[child_index];
                const VoteTally t = tally_votes(scores, cell.elite_scores, cell.subset);
                if (t.child_wins()) replace(ci, ci, t, child_index);
                break;
            }
            case JumpPolicy::One: {
                int best_cell = -1;
                VoteTally best_tally;
                for (int j = 0; j < m; ++j) {
                    const auto& cell = map.cells[static_cast<std::size_t>(j)];
                    const VoteTally t = tally_votes(scores, cell.elite_scores, cell.subset);
                    if (t.child_wins() && (best_cell < 0 || t.margin() > best_tally.margin())) {
                        best_cell = j;
                        best_tally = t;
                    }
                }
                if (best_cell >= 0) replace(ci, best_cell, best_tally, child_index);
                break;
            }
            case JumpPolicy::Unlimited: {
                for (int j = 0; j < m; ++j) {
                    const auto& cell = map.cells[static_cast<std::size_t>(j)];
                    const VoteTally t = tally_votes(scores, cell.elite_scores, cell.subset);
                    if (t.child_wins()) replace(ci, j, t, child_index);
                }
                break;
            }
        }
    }

    map.generation = generation;
    return events;
}

// Full run: assign subsets, seed every cell with a fresh random genome at
// generation 0, then iterate the voting loop. Bit-reproducible for a fixed
// (params, hooks, seed); eval_workers never changes the outcome.
template <EvolvableGenome G>
EngineResult<G> run_evolution(const EngineParams& params, const EvolutionHooks<G>& hooks,
                              std::uint64_t seed) {
    detail::validate_engine_params(params);

    Rng subset_rng = Rng::stream(seed, "subsets");
    Rng init_rng = Rng::stream(seed, "init");
    Rng mutation_rng = Rng::stream(seed, "mutation");

    EngineResult<G> result;
    result.observed.init(params.total_objectives);

    auto subsets =
        assign_subsets(params.num_cells, params.functions_per_cell, params.total_objectives,
                       subset_rng);

    result.map.cells.resize(static_cast<std::size_t>(params.num_cells));
    for (int i = 0; i < params.num_cells; ++i) {
        auto& cell = result.map.cells[static_cast<std::size_t>(i)];
        cell.id = i;
        cell.subset = std::move(subsets[static_cast<std::size_t>(i)]);
        auto genome = std::make_shared<G>(hooks.spawn(init_rng));
        result.log.register_genome({genome->uid, genome->parent_uid, 0, i});
        cell.elite = std::move(genome);
    }
    std::atomic<long> seed_evals{0};
    parallel_for(static_cast<std::size_t>(params.num_cells), params.eval_workers,
                 [&](std::size_t i) {
                     result.map.cells[i].elite_scores = detail::checked_evaluate(
                         hooks, *result.map.cells[i].elite, params.total_objectives, "seed");
                     seed_evals.fetch_add(1, std::memory_order_relaxed);
                 });
    for (const auto& cell : result.map.cells) result.observed.fold(cell.elite_scores);
    result.seed_evaluations = seed_evals.load();

    result.per_generation.reserve(static_cast<std::size_t>(params.generations));
    for (int g = 0; g < params.generations; ++g) {
        long evals = 0;
        const auto events = step_generation(result.map, params, hooks, mutation_rng, result.log,
                                            result.observed, &evals);
        GenerationStats stats;
        stats.evaluations = evals;
        stats.replacements = static_cast<long>(events.size());
        for (const auto& ev : events)
            if (ev.is_jump()) ++stats.jumps;
        result.per_generation.push_back(stats);
    }
    return result;
}

}  // namespace move
