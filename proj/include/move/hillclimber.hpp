#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "move/engine.hpp"

namespace move {

// Scalarizer for hillclimber selection. fold() observes raw vectors before
// score() is called on them, letting the all-objective scorer keep running
// per-objective ranges without ever touching the reporting normalization.
struct FitnessScorer {
    std::function<void(const FitnessVector&)> fold;
    std::function<double(const FitnessVector&)> score;
};

// score = raw value of one objective.
FitnessScorer single_objective_scorer(int objective);

// score = mean over objectives of the within-run min-max-normalized raw
// score. Ranges are folded in before a generation is scored, so every child
// of a generation (and the incumbent) is scored against the same state; a
// still-degenerate range contributes a neutral 0.5. With one objective this
// reduces exactly to the single-objective scorer's decisions.
FitnessScorer running_minmax_scorer(int total_objectives);

struct HillclimberParams {
    int total_objectives = 8;
    int children_per_generation = 7;
    int generations = 1000;
    int eval_workers = 1;
};

template <EvolvableGenome G>
struct HillclimberRun {
    std::shared_ptr<const G> incumbent;
    FitnessVector incumbent_raw;
    LineageLog log;  // incumbent replacements as single-cell events
    std::vector<GenerationStats> per_generation;
    ObservedRange observed;
    long seed_evaluations = 1;
    std::vector<double> best_score_series;  // incumbent score after each generation
};

// One (1+lambda) generation: children are mutated copies of the incumbent;
// the best-scoring child replaces it only when strictly better. Returns
// whether a replacement happened.
template <EvolvableGenome G>
bool hillclimber_generation(HillclimberRun<G>& run, const HillclimberParams& params,
                            const EvolutionHooks<G>& hooks, FitnessScorer& scorer,
                            Rng& mutation_rng) {
    const int generation = static_cast<int>(run.per_generation.size()) + 1;
    const int lambda = params.children_per_generation;

    std::vector<std::shared_ptr<const G>> children;
    children.reserve(static_cast<std::size_t>(lambda));
    for (int i = 0; i < lambda; ++i) {
        auto child = std::make_shared<G>(hooks.mutate(*run.incumbent, mutation_rng));
        run.log.register_genome({child->uid, child->parent_uid, generation, std::nullopt});
        children.push_back(std::move(child));
    }

    std::vector<FitnessVector> raws(static_cast<std::size_t>(lambda));
    std::atomic<long> eval_calls{0};
    parallel_for(static_cast<std::size_t>(lambda), params.eval_workers, [&](std::size_t i) {
        raws[i] = detail::checked_evaluate(hooks, *children[i], params.total_objectives, "child");
        eval_calls.fetch_add(1, std::memory_order_relaxed);
    });
    for (const auto& v : raws) {
        run.observed.fold(v);
        scorer.fold(v);
    }

    int best = -1;
    double best_score = 0.0;
    for (int i = 0; i < lambda; ++i) {
        const double s = scorer.score(raws[static_cast<std::size_t>(i)]);
        if (best < 0 || s > best_score) {
            best = i;
            best_score = s;
        }
    }

    const double incumbent_score = scorer.score(run.incumbent_raw);
    GenerationStats stats;
    stats.evaluations = eval_calls.load();

    bool replaced = false;
    if (best >= 0 && best_score > incumbent_score) {
        run.incumbent = children[static_cast<std::size_t>(best)];
        run.incumbent_raw = raws[static_cast<std::size_t>(best)];
        run.log.append_event({generation, 0, 0, 1, run.incumbent->uid});
        stats.replacements = 1;
        replaced = true;
    }
    run.per_generation.push_back(stats);
    run.best_score_series.push_back(replaced ? best_score : incumbent_score);
    return replaced;
}

template <EvolvableGenome G>
HillclimberRun<G> run_hillclimber(const HillclimberParams& params, const EvolutionHooks<G>& hooks,
                                  FitnessScorer scorer, std::uint64_t seed) {
    if (params.children_per_generation < 1)
        throw std::invalid_argument("hillclimber: need at least one child per generation");

    Rng init_rng = Rng::stream(seed, "init");
    Rng mutation_rng = Rng::stream(seed, "mutation");

    HillclimberRun<G> run;
    run.observed.init(params.total_objectives);
    auto genome = std::make_shared<G>(hooks.spawn(init_rng));
    run.log.register_genome({genome->uid, genome->parent_uid, 0, 0});
    run.incumbent = std::move(genome);
    run.incumbent_raw =
        detail::checked_evaluate(hooks, *run.incumbent, params.total_objectives, "seed");
    run.observed.fold(run.incumbent_raw);
    scorer.fold(run.incumbent_raw);

    for (int g = 0; g < params.generations; ++g)
        hillclimber_generation(run, params, hooks, scorer, mutation_rng);
    return run;
}

}  // namespace move
