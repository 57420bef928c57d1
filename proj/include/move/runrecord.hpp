#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "move/analytics.hpp"
#include "move/cppn.hpp"
#include "move/engine.hpp"
#include "move/lineage.hpp"

namespace move {

// Everything one trial produced, in the shape the result files carry. MOVE
// runs and hillclimber baselines share it; a hillclimber is stored as a
// single-cell map whose subset is its objective scope.
struct RunRecord {
    std::string kind;          // "move" | "hillclimber_all" | "hillclimber_single"
    std::string condition_id;  // e.g. "move_n5_m50_unlimited"
    int trial = 0;
    std::uint64_t seed = 0;
    std::string target_id;

    // condition echo
    int num_cells = 0;
    int functions_per_cell = 0;
    int generations = 0;
    JumpPolicy policy = JumpPolicy::Unlimited;
    int image_width = 0;
    int image_height = 0;
    std::vector<std::string> objective_names;
    int children_per_generation = 0;  // hillclimbers only
    int scope_objective = -1;         // single-objective hillclimbers only

    // outcome
    MapSnapshot map;
    std::vector<cppn::Genome> elites;  // distinct final elites, by uid order
    LineageLog log;
    std::vector<GenerationStats> per_generation;
    ObservedRange observed;
    long seed_evaluations = 0;

    const cppn::Genome& elite_genome(std::uint64_t uid) const;
    std::string run_id() const { return condition_id + "_t" + std::to_string(trial); }
};

}  // namespace move
