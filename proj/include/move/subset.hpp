#pragma once

#include <vector>

#include "move/rng.hpp"

namespace move {

using ObjectiveId = int;

// Objective ids assigned to one cell. Kept sorted; no duplicates; odd size.
using ObjectiveSubset = std::vector<ObjectiveId>;

// Uniform random n-combinations of [0, K), one per cell, sampled
// independently across cells (duplicate subsets across cells are fine).
// Throws std::invalid_argument when n is even, n > K or m == 0.
std::vector<ObjectiveSubset> assign_subsets(int num_cells, int subset_size,
                                            int total_objectives, Rng& rng);

// |a ∩ b| for two sorted subsets.
int subset_overlap(const ObjectiveSubset& a, const ObjectiveSubset& b);

}  // namespace move
