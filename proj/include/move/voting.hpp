#pragma once

#include <vector>

#include "move/subset.hpp"

namespace move {

// Raw per-objective scores of one phenotype, indexed by ObjectiveId.
// Always has the full registry length; every entry finite.
using FitnessVector = std::vector<double>;

struct VoteTally {
    int child_votes = 0;
    int elite_votes = 0;
    int ties = 0;
    int subset_size = 0;

    // Majority rule: strictly more than half of the cell's functions.
    bool child_wins() const { return 2 * child_votes > subset_size; }
    int margin() const { return child_votes - elite_votes; }
};

// Counts, over the cell's assigned functions only, where the child strictly
// outscores the elite, strictly loses, or ties. Throws on length mismatch.
VoteTally tally_votes(const FitnessVector& child_scores, const FitnessVector& elite_scores,
                      const ObjectiveSubset& subset);

}  // namespace move
