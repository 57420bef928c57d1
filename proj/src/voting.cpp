#include "move/voting.hpp"

#include <stdexcept>

namespace move {

VoteTally tally_votes(const FitnessVector& child_scores, const FitnessVector& elite_scores,
                      const ObjectiveSubset& subset) {
    if (child_scores.size() != elite_scores.size())
        throw std::invalid_argument("tally_votes: fitness vector lengths differ");

    VoteTally t;
    t.subset_size = static_cast<int>(subset.size());
    for (ObjectiveId f : subset) {
        if (f < 0 || static_cast<std::size_t>(f) >= child_scores.size())
            throw std::invalid_argument("tally_votes: objective id outside fitness vector");
        const double c = child_scores[static_cast<std::size_t>(f)];
        const double e = elite_scores[static_cast<std::size_t>(f)];
        if (c > e) {
            ++t.child_votes;
        } else if (c < e) {
            ++t.elite_votes;
        } else {
            ++t.ties;
        }
    }
    return t;
}

}  // namespace move
