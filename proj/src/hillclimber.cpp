#include "move/hillclimber.hpp"

#include <limits>

namespace move {

FitnessScorer single_objective_scorer(int objective) {
    FitnessScorer s;
    s.fold = [](const FitnessVector&) {};
    s.score = [objective](const FitnessVector& v) {
        return v.at(static_cast<std::size_t>(objective));
    };
    return s;
}

FitnessScorer running_minmax_scorer(int total_objectives) {
    struct State {
        FitnessVector lo, hi;
    };
    auto state = std::make_shared<State>();
    state->lo.assign(static_cast<std::size_t>(total_objectives),
                     std::numeric_limits<double>::infinity());
    state->hi.assign(static_cast<std::size_t>(total_objectives),
                     -std::numeric_limits<double>::infinity());

    FitnessScorer s;
    s.fold = [state](const FitnessVector& v) {
        for (std::size_t f = 0; f < v.size(); ++f) {
            state->lo[f] = std::min(state->lo[f], v[f]);
            state->hi[f] = std::max(state->hi[f], v[f]);
        }
    };
    s.score = [state, total_objectives](const FitnessVector& v) {
        double acc = 0.0;
        for (std::size_t f = 0; f < v.size(); ++f) {
            const double span = state->hi[f] - state->lo[f];
            acc += (span > 0.0) ? (v[f] - state->lo[f]) / span : 0.5;
        }
        return acc / static_cast<double>(total_objectives);
    };
    return s;
}

}  // namespace move
