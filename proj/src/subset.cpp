#include "move/subset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace move {

std::vector<ObjectiveSubset> assign_subsets(int num_cells, int subset_size,
                                            int total_objectives, Rng& rng) {
    if (num_cells < 1) throw std::invalid_argument("assign_subsets: need at least one cell");
    if (subset_size < 1 || subset_size % 2 == 0)
        throw std::invalid_argument("assign_subsets: subset size must be odd and positive");
    if (subset_size > total_objectives)
        throw std::invalid_argument("assign_subsets: subset size exceeds objective count");

    std::vector<ObjectiveSubset> subsets;
    subsets.reserve(static_cast<std::size_t>(num_cells));

    std::vector<ObjectiveId> pool(static_cast<std::size_t>(total_objectives));
    for (int c = 0; c < num_cells; ++c) {
        std::iota(pool.begin(), pool.end(), 0);
        // Partial Fisher-Yates: the first `subset_size` entries are a uniform
        // combination drawn without replacement.
        for (int i = 0; i < subset_size; ++i) {
            const auto j = i + static_cast<int>(rng.uniform_below(
                                   static_cast<std::uint64_t>(total_objectives - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        ObjectiveSubset s(pool.begin(), pool.begin() + subset_size);
        std::sort(s.begin(), s.end());
        subsets.push_back(std::move(s));
    }
    return subsets;
}

int subset_overlap(const ObjectiveSubset& a, const ObjectiveSubset& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

}  // namespace move
