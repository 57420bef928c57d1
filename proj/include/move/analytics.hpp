#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "move/engine.hpp"
#include "move/lineage.hpp"
#include "move/metrics.hpp"
#include "move/subset.hpp"

namespace move {

// Genome-agnostic view of a final map; everything the statistics need.
struct MapSnapshot {
    std::vector<std::uint64_t> elite_uids;
    std::vector<FitnessVector> elite_scores;
    std::vector<ObjectiveSubset> subsets;

    int num_cells() const { return static_cast<int>(elite_uids.size()); }
};

template <EvolvableGenome G>
MapSnapshot snapshot(const CellMap<G>& map) {
    MapSnapshot s;
    s.elite_uids.reserve(map.cells.size());
    for (const auto& cell : map.cells) {
        s.elite_uids.push_back(cell.elite ? cell.elite->uid : 0);
        s.elite_scores.push_back(cell.elite_scores);
        s.subsets.push_back(cell.subset);
    }
    return s;
}

// Count of distinct genomes among the elites at run end.
int unique_solutions(const MapSnapshot& map);

struct ChampionInfo {
    int cell_id = 0;
    std::uint64_t uid = 0;
    double mean_normalized_fitness = 0.0;
};

// Elite with the highest mean normalized fitness across all objectives;
// ties broken by lowest cell id.
ChampionInfo champion(const MapSnapshot& map, const NormalizationTable& table,
                      const std::string& target_id, const MetricRegistry& registry);

struct AncestryStats {
    int cells_in_ancestry = 0;
    int jumps_in_ancestry = 0;
};

// Walks the parent chain from the champion to its generation-0 root. Cells
// in ancestry is the union of cells any ancestor (champion included) ever
// occupied; jumps counts the chain's replacement events landing outside the
// parent cell.
AncestryStats ancestry_stats(const LineageLog& log, std::uint64_t champion_uid);

// Fraction of replacement events whose target differs from the parent cell.
// Throws DegenerateStatError on an empty log.
double jump_proportion(const LineageLog& log);

struct OverlapStats {
    double mean_pairwise = 0.0;  // |s_a ∩ s_b| over all unordered cell pairs
    std::optional<double> mean_on_replacement;  // over jump events; empty if none
};

OverlapStats subset_overlap_stats(const std::vector<ObjectiveSubset>& subsets,
                                  const LineageLog& log);

// One row of the per-run statistics table.
struct RunStatistics {
    int total_unique_solutions = 0;
    int cells_in_ancestry = 0;
    int jumps_in_ancestry = 0;
    long total_replacements = 0;
    std::optional<double> jump_proportion;
    double champion_fitness = 0.0;
    double mean_pairwise_subset_overlap = 0.0;
    std::optional<double> mean_overlap_on_replacement;
};

RunStatistics compute_run_statistics(const MapSnapshot& map, const LineageLog& log,
                                     const NormalizationTable& table, const std::string& target_id,
                                     const MetricRegistry& registry);

struct MeanCi {
    double mean = 0.0;
    double half_width = 0.0;  // 95% confidence, Student t
};

MeanCi mean_ci95(std::span<const double> values);

}  // namespace move
