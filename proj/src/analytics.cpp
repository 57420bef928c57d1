#include "move/analytics.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "move/errors.hpp"

namespace move {

int unique_solutions(const MapSnapshot& map) {
    std::unordered_set<std::uint64_t> uids(map.elite_uids.begin(), map.elite_uids.end());
    return static_cast<int>(uids.size());
}

ChampionInfo champion(const MapSnapshot& map, const NormalizationTable& table,
                      const std::string& target_id, const MetricRegistry& registry) {
    if (map.num_cells() == 0) throw std::invalid_argument("champion: empty map");
    ChampionInfo best;
    bool first = true;
    for (int i = 0; i < map.num_cells(); ++i) {
        const double fit =
            mean_normalized(map.elite_scores[static_cast<std::size_t>(i)], table, target_id, registry);
        if (first || fit > best.mean_normalized_fitness) {
            best = {i, map.elite_uids[static_cast<std::size_t>(i)], fit};
            first = false;
        }
    }
    return best;
}

AncestryStats ancestry_stats(const LineageLog& log, std::uint64_t champion_uid) {
    std::unordered_set<std::uint64_t> chain;
    std::uint64_t cur = champion_uid;
    while (true) {
        if (!log.contains(cur)) throw std::logic_error("ancestry_stats: broken lineage chain");
        const auto& rec = log.record(cur);
        chain.insert(cur);
        if (!rec.parent_uid) {
            if (!rec.seed_cell) throw std::logic_error("ancestry_stats: root without a seed cell");
            break;
        }
        cur = *rec.parent_uid;
    }

    std::unordered_set<int> cells;
    int jumps = 0;
    for (const auto& ev : log.events()) {
        if (chain.count(ev.child_uid) != 0) {
            cells.insert(ev.target_cell);
            if (ev.is_jump()) ++jumps;
        }
    }
    for (std::uint64_t uid : chain) {
        const auto& rec = log.record(uid);
        if (rec.seed_cell) cells.insert(*rec.seed_cell);
    }
    return {static_cast<int>(cells.size()), jumps};
}

double jump_proportion(const LineageLog& log) {
    if (log.events().empty())
        throw DegenerateStatError("jump proportion undefined: no replacement events");
    long jumps = 0;
    for (const auto& ev : log.events())
        if (ev.is_jump()) ++jumps;
    return static_cast<double>(jumps) / static_cast<double>(log.events().size());
}

OverlapStats subset_overlap_stats(const std::vector<ObjectiveSubset>& subsets,
                                  const LineageLog& log) {
    OverlapStats out;
    const std::size_t m = subsets.size();
    if (m >= 2) {
        double acc = 0.0;
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                acc += subset_overlap(subsets[i], subsets[j]);
                ++pairs;
            }
        }
        out.mean_pairwise = acc / static_cast<double>(pairs);
    } else if (m == 1) {
        out.mean_pairwise = static_cast<double>(subsets[0].size());
    }

    double acc = 0.0;
    long jumps = 0;
    for (const auto& ev : log.events()) {
        if (!ev.is_jump()) continue;
        acc += subset_overlap(subsets.at(static_cast<std::size_t>(ev.parent_cell)),
                              subsets.at(static_cast<std::size_t>(ev.target_cell)));
        ++jumps;
    }
    if (jumps > 0) out.mean_on_replacement = acc / static_cast<double>(jumps);
    return out;
}

RunStatistics compute_run_statistics(const MapSnapshot& map, const LineageLog& log,
                                     const NormalizationTable& table, const std::string& target_id,
                                     const MetricRegistry& registry) {
    RunStatistics s;
    s.total_unique_solutions = unique_solutions(map);
    const ChampionInfo champ = champion(map, table, target_id, registry);
    s.champion_fitness = champ.mean_normalized_fitness;
    const AncestryStats anc = ancestry_stats(log, champ.uid);
    s.cells_in_ancestry = anc.cells_in_ancestry;
    s.jumps_in_ancestry = anc.jumps_in_ancestry;
    s.total_replacements = static_cast<long>(log.events().size());
    if (!log.events().empty()) s.jump_proportion = jump_proportion(log);
    const OverlapStats overlap = subset_overlap_stats(map.subsets, log);
    s.mean_pairwise_subset_overlap = overlap.mean_pairwise;
    s.mean_overlap_on_replacement = overlap.mean_on_replacement;
    return s;
}

MeanCi mean_ci95(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean_ci95: empty sample");
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    if (values.size() == 1) return {mean, 0.0};

    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);

    static const double t975[30] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306,
                                    2.262,  2.228, 2.201, 2.179, 2.160, 2.145, 2.131, 2.120,
                                    2.110,  2.101, 2.093, 2.086, 2.080, 2.074, 2.069, 2.064,
                                    2.060,  2.056, 2.052, 2.048, 2.045, 2.042};
    const std::size_t df = values.size() - 1;
    const double t = (df <= 30) ? t975[df - 1] : 1.96;
    return {mean, t * se};
}

}  // namespace move
