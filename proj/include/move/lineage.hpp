#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace move {

// One elite replacement. `margin` is child votes minus elite votes on the
// target cell's subset; a jump is any event with target_cell != parent_cell.
struct ReplacementEvent {
    int generation = 0;
    int parent_cell = 0;
    int target_cell = 0;
    int margin = 0;
    std::uint64_t child_uid = 0;

    bool is_jump() const { return target_cell != parent_cell; }
    friend bool operator==(const ReplacementEvent&, const ReplacementEvent&) = default;
};

struct GenomeRecord {
    std::uint64_t uid = 0;
    std::optional<std::uint64_t> parent_uid;  // empty for generation-0 genomes
    int birth_generation = 0;
    std::optional<int> seed_cell;  // cell a generation-0 genome was placed in
};

// Append-only record of every replacement plus the registry of every genome
// ever created. Events are ordered by (generation, application order).
class LineageLog {
public:
    void register_genome(GenomeRecord rec);
    void append_event(ReplacementEvent ev) { events_.push_back(ev); }

    const std::vector<ReplacementEvent>& events() const { return events_; }
    const std::vector<GenomeRecord>& registry() const { return registry_; }

    bool contains(std::uint64_t uid) const { return index_.count(uid) != 0; }
    const GenomeRecord& record(std::uint64_t uid) const;

    // Uids of the genomes seeded into cells at generation 0, by cell id.
    std::vector<std::uint64_t> generation_zero_uids(int num_cells) const;

private:
    std::vector<ReplacementEvent> events_;
    std::vector<GenomeRecord> registry_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

// Replays the event stream over the generation-0 placement and returns the
// uid occupying each cell afterwards. Independent route to the final map
// contents, used to cross-check the engine's bookkeeping.
std::vector<std::uint64_t> replay_final_uids(const LineageLog& log, int num_cells);

}  // namespace move
