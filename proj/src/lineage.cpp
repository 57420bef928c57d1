#include "move/lineage.hpp"

#include <stdexcept>

namespace move {

void LineageLog::register_genome(GenomeRecord rec) {
    auto [it, inserted] = index_.emplace(rec.uid, registry_.size());
    if (!inserted) throw std::logic_error("LineageLog: duplicate genome uid");
    registry_.push_back(std::move(rec));
}

const GenomeRecord& LineageLog::record(std::uint64_t uid) const {
    auto it = index_.find(uid);
    if (it == index_.end()) throw std::out_of_range("LineageLog: unknown genome uid");
    return registry_[it->second];
}

std::vector<std::uint64_t> LineageLog::generation_zero_uids(int num_cells) const {
    std::vector<std::uint64_t> uids(static_cast<std::size_t>(num_cells), 0);
    for (const auto& rec : registry_) {
        if (rec.seed_cell) {
            const int c = *rec.seed_cell;
            if (c < 0 || c >= num_cells) throw std::out_of_range("LineageLog: seed cell out of range");
            uids[static_cast<std::size_t>(c)] = rec.uid;
        }
    }
    for (std::uint64_t u : uids)
        if (u == 0) throw std::logic_error("LineageLog: generation-0 placement incomplete");
    return uids;
}

std::vector<std::uint64_t> replay_final_uids(const LineageLog& log, int num_cells) {
    auto cells = log.generation_zero_uids(num_cells);
    for (const auto& ev : log.events()) {
        if (ev.target_cell < 0 || ev.target_cell >= num_cells)
            throw std::out_of_range("replay_final_uids: event target out of range");
        cells[static_cast<std::size_t>(ev.target_cell)] = ev.child_uid;
    }
    return cells;
}

}  // namespace move
