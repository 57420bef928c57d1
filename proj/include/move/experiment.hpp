#pragma once

#include <optional>
#include <string>
#include <vector>

#include "move/engine.hpp"
#include "move/hillclimber.hpp"
#include "move/image.hpp"
#include "move/serialize.hpp"

namespace move {

// One experimental condition (the spec's run-level settings).
struct RunSettings {
    int num_cells = 50;
    int functions_per_cell = 5;
    int generations = 200;
    JumpPolicy policy = JumpPolicy::Unlimited;
    int image_width = 64;
    int image_height = 64;
    cppn::MutationParams mutation;
    std::vector<std::string> objectives;  // metric names, registry order

    MetricRegistry registry() const;
};

struct SweepAxes {
    std::vector<int> functions_per_cell{5};
    std::vector<int> num_cells{50};
    std::vector<JumpPolicy> jump_policies{JumpPolicy::Unlimited};
};

struct ExperimentConfig {
    RunSettings run;
    int trials = 10;
    std::uint64_t base_seed = 20240501;
    std::string output_dir = "out";
    std::vector<std::string> targets{"builtin:sunrise"};
    double alpha = 0.05;
    int workers = 0;  // 0 = hardware concurrency
    int single_objective_children = 7;
    std::string normalization_table;  // defaults to <output_dir>/normalization.json
    SweepAxes sweep;

    std::string table_path() const;
};

ExperimentConfig default_config();

// "desk": m=50, G=200, 64x64, 10 trials. "paper": m=100, G=1000, 20 trials.
void apply_profile(ExperimentConfig& cfg, const std::string& profile);

Json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const Json& j);

// Recursive object merge; unknown keys raise ConfigError.
void deep_merge(Json& base, const Json& patch, const std::string& path = "");

// Applies MOVE_-prefixed environment variables, e.g.
// MOVE_run__num_cells=100 sets cfg json ["run"]["num_cells"].
void apply_env_overrides(Json& j, const std::string& prefix = "MOVE_");

void validate_config(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------

struct PreparedTarget {
    std::string id;
    ImageBuffer image;
};

// "builtin:<name>" or a PNG path (bilinear-resampled to width x height).
PreparedTarget prepare_target(const std::string& spec, int width, int height);

std::string condition_id_move(const RunSettings& rs);
std::string sanitize_id(const std::string& s);

// Trial runners. Seeds derive as trial_seed(base_seed, trial); the
// single-objective runs fold the objective name in as well.
RunRecord run_move_trial(const RunSettings& rs, const PreparedTarget& target, int trial,
                         std::uint64_t base_seed, int eval_workers);
RunRecord run_all_objective_trial(const RunSettings& rs, const PreparedTarget& target, int trial,
                                  std::uint64_t base_seed, int eval_workers);
RunRecord run_single_objective_trial(const RunSettings& rs, const PreparedTarget& target,
                                     int objective, int children_per_generation, int trial,
                                     std::uint64_t base_seed, int eval_workers);

// ---------------------------------------------------------------------------

struct ReportFiles {
    std::string stats_csv;
    std::string summary_text;
    Json summary_json;
    std::string comparisons_csv;
};

// Per-run statistics table, per-condition mean +/- 95% CI summary, and
// pairwise rank-sum comparisons of champion fitness.
ReportFiles build_report(const std::vector<RunRecord>& records, const NormalizationTable& table,
                         double alpha);

std::vector<RunRecord> load_records_under(const std::string& dir);

// Commands behind the CLI. They throw ConfigError / IoError /
// DegenerateStatError; the CLI maps these to exit codes.
void cmd_calibrate(const ExperimentConfig& cfg);
void cmd_run(const ExperimentConfig& cfg);
void cmd_baseline(const ExperimentConfig& cfg, const std::string& variant);  // "all" | "single"
void cmd_sweep(const ExperimentConfig& cfg);
void cmd_report(const ExperimentConfig& cfg, const std::string& runs_dir);
void cmd_render(const ExperimentConfig& cfg, const std::string& run_file, const std::string& what);

}  // namespace move
