#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "move/image.hpp"
#include "move/subset.hpp"
#include "move/voting.hpp"

namespace move {

enum class MetricKind { Similarity, Dissimilarity };

// One objective function. Dissimilarity metrics are exposed negated so that
// greater is always better; voting only compares orderings, so the transform
// is free to be any monotone one.
struct MetricSpec {
    ObjectiveId id = 0;
    std::string name;
    MetricKind kind = MetricKind::Similarity;
};

using MetricRegistry = std::vector<MetricSpec>;

// The shipped metrics, in registry order:
//   neg_mse           -MSE over all RGB samples
//   psnr              10*log10(1/MSE) on luminance, capped at 80 dB
//   ssim              11x11 Gaussian window (sigma 1.5), C1=1e-4 C2=9e-4,
//                     valid-window mean over luminance
//   ms_ssim           multiscale ssim, canonical 5-scale weights, scale
//                     count reduced so the smallest scale is >= 16 px
//   neg_gmsd          -GMSD: 2x averaging+decimation, 1/3-Prewitt gradients,
//                     c=0.0026, deviation of the gradient-similarity map
//   neg_mdsi          -MDSI: published constants (C1=140 C2=55 C3=550 on the
//                     0..255 scale, alpha=0.6), deviation pooling
//   hist_intersection per-channel 32-bin histogram intersection
//   grad_cosine       mean normalized correlation of Sobel gradient fields
MetricRegistry default_registry();

// Registry built from a subset/reordering of the shipped metric names.
MetricRegistry registry_from_names(const std::vector<std::string>& names);

// Oriented (higher-is-better) score of image vs target; for asymmetric
// metrics the target is the reference. Both images must be the same size,
// at least 16 px on each side, with values in [0, 1].
double evaluate_metric(const MetricSpec& spec, const ImageBuffer& image,
                       const ImageBuffer& target);

// Full fitness vector for one phenotype, computed once per child and shared
// by every cell's vote.
FitnessVector evaluate_all(const ImageBuffer& image, const ImageBuffer& target,
                           const MetricRegistry& registry);

// ---------------------------------------------------------------------------
// Reporting-only normalization (never used inside voting).

struct NormalizationEntry {
    double best = 1.0;    // mean per-run maximum from the calibration runs
    double floor = 0.0;   // minimum observed during calibration
};

struct NormalizationTable {
    // target id -> objective name -> entry
    std::map<std::string, std::map<std::string, NormalizationEntry>> entries;
    std::vector<std::string> provenance;  // identifiers of the calibration runs

    const NormalizationEntry& lookup(const std::string& target_id,
                                     const std::string& objective) const;
    bool covers(const std::string& target_id, const MetricRegistry& registry) const;
};

// out[f] = (raw[f] - floor[f]) / (best[f] - floor[f]); the calibration
// mean-best maps to 1.0.
FitnessVector normalize(const FitnessVector& raw, const NormalizationTable& table,
                        const std::string& target_id, const MetricRegistry& registry);

double mean_normalized(const FitnessVector& raw, const NormalizationTable& table,
                       const std::string& target_id, const MetricRegistry& registry);

// Per-run extremes feeding calibration.
struct CalibrationRun {
    std::string run_id;
    FitnessVector max;  // best raw score per objective seen anywhere in the run
    FitnessVector min;
};

// best[f] = mean over runs of run max; floor[f] = minimum observed. Throws
// DegenerateStatError naming the objective when best <= floor.
NormalizationTable calibrate_table(const std::vector<CalibrationRun>& runs,
                                   const std::string& target_id, const MetricRegistry& registry);

// ---------------------------------------------------------------------------
// Analytic objectives with known optima, for exercising the engine without
// rendering: f_i(x) = -||x - c_i||^2.

struct SyntheticObjectives {
    std::vector<std::vector<double>> centers;

    static SyntheticObjectives unit_basis(int k);

    double evaluate(int index, std::span<const double> x) const;
    FitnessVector evaluate_all(std::span<const double> x) const;
};

}  // namespace move
