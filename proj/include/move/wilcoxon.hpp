#pragma once

#include <span>

namespace move {

enum class Alternative { TwoSided, Greater, Less };

struct RankSumResult {
    double statistic = 0.0;  // rank sum of sample a (midranks for ties)
    double p_value = 1.0;
    bool exact = false;
};

// Wilcoxon rank-sum (Mann-Whitney) test. Exact enumeration of all rank
// assignments when both samples have at most 10 values, otherwise a normal
// approximation with tie and continuity corrections. `Greater` tests the
// alternative that sample a tends larger. Throws DegenerateStatError when
// every pooled value is identical; requires at least 3 values per sample.
RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                Alternative alternative = Alternative::TwoSided);

// Forced code paths, exposed for cross-validation.
RankSumResult wilcoxon_rank_sum_exact(std::span<const double> a, std::span<const double> b,
                                      Alternative alternative);
RankSumResult wilcoxon_rank_sum_normal(std::span<const double> a, std::span<const double> b,
                                       Alternative alternative);

}  // namespace move
