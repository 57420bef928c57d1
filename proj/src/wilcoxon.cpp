#include "move/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "move/errors.hpp"

namespace move {

namespace {

// Midranks of the pooled samples, doubled so ties stay integral.
struct Pooled {
    std::vector<std::int64_t> double_ranks;  // per pooled index, a's values first
    std::size_t n1 = 0, n2 = 0;
    double tie_term = 0.0;  // sum over tie groups of t^3 - t
};

Pooled pool_and_rank(std::span<const double> a, std::span<const double> b) {
    Pooled out;
    out.n1 = a.size();
    out.n2 = b.size();
    const std::size_t n = a.size() + b.size();

    std::vector<double> values(n);
    std::copy(a.begin(), a.end(), values.begin());
    std::copy(b.begin(), b.end(), values.begin() + static_cast<std::ptrdiff_t>(a.size()));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

    out.double_ranks.assign(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j (0-based) share the midrank ((i+1) + (j+1)) / 2
        const std::int64_t doubled = static_cast<std::int64_t>(i + j + 2);
        for (std::size_t k = i; k <= j; ++k) out.double_ranks[order[k]] = doubled;
        const double t = static_cast<double>(j - i + 1);
        out.tie_term += t * t * t - t;
        i = j + 1;
    }
    if (out.tie_term >= static_cast<double>(n) * n * n - n)
        throw DegenerateStatError("rank-sum test degenerate: all values identical");
    return out;
}

std::int64_t statistic_of_a(const Pooled& p) {
    std::int64_t w2 = 0;
    for (std::size_t i = 0; i < p.n1; ++i) w2 += p.double_ranks[i];
    return w2;
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

RankSumResult wilcoxon_rank_sum_exact(std::span<const double> a, std::span<const double> b,
                                      Alternative alternative) {
    const Pooled p = pool_and_rank(a, b);
    const std::int64_t w2 = statistic_of_a(p);
    const std::size_t n = p.n1 + p.n2;

    // every n1-subset of pooled positions
    std::vector<std::size_t> comb(p.n1);
    std::iota(comb.begin(), comb.end(), 0);
    std::uint64_t total = 0, count_le = 0, count_ge = 0;
    while (true) {
        std::int64_t s = 0;
        for (std::size_t i : comb) s += p.double_ranks[i];
        ++total;
        if (s <= w2) ++count_le;
        if (s >= w2) ++count_ge;

        // next combination in lexicographic order
        std::size_t k = p.n1;
        while (k > 0) {
            --k;
            if (comb[k] != k + n - p.n1) break;
            if (k == 0) {
                k = p.n1;  // done
                break;
            }
        }
        if (k == p.n1) break;
        ++comb[k];
        for (std::size_t j = k + 1; j < p.n1; ++j) comb[j] = comb[j - 1] + 1;
    }

    const double p_le = static_cast<double>(count_le) / static_cast<double>(total);
    const double p_ge = static_cast<double>(count_ge) / static_cast<double>(total);

    RankSumResult r;
    r.statistic = static_cast<double>(w2) / 2.0;
    r.exact = true;
    switch (alternative) {
        case Alternative::Greater: r.p_value = p_ge; break;
        case Alternative::Less: r.p_value = p_le; break;
        case Alternative::TwoSided: r.p_value = std::min(1.0, 2.0 * std::min(p_le, p_ge)); break;
    }
    return r;
}

RankSumResult wilcoxon_rank_sum_normal(std::span<const double> a, std::span<const double> b,
                                       Alternative alternative) {
    const Pooled p = pool_and_rank(a, b);
    const double w = static_cast<double>(statistic_of_a(p)) / 2.0;
    const double n1 = static_cast<double>(p.n1), n2 = static_cast<double>(p.n2);
    const double n = n1 + n2;

    const double mean = n1 * (n + 1.0) / 2.0;
    const double var = (n1 * n2 / 12.0) * ((n + 1.0) - p.tie_term / (n * (n - 1.0)));
    if (!(var > 0.0)) throw DegenerateStatError("rank-sum test degenerate: zero variance");
    const double sd = std::sqrt(var);

    RankSumResult r;
    r.statistic = w;
    r.exact = false;
    switch (alternative) {
        case Alternative::Greater:
            r.p_value = normal_sf((w - mean - 0.5) / sd);
            break;
        case Alternative::Less:
            r.p_value = 1.0 - normal_sf((w - mean + 0.5) / sd);
            break;
        case Alternative::TwoSided: {
            const double z = std::max(0.0, std::abs(w - mean) - 0.5) / sd;
            r.p_value = std::min(1.0, 2.0 * normal_sf(z));
            break;
        }
    }
    return r;
}

RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                Alternative alternative) {
    if (a.size() < 3 || b.size() < 3)
        throw std::invalid_argument("rank-sum test needs at least 3 values per sample");
    if (a.size() <= 10 && b.size() <= 10) return wilcoxon_rank_sum_exact(a, b, alternative);
    return wilcoxon_rank_sum_normal(a, b, alternative);
}

}  // namespace move
