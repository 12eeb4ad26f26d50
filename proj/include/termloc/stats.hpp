#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "termloc/errors.hpp"

namespace termloc {

struct MannWhitneyResult {
    double u = 0.0; // statistic of the first sample
    double p = 1.0; // two-sided
    bool exact = false;
};

namespace detail {

// Midranks (1-based) of the pooled sample.
inline std::vector<double> midranks(const std::vector<double>& pooled, double& tie_term) {
    const auto n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return pooled[a] < pooled[b]; });
    std::vector<double> ranks(n);
    tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[order[j]] == pooled[order[i]])
            ++j;
        const double r = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t m = i; m < j; ++m)
            ranks[order[m]] = r;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }
    return ranks;
}

} // namespace detail

inline constexpr std::size_t kExactMannWhitneyLimit = 16;

/// Mann-Whitney U with midranks for ties. Exact permutation p-value when the
/// pooled size is at most 16, else normal approximation with tie-corrected
/// variance and continuity correction.
inline MannWhitneyResult mann_whitney_u(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.empty() || y.empty())
        throw ContractError("mann_whitney_u: both samples must be non-empty");
    const auto nx = x.size();
    const auto ny = y.size();
    const auto n = nx + ny;
    std::vector<double> pooled(x);
    pooled.insert(pooled.end(), y.begin(), y.end());
    double tie_term = 0.0;
    const auto ranks = detail::midranks(pooled, tie_term);

    const double rx = std::accumulate(ranks.begin(), ranks.begin() + static_cast<long>(nx), 0.0);
    const double dnx = static_cast<double>(nx);
    const double dny = static_cast<double>(ny);
    MannWhitneyResult res;
    res.u = rx - dnx * (dnx + 1.0) / 2.0;
    const double mean_u = dnx * dny / 2.0;
    const double obs = std::abs(res.u - mean_u);
    constexpr double tol = 1e-9;

    if (n <= kExactMannWhitneyLimit) {
        // every way of assigning nx of the pooled ranks to the first sample
        res.exact = true;
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(nx), true);
        std::size_t total = 0, extreme = 0;
        do {
            double r = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i])
                    r += ranks[i];
            const double u = r - dnx * (dnx + 1.0) / 2.0;
            ++total;
            if (std::abs(u - mean_u) >= obs - tol)
                ++extreme;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        res.p = static_cast<double>(extreme) / static_cast<double>(total);
        return res;
    }

    const double dn = static_cast<double>(n);
    const double var = dnx * dny / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (var <= 0.0) {
        res.p = 1.0;
        return res;
    }
    const double z = std::max(0.0, obs - 0.5) / std::sqrt(var);
    res.p = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return res;
}

/// Sample quantile with linear interpolation between order statistics
/// (the R type-7 definition).
inline double quantile(std::vector<double> v, double q) {
    if (v.empty())
        throw ContractError("quantile of an empty sample");
    std::sort(v.begin(), v.end());
    const double h = (static_cast<double>(v.size()) - 1.0) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

struct RankSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;
    double min = 0.0;
    double max = 0.0;
};

inline RankSummary summarize(const std::vector<double>& v) {
    RankSummary s;
    s.count = v.size();
    if (v.empty())
        return s;
    s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    s.q1 = quantile(v, 0.25);
    s.q2 = quantile(v, 0.5);
    s.q3 = quantile(v, 0.75);
    s.min = *std::min_element(v.begin(), v.end());
    s.max = *std::max_element(v.begin(), v.end());
    return s;
}

} // namespace termloc
